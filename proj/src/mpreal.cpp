#include "fracwave/mpreal.hpp"

// All of MpReal is inline; this TU just anchors the header in the build.
