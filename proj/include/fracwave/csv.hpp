#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace fracwave {

/// CSV emission with a '#'-prefixed metadata header. Bodies are
/// deterministic for a fixed config+seed (no timestamps anywhere).
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void meta(const std::string& key, const std::string& value);
    void meta(const std::string& key, double value);
    void meta(const std::string& key, std::uint64_t value);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void raw_row(const std::string& line);

private:
    std::ostream& out_;
};

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

} // namespace fracwave
