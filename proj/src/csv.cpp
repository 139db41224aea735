#include "fracwave/csv.hpp"

#include <cmath>
#include <cstdio>

namespace fracwave {

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    char buf[40];
    // shortest form that round-trips
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v)
            break;
    }
    return buf;
}

void CsvWriter::meta(const std::string& key, const std::string& value)
{
    out_ << "# " << key << "=" << value << "\n";
}

void CsvWriter::meta(const std::string& key, double value)
{
    out_ << "# " << key << "=" << format_double(value) << "\n";
}

void CsvWriter::meta(const std::string& key, std::uint64_t value)
{
    out_ << "# " << key << "=" << value << "\n";
}

void CsvWriter::header(const std::vector<std::string>& columns)
{
    for (std::size_t i = 0; i < columns.size(); ++i)
        out_ << (i ? "," : "") << columns[i];
    out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values)
{
    for (std::size_t i = 0; i < values.size(); ++i)
        out_ << (i ? "," : "") << format_double(values[i]);
    out_ << "\n";
}

void CsvWriter::raw_row(const std::string& line)
{
    out_ << line << "\n";
}

} // namespace fracwave
