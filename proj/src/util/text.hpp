#pragma once

#include <string>
#include <vector>

namespace skyplan {

// Shortest decimal form that parses back to the identical double. Used for
// CSV output so emitted files are byte-stable and round-trip exactly.
std::string format_double(double value);

// Splits one CSV line on commas. No quoting: none of our fields contain commas.
std::vector<std::string> split_csv_line(const std::string& line);

double parse_double(const std::string& token, const std::string& context);
long long parse_int(const std::string& token, const std::string& context);

}  // namespace skyplan
