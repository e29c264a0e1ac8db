#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace solarlink::csv {

/// One physical record split into fields. Double-quoted fields may contain
/// commas and "" escapes; records never span lines.
std::vector<std::string> split_record(std::string_view line);

/// Quotes a field only when it contains a comma, quote or leading/trailing space.
std::string escape_field(std::string_view field);

void write_record(std::ostream& out, const std::vector<std::string>& fields);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

/// Reads a header plus rows; throws FormatError on an empty stream or a row
/// whose field count differs from the header.
Table read_table(std::istream& in);

/// Six significant digits, the precision every series and campaign file uses.
std::string format_number(double value);

} // namespace solarlink::csv
