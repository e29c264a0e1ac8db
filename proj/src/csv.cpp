#include "solarlink/csv.hpp"

#include "solarlink/errors.hpp"

#include <istream>
#include <ostream>
#include <fmt/format.h>

namespace solarlink::csv {

std::vector<std::string> split_record(std::string_view line)
{
    if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);

    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    if (quoted)
        throw FormatError("unterminated quoted field");
    fields.push_back(std::move(field));
    return fields;
}

std::string escape_field(std::string_view field)
{
    const bool needs_quotes = field.find_first_of(",\"") != std::string_view::npos ||
                              (!field.empty() && (field.front() == ' ' || field.back() == ' '));
    if (!needs_quotes)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_record(std::ostream& out, const std::vector<std::string>& fields)
{
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out << ',';
        out << escape_field(fields[i]);
    }
    out << '\n';
}

Table read_table(std::istream& in)
{
    Table table;
    std::string line;
    if (!std::getline(in, line))
        throw FormatError("empty input: missing header row");
    table.header = split_record(line);
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r")
            continue;
        auto fields = split_record(line);
        if (fields.size() != table.header.size())
            throw FormatError(fmt::format("line {}: expected {} fields, got {}", line_no,
                                          table.header.size(), fields.size()));
        table.rows.push_back(std::move(fields));
    }
    return table;
}

std::string format_number(double value)
{
    return fmt::format("{:.6g}", value);
}

} // namespace solarlink::csv
