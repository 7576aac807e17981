#include "branchcov/report.hpp"

namespace branchcov {

std::optional<Format> parse_format(std::string_view name)
{
    if (name == "json")
        return Format::json;
    if (name == "csv")
        return Format::csv;
    if (name == "text")
        return Format::text;
    return std::nullopt;
}

std::string csv_field(std::string_view field)
{
    if (field.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string emit(const Report& report, Format format)
{
    switch (format) {
    case Format::json: {
        auto doc = report.json;
        if (!report.passed) {
            doc["passed"] = false;
            doc["witness"] = report.witness.value_or("");
        }
        return doc.dump() + "\n";
    }
    case Format::csv: {
        std::string out;
        auto line = [&](const std::vector<std::string>& fields) {
            for (std::size_t i = 0; i < fields.size(); ++i) {
                if (i)
                    out += ',';
                out += csv_field(fields[i]);
            }
            out += "\r\n";
        };
        line(report.csv_header);
        for (const auto& row : report.csv_rows)
            line(row);
        return out;
    }
    case Format::text: {
        std::string out;
        for (const auto& l : report.text)
            out += l + "\n";
        if (!report.passed)
            out += "CONTRACT VIOLATION: " + report.witness.value_or("(no witness)") + "\n";
        return out;
    }
    }
    return {};
}

} // namespace branchcov
