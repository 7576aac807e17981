#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace branchcov {

enum class Format { json, csv, text };

std::optional<Format> parse_format(std::string_view name);

/// Output of one CLI subcommand, renderable in every format.
struct Report {
    nlohmann::json json = nlohmann::json::object(); ///< keys are emitted sorted
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;
    std::vector<std::string> text;
    bool passed = true;
    std::optional<std::string> witness; ///< minimal counterexample when !passed

    void fail(std::string why)
    {
        if (passed)
            witness = std::move(why);
        passed = false;
    }
};

/// Quotes a CSV field when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view field);

/// Deterministic rendering: canonical compact JSON, RFC 4180 CSV, or text lines.
std::string emit(const Report& report, Format format);

} // namespace branchcov
