#ifndef EK_TOOLS_REPORT_HPP
#define EK_TOOLS_REPORT_HPP

#include "json.hpp"

#include <optional>
#include <utility>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace ek::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Table, Csv, Json };

/// Parses "table", "csv" or "json"; std::nullopt otherwise.
std::optional<OutputFormat> parse_format(std::string_view name);

enum class Status { Pass, Fail, Info };

std::string to_string(Status status);

/// Outcome of one CLI invocation. Rows are flat JSON objects sharing the same
/// keys in the same order.
struct RunReport {
    explicit RunReport(std::string name) : command(std::move(name)) {}

    std::string command;
    Json parameters = Json::object();
    std::vector<Json> results;
    Status status = Status::Info;
    double elapsed_s = 0.0;

    /// 1 for Fail, 0 otherwise.
    int exit_code() const { return status == Status::Fail ? 1 : 0; }
};

/// Number rounded to 12 significant digits, the precision of every printed value.
Json number(double value);

/// "PASS" / "FAIL".
inline const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

void render(const RunReport& report, OutputFormat format, std::ostream& out);

}  // namespace ek::cli

#endif  // EK_TOOLS_REPORT_HPP
