#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iomanip>

namespace ek::cli {

std::optional<OutputFormat> parse_format(std::string_view name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    return std::nullopt;
}

std::string to_string(Status status) {
    switch (status) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Info: return "info";
    }
    return "info";
}

Json number(double value) {
    if (!std::isfinite(value)) {
        return value;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return std::strtod(buf, nullptr);
}

namespace {

std::string cell_text(const Json& v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_float()) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v.get<double>());
        return buf;
    }
    return v.dump();
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> columns_of(const RunReport& report) {
    std::vector<std::string> cols;
    if (!report.results.empty()) {
        for (const auto& item : report.results.front().items()) {
            cols.push_back(item.key());
        }
    }
    return cols;
}

void render_table(const RunReport& report, std::ostream& out) {
    out << report.command;
    for (const auto& item : report.parameters.items()) {
        out << "  " << item.key() << "=" << cell_text(item.value());
    }
    out << "\n";
    const auto cols = columns_of(report);
    std::vector<std::size_t> width(cols.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        width[c] = cols[c].size();
    }
    for (const auto& row : report.results) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            line.push_back(row.contains(cols[c]) ? cell_text(row[cols[c]]) : "");
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            out << (c == 0 ? "" : "  ");
            if (c + 1 < line.size()) {
                out << std::left << std::setw(static_cast<int>(width[c]));
            }
            out << line[c];
        }
        out << "\n";
    };
    if (!cols.empty()) {
        emit(cols);
        for (const auto& line : cells) {
            emit(line);
        }
    }
    char elapsed[32];
    std::snprintf(elapsed, sizeof elapsed, "%.6g", report.elapsed_s);
    out << "status: " << to_string(report.status) << "  elapsed: " << elapsed << " s\n";
}

void render_csv(const RunReport& report, std::ostream& out) {
    const auto cols = columns_of(report);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        out << (c == 0 ? "" : ",") << csv_quote(cols[c]);
    }
    out << "\n";
    for (const auto& row : report.results) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Json& v = row.contains(cols[c]) ? row[cols[c]] : Json();
            out << (c == 0 ? "" : ",") << (v.is_string() ? csv_quote(v.get<std::string>()) : cell_text(v));
        }
        out << "\n";
    }
}

}  // namespace

void render(const RunReport& report, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::Table:
            render_table(report, out);
            break;
        case OutputFormat::Csv:
            render_csv(report, out);
            break;
        case OutputFormat::Json: {
            Json doc = {{"command", report.command},
                        {"parameters", report.parameters},
                        {"results", report.results},
                        {"status", to_string(report.status)},
                        {"elapsed_s", number(report.elapsed_s)}};
            out << doc.dump(2) << "\n";
            break;
        }
    }
}

}  // namespace ek::cli
