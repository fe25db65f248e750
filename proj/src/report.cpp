#include "surgeon/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace surgeon {

std::string to_string(RowStatus s) {
    switch (s) {
    case RowStatus::PassOriented: return "pass-oriented";
    case RowStatus::PassUnoriented: return "pass-unoriented";
    case RowStatus::Mismatch: return "mismatch";
    case RowStatus::Unsupported: return "unsupported";
    }
    return "?";
}

int VerificationReport::count(RowStatus s) const {
    int n = 0;
    for (const auto& r : rows)
        if (r.status == s) ++n;
    return n;
}

int VerificationReport::unexplained_failures() const {
    int n = 0;
    for (const auto& r : rows)
        if (r.failed() && !r.allowlisted) ++n;
    return n;
}

void VerificationReport::append(const VerificationReport& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

} // namespace

std::string emit_report(const VerificationReport& report, ReportFormat format) {
    if (format == ReportFormat::Csv) {
        std::ostringstream out;
        out << "table,row,params,expected,computed,status,oriented,note\n";
        for (const auto& r : report.rows) {
            out << csv_escape(r.table) << ',' << csv_escape(r.row + ":" + r.column) << ','
                << csv_escape(r.params) << ',' << csv_escape(r.expected) << ','
                << csv_escape(r.computed) << ',' << to_string(r.status) << ','
                << (r.oriented ? "true" : "false") << ',' << csv_escape(r.note) << '\n';
        }
        return out.str();
    }

    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const auto& r : report.rows) {
        doc["rows"].push_back({{"table", r.table},
                               {"row", r.row},
                               {"column", r.column},
                               {"params", r.params},
                               {"expected", r.expected},
                               {"computed", r.computed},
                               {"status", to_string(r.status)},
                               {"oriented", r.oriented},
                               {"allowlisted", r.allowlisted},
                               {"note", r.note}});
    }
    doc["summary"] = {{"total", report.rows.size()},
                      {"pass_oriented", report.count(RowStatus::PassOriented)},
                      {"pass_unoriented", report.count(RowStatus::PassUnoriented)},
                      {"mismatch", report.count(RowStatus::Mismatch)},
                      {"unsupported", report.count(RowStatus::Unsupported)},
                      {"unexplained_failures", report.unexplained_failures()},
                      {"clean", report.clean()}};
    return doc.dump(2) + "\n";
}

} // namespace surgeon
