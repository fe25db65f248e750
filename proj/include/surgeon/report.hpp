#pragma once

#include <string>
#include <vector>

namespace surgeon {

enum class RowStatus { PassOriented, PassUnoriented, Mismatch, Unsupported };

std::string to_string(RowStatus s);

struct ReportRow {
    std::string table;
    std::string row;      // dataset row id, with the instantiated symbols
    std::string column;   // Y, Ystar, marker, ...
    std::string params;
    std::string expected;
    std::string computed;
    RowStatus status = RowStatus::Mismatch;
    bool oriented = false;
    bool allowlisted = false;
    std::string note;

    bool failed() const {
        return status == RowStatus::Mismatch || status == RowStatus::Unsupported;
    }
};

struct VerificationReport {
    std::vector<ReportRow> rows;

    int count(RowStatus s) const;
    int unexplained_failures() const; // failures outside the allowlist
    bool clean() const { return unexplained_failures() == 0; }
    void append(const VerificationReport& other);
};

enum class ReportFormat { Csv, Json };

/// Deterministic serialization; identical reports produce identical bytes.
std::string emit_report(const VerificationReport& report, ReportFormat format);

} // namespace surgeon
