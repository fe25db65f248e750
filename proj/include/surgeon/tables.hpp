#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "surgeon/families.hpp"
#include "surgeon/report.hpp"

namespace surgeon {

/// Environment for the symbolic table entries (integer-valued symbols).
using SymEnv = std::map<char, long long>;

/// Tiny expression language for table cells: sums of terms, where a term is
/// an integer, a symbol, or a quotient of those ("-b-1", "1-n", "-4+1/n",
/// "inf").  Evaluation is exact over Q^.
struct SymExpr {
    static SymExpr parse(const std::string& text);
    ExtRational eval(const SymEnv& env) const;
    const std::vector<char>& symbols() const { return symbols_; }

  private:
    struct Term {
        int sign = 1;
        long long mult = 1; // coefficient of a "6b"-style product
        bool is_quotient = false;
        bool num_is_symbol = false, den_is_symbol = false;
        long long num = 0, den = 1;
        char num_sym = 0, den_sym = 0;
        bool is_inf = false;
    };
    std::vector<Term> terms_;
    std::vector<char> symbols_;
};

/// One row of a bundled verification dataset.
struct TableRow {
    std::string id;
    std::string marker; // "S" when the row is marked strongly invertible
    std::string note;
    SymExpr m, r, s, b;
    std::optional<long long> k_value;               // fixed k (census rows)
    std::optional<std::string> y_literal;           // "L(p,q)" or sums
    std::optional<std::vector<SymExpr>> y_chain;    // symbolic chain form
    std::optional<std::pair<SymExpr, SymExpr>> y_pq;
    std::optional<std::string> ystar_literal;
    std::optional<std::vector<SymExpr>> ystar_chain;
    std::vector<char> symbols; // union over all cells, k excluded
};

struct TableData {
    std::string name;
    std::vector<TableRow> rows;
};

const TableData& table_data(const std::string& id);
std::vector<std::string> table_ids();

struct Allowlist {
    struct Entry {
        std::string table, row, column, note;
    };
    std::vector<Entry> entries;

    const Entry* find(const std::string& table, const std::string& row,
                      const std::string& column) const;
};

const Allowlist& known_discrepancies();

struct AuditRanges {
    long long lo = -6;
    long long hi = 6;
};

/// Recomputes both fillings of every parameter row of the census dataset and
/// compares them with the recorded lens spaces up to unoriented
/// homeomorphism, recording the oriented status per row.
VerificationReport verify_dhl();

/// Instantiates the symbolic rows of one dataset over the given ranges and
/// checks listed surgered chain forms against the closed-form evaluator,
/// listed ambient manifolds against the magic/Whitehead evaluators, and
/// strong-inversion markers against the guarantee predicate.
VerificationReport audit_table(const std::string& id, const AuditRanges& ranges = {});

} // namespace surgeon
