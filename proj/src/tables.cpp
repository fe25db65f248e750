#include "surgeon/tables.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "surgeon/embedded_data.hpp"

namespace surgeon {

namespace {

using nlohmann::json;

struct Token {
    enum class Kind { Number, Name, Plus, Minus, Slash };
    Kind kind = Kind::Number;
    long long value = 0;
    std::string name;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (c == '+') {
            out.push_back({Token::Kind::Plus, 0, {}});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::Kind::Minus, 0, {}});
            ++i;
        } else if (c == '/') {
            out.push_back({Token::Kind::Slash, 0, {}});
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            long long v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + (text[i++] - '0');
            out.push_back({Token::Kind::Number, v, {}});
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i])))
                name.push_back(text[i++]);
            out.push_back({Token::Kind::Name, 0, std::move(name)});
        } else {
            throw parse_error("bad character in expression: '" + text + "'");
        }
    }
    return out;
}

} // namespace

SymExpr SymExpr::parse(const std::string& text) {
    SymExpr expr;
    auto tokens = tokenize(text);
    std::size_t i = 0;
    auto note_symbol = [&expr](char c) {
        if (std::find(expr.symbols_.begin(), expr.symbols_.end(), c) == expr.symbols_.end())
            expr.symbols_.push_back(c);
    };
    auto atom = [&](bool& is_symbol, long long& value, char& sym, bool& is_inf) {
        if (i >= tokens.size()) throw parse_error("truncated expression: '" + text + "'");
        const Token& t = tokens[i];
        if (t.kind == Token::Kind::Number) {
            is_symbol = false;
            value = t.value;
        } else if (t.kind == Token::Kind::Name) {
            if (t.name == "inf") {
                is_inf = true;
            } else if (t.name.size() == 1) {
                is_symbol = true;
                sym = t.name[0];
                note_symbol(sym);
            } else {
                throw parse_error("unknown name '" + t.name + "' in '" + text + "'");
            }
        } else {
            throw parse_error("expected atom in '" + text + "'");
        }
        ++i;
    };

    bool first = true;
    while (i < tokens.size()) {
        Term term;
        if (tokens[i].kind == Token::Kind::Plus) {
            ++i;
        } else if (tokens[i].kind == Token::Kind::Minus) {
            term.sign = -1;
            ++i;
        } else if (!first) {
            throw parse_error("expected +/- in '" + text + "'");
        }
        first = false;
        bool inf = false;
        atom(term.num_is_symbol, term.num, term.num_sym, inf);
        term.is_inf = inf;
        if (!inf && !term.num_is_symbol && i < tokens.size() &&
            tokens[i].kind == Token::Kind::Name && tokens[i].name.size() == 1) {
            // implicit product like "6b"
            term.mult = term.num;
            atom(term.num_is_symbol, term.num, term.num_sym, inf);
        }
        if (!inf && i < tokens.size() && tokens[i].kind == Token::Kind::Slash) {
            ++i;
            term.is_quotient = true;
            bool dummy_inf = false;
            atom(term.den_is_symbol, term.den, term.den_sym, dummy_inf);
            if (dummy_inf) throw parse_error("inf denominator in '" + text + "'");
        }
        expr.terms_.push_back(term);
    }
    if (expr.terms_.empty()) throw parse_error("empty expression");
    return expr;
}

ExtRational SymExpr::eval(const SymEnv& env) const {
    auto value_of = [&env](bool is_symbol, long long value, char sym) -> long long {
        if (!is_symbol) return value;
        auto it = env.find(sym);
        if (it == env.end()) throw parse_error(std::string("unbound symbol '") + sym + "'");
        return it->second;
    };
    ExtRational total(0);
    for (const auto& t : terms_) {
        ExtRational v;
        if (t.is_inf) {
            v = ExtRational::infinity();
        } else {
            long long num = t.mult * value_of(t.num_is_symbol, t.num, t.num_sym);
            long long den = t.is_quotient ? value_of(t.den_is_symbol, t.den, t.den_sym) : 1;
            if (num == 0 && den == 0)
                v = ExtRational::infinity(); // 0/0 does not occur in the datasets
            else
                v = ExtRational(num, den);
        }
        if (t.sign < 0) v = -v;
        total = total + v;
    }
    return total;
}

namespace {

std::vector<SymExpr> parse_chain_exprs(const std::string& text, std::vector<char>& symbols) {
    std::vector<SymExpr> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        SymExpr e = SymExpr::parse(item);
        for (char c : e.symbols())
            if (std::find(symbols.begin(), symbols.end(), c) == symbols.end())
                symbols.push_back(c);
        out.push_back(std::move(e));
    }
    return out;
}

TableData parse_table(std::string_view raw) {
    json doc = json::parse(raw);
    TableData data;
    data.name = doc.at("table").get<std::string>();
    for (const auto& j : doc.at("rows")) {
        TableRow row;
        row.id = j.at("row").get<std::string>();
        row.marker = j.value("marker", "");
        row.note = j.value("note", "");
        std::vector<char> symbols;
        auto param = [&](const char* key) {
            SymExpr e = SymExpr::parse(j.at(key).get<std::string>());
            for (char c : e.symbols())
                if (std::find(symbols.begin(), symbols.end(), c) == symbols.end())
                    symbols.push_back(c);
            return e;
        };
        row.m = param("m");
        row.r = param("r");
        row.s = param("s");
        row.b = param("b");
        if (j.contains("Y")) row.y_literal = j.at("Y").get<std::string>();
        if (j.contains("Y_chain"))
            row.y_chain = parse_chain_exprs(j.at("Y_chain").get<std::string>(), symbols);
        if (j.contains("Y_p"))
            row.y_pq = std::make_pair(param("Y_p"), param("Y_q"));
        if (j.contains("Ystar")) row.ystar_literal = j.at("Ystar").get<std::string>();
        if (j.contains("Ystar_chain"))
            row.ystar_chain = parse_chain_exprs(j.at("Ystar_chain").get<std::string>(), symbols);
        symbols.erase(std::remove(symbols.begin(), symbols.end(), 'k'), symbols.end());
        row.symbols = symbols;
        if (j.contains("k")) row.k_value = std::stoll(j.at("k").get<std::string>());
        data.rows.push_back(std::move(row));
    }
    return data;
}

const std::map<std::string, std::string_view>& raw_tables() {
    static const std::map<std::string, std::string_view> tables = {
        {"table1", embedded::k_table1},
        {"table2", embedded::k_table2},
        {"table3", embedded::k_table3},
        {"cabledgofk", embedded::k_cabledgofk},
        {"cabledgofk2", embedded::k_cabledgofk2},
        {"pairs", embedded::k_pairs},
        {"lenslens", embedded::k_lenslens},
        {"lensred", embedded::k_lensred},
        {"redlens", embedded::k_redlens},
        {"redred", embedded::k_redred},
    };
    return tables;
}

} // namespace

const TableData& table_data(const std::string& id) {
    static const std::map<std::string, TableData> cache = [] {
        std::map<std::string, TableData> out;
        for (const auto& [name, raw] : raw_tables()) out.emplace(name, parse_table(raw));
        return out;
    }();
    auto it = cache.find(id);
    if (it == cache.end()) throw unknown_table("unknown table id: " + id);
    return it->second;
}

std::vector<std::string> table_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, raw] : raw_tables()) ids.push_back(id);
    ids.push_back("table8");
    std::sort(ids.begin(), ids.end());
    return ids;
}

const Allowlist& known_discrepancies() {
    static const Allowlist list = [] {
        Allowlist l;
        json doc = json::parse(embedded::k_known_discrepancies);
        for (const auto& e : doc.at("entries"))
            l.entries.push_back({e.at("table").get<std::string>(), e.at("row").get<std::string>(),
                                 e.at("column").get<std::string>(), e.at("note").get<std::string>()});
        return l;
    }();
    return list;
}

const Allowlist::Entry* Allowlist::find(const std::string& table, const std::string& row,
                                        const std::string& column) const {
    for (const auto& e : entries)
        if (e.table == table && e.row == row && e.column == column) return &e;
    return nullptr;
}

namespace {

struct Comparison {
    RowStatus status;
    bool oriented;
};

Comparison compare(const ClosedManifold& expected, const ClosedManifold& computed) {
    if (is_homeomorphic(expected, computed, true)) return {RowStatus::PassOriented, true};
    if (is_homeomorphic(expected, computed, false)) return {RowStatus::PassUnoriented, false};
    return {RowStatus::Mismatch, false};
}

std::string params_string(const FamilyParams& p, bool with_k) {
    std::string out = "m=" + to_string(p.m) + ",r=" + to_string(p.r) + ",s=" + to_string(p.s) +
                      ",b=" + to_string(p.b);
    if (with_k) out += ",k=" + std::to_string(p.k);
    return out;
}

ChainDescription instantiate_chain(const std::vector<SymExpr>& exprs, const SymEnv& env) {
    ChainDescription c;
    for (const auto& e : exprs) c.coefficients.push_back(e.eval(env));
    return c;
}

void finish_row(ReportRow& out, const std::string& table, const std::string& bare_row) {
    if (out.failed()) {
        if (const auto* entry = known_discrepancies().find(table, bare_row, out.column)) {
            out.allowlisted = true;
            if (out.note.empty())
                out.note = entry->note;
            else
                out.note += "; " + entry->note;
        }
    }
}

} // namespace

VerificationReport verify_dhl() {
    VerificationReport report;
    const TableData& data = table_data("table1");
    for (const auto& row : data.rows) {
        SymEnv env;
        FamilyParams p{row.m.eval(env), row.r.eval(env), row.s.eval(env), row.b.eval(env),
                       row.k_value.value_or(0)};
        ReportRow out;
        out.table = "table1";
        out.row = row.id;
        out.column = "YxYstar";
        out.params = params_string(p, true);
        out.note = row.note;

        ClosedManifold expected_y = parse_manifold(*row.y_literal);
        ClosedManifold expected_ystar = parse_manifold(*row.ystar_literal);
        out.expected = to_string(expected_y) + " / " + to_string(expected_ystar);
        try {
            auto computed_y = compute_Y(p);
            ClosedManifold computed_ystar = compute_Ystar(p);
            if (!computed_y) {
                out.computed = "none / " + to_string(computed_ystar);
                out.status = RowStatus::Mismatch;
                out.note += (out.note.empty() ? "" : "; ");
                out.note += "no filling pattern matched";
            } else {
                out.computed = to_string(*computed_y) + " / " + to_string(computed_ystar);
                Comparison cy = compare(expected_y, *computed_y);
                Comparison cs = compare(expected_ystar, computed_ystar);
                out.oriented = cy.oriented && cs.oriented;
                out.status = std::max(cy.status, cs.status,
                                      [](RowStatus a, RowStatus b) { return int(a) < int(b); });
            }
        } catch (const error& e) {
            out.status = RowStatus::Unsupported;
            out.computed = "error";
            out.note += (out.note.empty() ? "" : "; ");
            out.note += e.what();
        }
        finish_row(out, "table1", row.id);
        report.rows.push_back(out);
    }
    return report;
}

namespace {

std::string instantiation_suffix(const SymEnv& env, const std::vector<char>& symbols,
                                 std::optional<long long> k = std::nullopt) {
    std::string out;
    for (char c : symbols) {
        out += out.empty() ? "[" : ",";
        out += std::string(1, c) + "=" + std::to_string(env.at(c));
    }
    if (k) {
        out += out.empty() ? "[" : ",";
        out += "k=" + std::to_string(*k);
    }
    if (!out.empty()) out += "]";
    return out;
}

void audit_row_instance(VerificationReport& report, const std::string& table, const TableRow& row,
                        const SymEnv& env, const AuditRanges& ranges) {
    FamilyParams p{row.m.eval(env), row.r.eval(env), row.s.eval(env), row.b.eval(env), 0};
    const std::string suffix = instantiation_suffix(env, row.symbols);

    // (b) listed ambient manifold against the magic / Whitehead evaluators
    ReportRow y_row;
    y_row.table = table;
    y_row.row = row.id + suffix;
    y_row.column = "Y";
    y_row.params = params_string(p, false);
    try {
        ClosedManifold expected;
        if (row.y_literal)
            expected = parse_manifold(*row.y_literal);
        else if (row.y_chain)
            expected = chain_eval(instantiate_chain(*row.y_chain, env));
        else if (row.y_pq)
            expected = manifold_from_pq(row.y_pq->first.eval(env).num,
                                        row.y_pq->second.eval(env).num);
        y_row.expected = to_string(expected);
        auto computed = compute_Y(p);
        if (!computed) {
            y_row.computed = "none";
            y_row.status = RowStatus::Mismatch;
            y_row.note = "no filling pattern matched";
        } else {
            y_row.computed = to_string(*computed);
            Comparison c = compare(expected, *computed);
            y_row.status = c.status;
            y_row.oriented = c.oriented;
        }
    } catch (const error& e) {
        y_row.status = RowStatus::Unsupported;
        y_row.computed = "error";
        y_row.note = e.what();
    }
    finish_row(y_row, table, row.id);
    report.rows.push_back(y_row);

    // (c) strong-inversion marker against the guarantee
    if (row.marker == "S") {
        ReportRow m_row;
        m_row.table = table;
        m_row.row = row.id + suffix;
        m_row.column = "marker";
        m_row.params = params_string(p, false);
        m_row.expected = "strongly-invertible-guaranteed";
        bool ok = strongly_invertible_guaranteed(p);
        m_row.computed = ok ? "true" : "false";
        m_row.status = ok ? RowStatus::PassOriented : RowStatus::Mismatch;
        m_row.oriented = ok;
        finish_row(m_row, table, row.id);
        report.rows.push_back(m_row);
    }

    // (a) listed surgered chain form against the general closed form
    if (!row.ystar_chain) return;
    for (long long k = ranges.lo; k <= ranges.hi; ++k) {
        SymEnv kenv = env;
        kenv['k'] = k;
        FamilyParams pk = p;
        pk.k = k;
        ReportRow s_row;
        s_row.table = table;
        s_row.row = row.id + instantiation_suffix(env, row.symbols, k);
        s_row.column = "Ystar";
        s_row.params = params_string(pk, true);
        try {
            ClosedManifold expected = chain_eval(instantiate_chain(*row.ystar_chain, kenv));
            ClosedManifold computed = compute_Ystar(pk);
            s_row.expected = to_string(expected);
            s_row.computed = to_string(computed);
            Comparison c = compare(expected, computed);
            s_row.status = c.status;
            s_row.oriented = c.oriented;
        } catch (const error& e) {
            s_row.status = RowStatus::Unsupported;
            s_row.computed = "error";
            s_row.note = e.what();
        }
        finish_row(s_row, table, row.id);
        report.rows.push_back(s_row);
    }
}

bool matcher_excludes_zero(const MagicMatcher& m) {
    return m.kind == MagicMatcher::Kind::OffsetInv || m.kind == MagicMatcher::Kind::DepOffsetInv;
}

VerificationReport audit_table8(const AuditRanges& ranges) {
    VerificationReport report;
    for (const auto& pat : magic_patterns()) {
        bool use_rat = false, use_n = false, use_m = false;
        bool n_nonzero = false, m_nonzero = false;
        for (const auto& slot : pat.slots) {
            switch (slot.kind) {
            case MagicMatcher::Kind::Rat:
                use_rat = true;
                break;
            case MagicMatcher::Kind::Int:
            case MagicMatcher::Kind::OffsetInv:
                (slot.var == 'n' ? use_n : use_m) = true;
                if (matcher_excludes_zero(slot)) (slot.var == 'n' ? n_nonzero : m_nonzero) = true;
                break;
            case MagicMatcher::Kind::DepInt:
                use_n = true;
                break;
            case MagicMatcher::Kind::DepOffsetInv:
                use_n = true;
                (slot.var == 'n' ? use_n : use_m) = true;
                if (slot.var == 'n') n_nonzero = true; else m_nonzero = true;
                break;
            default:
                break;
            }
        }
        auto values = [&](bool used, bool nonzero) {
            std::vector<long long> out;
            if (!used) {
                out.push_back(0);
                return out;
            }
            for (long long v = ranges.lo; v <= ranges.hi; ++v)
                if (v != 0 || !nonzero) out.push_back(v);
            return out;
        };
        std::vector<std::pair<long long, long long>> rats;
        if (use_rat) {
            for (long long t = ranges.lo; t <= ranges.hi; ++t)
                for (long long u = 1; u <= ranges.hi; ++u)
                    if (std::gcd(t < 0 ? -t : t, u) == 1) rats.emplace_back(t, u);
        } else {
            rats.emplace_back(0, 1);
        }

        for (long long n : values(use_n, n_nonzero)) {
            for (long long m : values(use_m, m_nonzero)) {
                for (auto [t, u] : rats) {
                    MagicEnv env;
                    env.n = n;
                    env.m = m;
                    env.t = t;
                    env.u = u;
                    ReportRow out;
                    out.table = "table8";
                    out.row = pat.name;
                    {
                        std::string suffix;
                        if (use_n) suffix += (suffix.empty() ? "[" : ",") + std::string("n=") + std::to_string(n);
                        if (use_m) suffix += (suffix.empty() ? "[" : ",") + std::string("m=") + std::to_string(m);
                        if (use_rat)
                            suffix += (suffix.empty() ? "[" : ",") + std::string("t/u=") +
                                      std::to_string(t) + "/" + std::to_string(u);
                        if (!suffix.empty()) suffix += "]";
                        out.row += suffix;
                    }
                    out.column = "filling";
                    auto triple = pat.instantiate(env);
                    out.params = to_string(triple[0]) + ";" + to_string(triple[1]) + ";" +
                                 to_string(triple[2]);
                    try {
                        ClosedManifold expected = pat.evaluate(env);
                        out.expected = to_string(expected);
                        auto computed = magic_filling(triple[0], triple[1], triple[2]);
                        if (!computed) {
                            out.computed = "none";
                            out.status = RowStatus::Mismatch;
                            out.note = "instantiated filling did not match its own pattern";
                        } else {
                            out.computed = to_string(*computed);
                            Comparison c = compare(expected, *computed);
                            out.status = c.status;
                            out.oriented = c.oriented;
                        }
                    } catch (const error& e) {
                        out.status = RowStatus::Unsupported;
                        out.computed = "error";
                        out.note = e.what();
                    }
                    finish_row(out, "table8", pat.name);
                    report.rows.push_back(out);
                }
            }
        }
    }
    return report;
}

} // namespace

VerificationReport audit_table(const std::string& id, const AuditRanges& ranges) {
    if (id == "table8") return audit_table8(ranges);
    if (id == "table1" || id == "dhl") return verify_dhl();
    const TableData& data = table_data(id);
    VerificationReport report;
    for (const auto& row : data.rows) {
        bool use_n = std::find(row.symbols.begin(), row.symbols.end(), 'n') != row.symbols.end();
        bool use_b = std::find(row.symbols.begin(), row.symbols.end(), 'b') != row.symbols.end();
        for (long long n = use_n ? ranges.lo : 0; n <= (use_n ? ranges.hi : 0); ++n) {
            if (use_n && n == 0) continue;
            for (long long b = use_b ? ranges.lo : 0; b <= (use_b ? ranges.hi : 0); ++b) {
                if (use_b && b == 0) continue;
                SymEnv env;
                if (use_n) env['n'] = n;
                if (use_b) env['b'] = b;
                audit_row_instance(report, id, row, env, ranges);
            }
        }
    }
    return report;
}

} // namespace surgeon
