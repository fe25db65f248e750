#include "surgeon/families.hpp"

#include <utility>

#include <nlohmann/json.hpp>

#include "surgeon/embedded_data.hpp"

namespace surgeon {

namespace {

using nlohmann::json;

MagicMatcher parse_matcher(const json& j) {
    MagicMatcher m;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "const") {
        m.kind = MagicMatcher::Kind::Const;
        m.value = parse_ext_rational(j.at("value").get<std::string>());
    } else if (kind == "rat") {
        m.kind = MagicMatcher::Kind::Rat;
    } else if (kind == "int") {
        m.kind = MagicMatcher::Kind::Int;
        m.var = j.at("var").get<std::string>().at(0);
    } else if (kind == "offset_inv") {
        m.kind = MagicMatcher::Kind::OffsetInv;
        m.base = parse_ext_rational(j.at("base").get<std::string>());
        m.var = j.at("var").get<std::string>().at(0);
    } else if (kind == "dep_int") {
        m.kind = MagicMatcher::Kind::DepInt;
        m.base = parse_ext_rational(j.at("base").get<std::string>());
        m.coeff = j.at("coeff").get<long long>();
    } else if (kind == "dep_offset_inv") {
        m.kind = MagicMatcher::Kind::DepOffsetInv;
        m.base = parse_ext_rational(j.at("base").get<std::string>());
        m.coeff = j.at("coeff").get<long long>();
        m.var = j.at("var").get<std::string>().at(0);
    } else {
        throw parse_error("unknown matcher kind: " + kind);
    }
    return m;
}

std::map<std::string, long long> parse_monomials(const json& j) {
    std::map<std::string, long long> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out[it.key()] = it.value().get<long long>();
    return out;
}

std::vector<MagicPattern> load_patterns() {
    json doc = json::parse(embedded::k_table8);
    std::vector<MagicPattern> out;
    for (const auto& row : doc.at("rows")) {
        MagicPattern pat;
        pat.name = row.at("row").get<std::string>();
        const auto& match = row.at("match");
        for (int i = 0; i < 3; ++i) pat.slots[i] = parse_matcher(match.at(i));
        for (const auto& s : row.at("result")) {
            MagicSummand summand;
            summand.p = parse_monomials(s.at("p"));
            summand.q = parse_monomials(s.at("q"));
            pat.result.push_back(std::move(summand));
        }
        out.push_back(std::move(pat));
    }
    return out;
}

// Binds the integer hidden in x = base + 1/v, rejecting v = 0 / x = ∞.
std::optional<long long> bind_offset_inv(const ExtRational& x, const ExtRational& base) {
    if (x.is_infinity()) return std::nullopt;
    ExtRational diff = x - base;
    if (diff.num != 1 && diff.num != -1) return std::nullopt;
    return diff.num * diff.den;
}

bool match_slot(const MagicMatcher& m, const ExtRational& x, MagicEnv& env) {
    switch (m.kind) {
    case MagicMatcher::Kind::Const:
        return x == m.value;
    case MagicMatcher::Kind::Rat:
        if (x.is_infinity()) return false;
        env.t = x.num;
        env.u = x.den;
        return true;
    case MagicMatcher::Kind::Int:
        if (!x.is_integer()) return false;
        (m.var == 'n' ? env.n : env.m) = x.num;
        return true;
    case MagicMatcher::Kind::OffsetInv: {
        auto v = bind_offset_inv(x, m.base);
        if (!v) return false;
        (m.var == 'n' ? env.n : env.m) = *v;
        return true;
    }
    case MagicMatcher::Kind::DepInt:
        return x.is_integer() && x == m.base + ExtRational(m.coeff * env.n);
    case MagicMatcher::Kind::DepOffsetInv: {
        auto v = bind_offset_inv(x, m.base + ExtRational(m.coeff * env.n));
        if (!v) return false;
        (m.var == 'n' ? env.n : env.m) = *v;
        return true;
    }
    }
    return false;
}

long long eval_monomials(const std::map<std::string, long long>& coeffs, const MagicEnv& env) {
    long long total = 0;
    for (const auto& [key, c] : coeffs) total += c * env.lookup(key);
    return total;
}

constexpr int kPermutations[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                     {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

} // namespace

long long MagicEnv::lookup(const std::string& monomial) const {
    if (monomial == "1") return 1;
    if (monomial == "n") return n;
    if (monomial == "m") return m;
    if (monomial == "t") return t;
    if (monomial == "u") return u;
    if (monomial == "nm") return n * m;
    if (monomial == "nt") return n * t;
    if (monomial == "nu") return n * u;
    throw parse_error("unknown monomial: " + monomial);
}

ClosedManifold MagicPattern::evaluate(const MagicEnv& env) const {
    ClosedManifold out;
    for (const auto& s : result)
        out = connected_sum(out, manifold_from_pq(eval_monomials(s.p, env), eval_monomials(s.q, env)));
    return out;
}

std::array<ExtRational, 3> MagicPattern::instantiate(const MagicEnv& env) const {
    std::array<ExtRational, 3> out;
    for (int i = 0; i < 3; ++i) {
        const MagicMatcher& m = slots[i];
        switch (m.kind) {
        case MagicMatcher::Kind::Const:
            out[i] = m.value;
            break;
        case MagicMatcher::Kind::Rat:
            out[i] = ExtRational(env.t, env.u);
            break;
        case MagicMatcher::Kind::Int:
            out[i] = ExtRational(m.var == 'n' ? env.n : env.m);
            break;
        case MagicMatcher::Kind::OffsetInv:
            out[i] = m.base + reciprocal(ExtRational(m.var == 'n' ? env.n : env.m));
            break;
        case MagicMatcher::Kind::DepInt:
            out[i] = m.base + ExtRational(m.coeff * env.n);
            break;
        case MagicMatcher::Kind::DepOffsetInv:
            out[i] = m.base + ExtRational(m.coeff * env.n) +
                     reciprocal(ExtRational(m.var == 'n' ? env.n : env.m));
            break;
        }
    }
    return out;
}

const std::vector<MagicPattern>& magic_patterns() {
    static const std::vector<MagicPattern> patterns = load_patterns();
    return patterns;
}

std::optional<ClosedManifold> magic_filling(const ExtRational& alpha,
                                            const ExtRational& beta,
                                            const ExtRational& gamma) {
    const ExtRational args[3] = {alpha, beta, gamma};
    std::optional<ClosedManifold> first;
    for (const auto& pat : magic_patterns()) {
        for (const auto& perm : kPermutations) {
            MagicEnv env;
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i)
                ok = match_slot(pat.slots[i], args[perm[i]], env);
            if (!ok) continue;
            ClosedManifold got = pat.evaluate(env);
            if (!first) {
                first = got;
            } else if (!is_homeomorphic(*first, got, false)) {
                throw magic_inconsistency("patterns disagree at (" + to_string(alpha) + "," +
                                          to_string(beta) + "," + to_string(gamma) + "): " +
                                          to_string(*first) + " vs " + to_string(got) + " [" +
                                          pat.name + "]");
            }
        }
    }
    return first;
}

std::optional<ClosedManifold> whitehead_filling(const ExtRational& alpha,
                                                const ExtRational& beta) {
    struct Row {
        long long first;
        long long base;
        long long pn, pc, qn, qc; // L(pn*n + pc, qn*n + qc)
    };
    static const Row rows[] = {
        {-1, -6, 6, -1, 2, -1},
        {-2, -4, 8, -2, 2, -1},
        {-3, -3, 9, -3, 3, -2},
    };

    const ExtRational* pair[2][2] = {{&alpha, &beta}, {&beta, &alpha}};
    std::optional<ClosedManifold> first;
    auto consider = [&](const ClosedManifold& got) {
        if (!first)
            first = got;
        else if (!is_homeomorphic(*first, got, false))
            throw magic_inconsistency("whitehead patterns disagree at (" + to_string(alpha) +
                                      "," + to_string(beta) + ")");
    };
    for (const auto& [a, b] : pair) {
        if (b->is_infinity()) {
            consider(lens_from_surgery(*a));
            continue;
        }
        for (const auto& row : rows) {
            if (*a != ExtRational(row.first)) continue;
            auto n = bind_offset_inv(*b, ExtRational(row.base));
            if (!n) continue;
            consider(manifold_from_pq(row.pn * *n + row.pc, row.qn * *n + row.qc));
        }
    }
    return first;
}

std::optional<ClosedManifold> compute_Y(const FamilyParams& p) {
    if (p.m == ExtRational(-1))
        return magic_filling(p.r, ExtRational(1) + p.s, ExtRational(1) + reciprocal(p.b));
    if (p.r == ExtRational(0))
        return whitehead_filling(p.m, p.s + reciprocal(p.b));
    return std::nullopt;
}

ClosedManifold compute_Ystar(const FamilyParams& p) {
    if (!p.b.is_integer() && !p.b.is_infinity())
        throw unsupported_parameters("b must be integral or ∞");
    ExtRational mb1 = -p.b - ExtRational(1); // ∞ when b = ∞, splitting the chain
    if (p.m == ExtRational(-1)) {
        ChainDescription c{{p.s, mb1, ExtRational(p.k), ExtRational(1 - p.k), ExtRational(0), p.r}};
        return chain_eval(c);
    }
    if (p.r == ExtRational(0) && p.m.is_integer() && p.s.is_integer()) {
        ChainDescription c{{ExtRational(-p.k), p.m, ExtRational(p.k - 1), mb1, p.s}};
        return chain_eval(c);
    }
    throw unsupported_parameters("Y* needs m = -1, or r = 0 with integral m, s");
}

ExtRational cable_slope(const ExtRational& m, const ExtRational& r, long long k) {
    if (m == ExtRational(-1)) {
        ExtRational v = r - ExtRational(k) + ExtRational(1);
        v = ext_sub_inv(ExtRational(k + 1), v);
        return ext_sub_inv(ExtRational(1), v);
    }
    if (m.is_integer() && r.is_integer()) {
        CFWord w({ExtRational(1), ExtRational(k + 1), r + ExtRational(1), m + ExtRational(1),
                  ExtRational(-k)});
        return cf_eval(w);
    }
    throw unsupported_parameters("cable space needs m = -1 or integral m, r");
}

CableSpaceKind classify_cable(const ExtRational& x) {
    long long p = x.num, q = x.den;
    if (p == 0) return CableSpaceKind{CableSpaceKind::Kind::TwoSolidTori, 0, 0};
    long long pa = p < 0 ? -p : p;
    if (pa == 1) return CableSpaceKind{CableSpaceKind::Kind::ThickenedTorus, 1, 0};
    // q' with q*q' = -1 mod |p|, 0 < q' < |p|
    long long qm = ((q % pa) + pa) % pa;
    long long t = 0, nt = 1, r0 = pa, nr = qm;
    while (nr != 0) {
        long long quot = r0 / nr;
        t = std::exchange(nt, t - quot * nt);
        r0 = std::exchange(nr, r0 - quot * nr);
    }
    long long inv = ((t % pa) + pa) % pa;
    long long qprime = ((-inv) % pa + pa) % pa;
    return CableSpaceKind{CableSpaceKind::Kind::TorusKnotExterior, pa, qprime};
}

PresentationKind presentation_kind(const FamilyParams& p) {
    bool jp = (p.m == ExtRational(-1)) || (p.m.is_integer() && p.r.is_integer());
    if (!jp) throw unsupported_parameters("not in the jointly primitive regime");
    if (p.b.is_integer()) return PresentationKind::LJP;
    if (p.b.is_infinity()) return PresentationKind::MJP;
    throw unsupported_parameters("b must be integral or ∞");
}

bool strongly_invertible_guaranteed(const FamilyParams& p) {
    const ExtRational s_set[] = {ExtRational(0), ExtRational(-1), ExtRational(-2),
                                 ExtRational::infinity()};
    const ExtRational b_set[] = {ExtRational::infinity(), ExtRational(-1), ExtRational(-1, 2),
                                 ExtRational(0)};
    for (const auto& v : s_set)
        if (p.s == v) return true;
    for (const auto& v : b_set)
        if (p.b == v) return true;
    return false;
}

std::pair<long long, long long> lens_family_form(LensFamily family, long long x, long long y) {
    if (family == LensFamily::F33)
        return {3 * x * (1 - 3 * y) + 6 * y - 1, x * (1 - 3 * y) + y};
    return {2 * x * (1 - 4 * y) + 6 * y - 1, x * (1 - 4 * y) + y};
}

std::optional<std::pair<long long, long long>> realizable_as(const ClosedManifold& target,
                                                             LensFamily family) {
    if (target.summands.size() != 1 || target.summands[0].kind != Prime::Kind::Lens)
        throw unsupported_parameters("realizability search needs a single lens space");
    long long p = target.summands[0].p;

    // Order obstruction: the closed forms are -1 mod 3 resp. mod 2 before
    // taking absolute values, so the order is never 0 mod 3 resp. mod 2.
    if (family == LensFamily::F33 && p % 3 == 0) return std::nullopt;
    if (family == LensFamily::F24 && p % 2 == 0) return std::nullopt;

    // |y| <= p+2 is exhaustive: for larger |y| the x-term would have to
    // cancel a multiple of (1-3y) resp. (1-4y) against p+1-6y, forcing x = 0,
    // and the x = 0 values stay within the bound.
    long long lead = family == LensFamily::F33 ? 3 : 2;
    long long inner = family == LensFamily::F33 ? 3 : 4;
    for (long long y = -(p + 2); y <= p + 2; ++y) {
        long long a = 1 - inner * y;
        for (long long sign : {1LL, -1LL}) {
            long long num = sign * p + 1 - 6 * y;
            if (num % (lead * a) != 0) continue;
            long long x = num / (lead * a);
            auto [pf, qf] = lens_family_form(family, x, y);
            if (pf == 1 || pf == -1) continue;
            if (is_homeomorphic(manifold_from_pq(pf, qf), target, false))
                return std::make_pair(x, y);
        }
    }
    return std::nullopt;
}

} // namespace surgeon
