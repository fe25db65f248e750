#include "surgeon/lens.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace surgeon {

namespace {

long long pos_mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// Inverse of a mod m (m > 1, gcd(a, m) = 1), via extended Euclid.
long long mod_inverse(long long a, long long m) {
    long long t = 0, new_t = 1;
    long long r = m, new_r = pos_mod(a, m);
    while (new_r != 0) {
        long long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return pos_mod(t, m);
}

void sort_summands(std::vector<Prime>& s) {
    std::sort(s.begin(), s.end(), [](const Prime& a, const Prime& b) { return a < b; });
}

} // namespace

bool Prime::operator<(const Prime& o) const {
    if (kind != o.kind) return kind == Kind::Lens; // lens summands first
    if (p != o.p) return p < o.p;
    return q < o.q;
}

Prime canonicalize(long long p, long long q) {
    if (p < 0) {
        p = -p;
        q = -q;
    }
    if (p == 0) {
        if (q != 1 && q != -1) throw not_coprime("L(0, q) needs q = ±1");
        return Prime{Prime::Kind::S1xS2, 0, 0};
    }
    if (p == 1) throw not_coprime("L(1, q) is S^3, not a prime summand");
    long long qm = pos_mod(q, p);
    if (std::gcd(p, qm) != 1) throw not_coprime("gcd(p, q) != 1");
    long long qi = mod_inverse(qm, p);
    return Prime{Prime::Kind::Lens, p, std::min(qm, qi)};
}

ClosedManifold manifold_from_pq(long long p, long long q) {
    if (p == 1 || p == -1) return ClosedManifold{};
    return ClosedManifold{{canonicalize(p, q)}};
}

ClosedManifold lens_from_surgery(const ExtRational& x) {
    if (x.is_infinity()) return ClosedManifold{};
    return manifold_from_pq(x.num, x.den);
}

ClosedManifold connected_sum(const ClosedManifold& a, const ClosedManifold& b) {
    ClosedManifold out = a;
    out.summands.insert(out.summands.end(), b.summands.begin(), b.summands.end());
    sort_summands(out.summands);
    return out;
}

ClosedManifold mirror(const ClosedManifold& a) {
    ClosedManifold out;
    for (const auto& s : a.summands) {
        if (s.kind == Prime::Kind::S1xS2)
            out.summands.push_back(s);
        else
            out.summands.push_back(canonicalize(s.p, -s.q));
    }
    sort_summands(out.summands);
    return out;
}

bool is_homeomorphic(const ClosedManifold& a, const ClosedManifold& b, bool oriented) {
    if (a == b) return true;
    if (oriented) return false;
    return a == mirror(b);
}

long long h1_order(const ClosedManifold& a) {
    long long prod = 1;
    for (const auto& s : a.summands) {
        if (s.kind == Prime::Kind::S1xS2) return 0;
        prod *= s.p;
    }
    return prod;
}

ClosedManifold chain_eval(const ChainDescription& c) {
    std::vector<std::vector<ExtRational>> segments(1);
    for (const auto& x : c.coefficients) {
        if (x.is_infinity())
            segments.emplace_back();
        else
            segments.back().push_back(x);
    }

    ClosedManifold out;
    for (auto& seg : segments) {
        if (seg.empty()) continue; // deleted component splits off an S^3
        if (seg.size() > 1 && !seg.front().is_integer()) {
            auto head = cf_expand(seg.front());
            std::vector<ExtRational> expanded;
            expanded.reserve(head.size() + seg.size() - 1);
            for (auto it = head.rbegin(); it != head.rend(); ++it)
                expanded.emplace_back(*it);
            expanded.insert(expanded.end(), seg.begin() + 1, seg.end());
            seg = std::move(expanded);
        }
        for (std::size_t i = 1; i + 1 < seg.size(); ++i)
            if (!seg[i].is_integer())
                throw invalid_chain("non-integral interior coefficient " + to_string(seg[i]));
        ExtRational v = seg.back();
        for (auto it = seg.rbegin() + 1; it != seg.rend(); ++it)
            v = ext_sub_inv(*it, v);
        out = connected_sum(out, lens_from_surgery(v));
    }
    return out;
}

long long chain_h1_oracle(const ChainDescription& c) {
    // det recurrence D_i = p_i D_{i-1} - q_i q_{i-1} D_{i-2}; an ∞ entry has
    // q = 0 and contributes a factor p = 1, which is the block split.
    long long d_prev2 = 0, d_prev = 1, q_prev = 0;
    for (const auto& x : c.coefficients) {
        long long d_cur = x.num * d_prev - x.den * q_prev * d_prev2;
        d_prev2 = std::exchange(d_prev, d_cur);
        q_prev = x.den;
    }
    return d_prev < 0 ? -d_prev : d_prev;
}

ChainDescription parse_chain(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '[') body.erase(0, 1);
    if (!body.empty() && body.back() == ']') body.pop_back();
    ChainDescription c;
    std::string item;
    std::stringstream ss(body);
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        c.coefficients.push_back(parse_ext_rational(item));
    }
    if (c.coefficients.empty()) throw parse_error("empty chain: '" + text + "'");
    return c;
}

std::string to_string(const ChainDescription& c) {
    std::string out;
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
        if (i) out += ",";
        out += to_string(c.coefficients[i]);
    }
    return out;
}

ClosedManifold parse_manifold(const std::string& text) {
    ClosedManifold out;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, '#')) {
        std::string s;
        for (char ch : item)
            if (ch != ' ') s.push_back(ch);
        if (s == "S3") continue;
        if (s == "S1xS2") {
            out.summands.push_back(Prime{Prime::Kind::S1xS2, 0, 0});
            continue;
        }
        if (s.size() < 6 || s.front() != 'L' || s[1] != '(' || s.back() != ')')
            throw parse_error("bad manifold: '" + text + "'");
        auto comma = s.find(',');
        if (comma == std::string::npos) throw parse_error("bad manifold: '" + text + "'");
        long long p = std::stoll(s.substr(2, comma - 2));
        long long q = std::stoll(s.substr(comma + 1, s.size() - comma - 2));
        auto m = manifold_from_pq(p, q);
        out.summands.insert(out.summands.end(), m.summands.begin(), m.summands.end());
    }
    std::sort(out.summands.begin(), out.summands.end(),
              [](const Prime& a, const Prime& b) { return a < b; });
    return out;
}

std::string to_string(const ClosedManifold& m) {
    if (m.is_s3()) return "S3";
    std::string out;
    for (std::size_t i = 0; i < m.summands.size(); ++i) {
        if (i) out += "#";
        const auto& s = m.summands[i];
        if (s.kind == Prime::Kind::S1xS2)
            out += "S1xS2";
        else
            out += "L(" + std::to_string(s.p) + "," + std::to_string(s.q) + ")";
    }
    return out;
}

} // namespace surgeon
