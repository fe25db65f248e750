#include "surgeon/rational.hpp"

#include <numeric>

namespace surgeon {

namespace {

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

} // namespace

ExtRational::ExtRational(long long n, long long d) {
    if (d == 0) {
        if (n == 0) throw invalid_coefficient("0/0 is not an element of Q^");
        num = 1;
        den = 0;
        return;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    num = n / g;
    den = d / g;
}

ExtRational operator-(const ExtRational& x) {
    if (x.is_infinity()) return x;
    ExtRational r;
    r.num = -x.num;
    r.den = x.den;
    return r;
}

ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinity() && b.is_infinity())
        throw invalid_coefficient("∞ + ∞ is undefined");
    if (a.is_infinity() || b.is_infinity()) return ExtRational::infinity();
    return ExtRational(a.num * b.den + b.num * a.den, a.den * b.den);
}

ExtRational operator-(const ExtRational& a, const ExtRational& b) {
    if (a.is_infinity() && b.is_infinity())
        throw invalid_coefficient("∞ - ∞ is undefined");
    if (a.is_infinity() || b.is_infinity()) return ExtRational::infinity();
    return ExtRational(a.num * b.den - b.num * a.den, a.den * b.den);
}

ExtRational reciprocal(const ExtRational& x) {
    if (x.is_infinity()) return ExtRational(0);
    if (x.num == 0) return ExtRational::infinity();
    return ExtRational(x.den, x.num);
}

ExtRational ext_sub_inv(const ExtRational& a, const ExtRational& v) {
    if (a.is_infinity())
        throw invalid_coefficient("∞ cannot survive as a coefficient");
    return a - reciprocal(v);
}

CFWord::CFWord(std::vector<ExtRational> e) : entries(std::move(e)) {
    if (entries.empty()) throw invalid_coefficient("empty continued fraction word");
    for (const auto& x : entries)
        if (x.is_infinity())
            throw invalid_coefficient("∞ entry in continued fraction word");
}

ExtRational cf_eval(const CFWord& w) {
    ExtRational acc = w.entries.back();
    for (auto it = w.entries.rbegin() + 1; it != w.entries.rend(); ++it)
        acc = ext_sub_inv(*it, acc);
    return acc;
}

std::vector<long long> cf_expand(const ExtRational& x) {
    if (x.is_infinity())
        throw invalid_coefficient("cf_expand of ∞");
    std::vector<long long> out;
    ExtRational cur = x;
    for (;;) {
        long long e = ceil_div(cur.num, cur.den);
        out.push_back(e);
        ExtRational rem = ExtRational(e) - cur; // in [0, 1)
        if (rem.num == 0) break;
        cur = reciprocal(rem); // denominator strictly decreases
    }
    return out;
}

CFWord cf_zero_absorb(const CFWord& w) {
    const auto& e = w.entries;
    for (std::size_t i = 1; i + 1 < e.size(); ++i) {
        if (e[i].is_zero() && e[i - 1].is_integer() && e[i + 1].is_integer()) {
            std::vector<ExtRational> out;
            out.reserve(e.size() - 2);
            out.insert(out.end(), e.begin(), e.begin() + i - 1);
            out.push_back(e[i - 1] + e[i + 1]);
            out.insert(out.end(), e.begin() + i + 2, e.end());
            return CFWord(std::move(out));
        }
    }
    throw no_rewrite_applies("no interior zero with integral neighbors");
}

ExtRational parse_ext_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s.push_back(c);
    if (s == "inf" || s == "infinity" || s == "1/0") return ExtRational::infinity();
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return ExtRational(std::stoll(s));
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        if (d == 0) {
            if (n == 0) throw parse_error("0/0 is not a coefficient");
            return ExtRational::infinity();
        }
        return ExtRational(n, d);
    } catch (const std::invalid_argument&) {
        throw parse_error("bad rational: '" + text + "'");
    } catch (const std::out_of_range&) {
        throw parse_error("rational out of range: '" + text + "'");
    }
}

std::string to_string(const ExtRational& x) {
    if (x.is_infinity()) return "inf";
    if (x.den == 1) return std::to_string(x.num);
    return std::to_string(x.num) + "/" + std::to_string(x.den);
}

} // namespace surgeon
