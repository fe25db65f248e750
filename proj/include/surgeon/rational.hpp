#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surgeon/errors.hpp"

namespace surgeon {

/// Element of the extended rationals Q^ = Q ∪ {1/0}.
///
/// Always in lowest terms with positive denominator; infinity is the unique
/// representative (1, 0).  Surgery coefficients, slopes and continued
/// fraction values all live here.
struct ExtRational {
    long long num = 0;
    long long den = 1;

    constexpr ExtRational() = default;
    constexpr ExtRational(long long n) : num(n), den(1) {}
    ExtRational(long long n, long long d);

    static ExtRational infinity() {
        ExtRational x;
        x.num = 1;
        x.den = 0;
        return x;
    }

    bool is_infinity() const { return den == 0; }
    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0 && den == 1; }

    friend bool operator==(const ExtRational&, const ExtRational&) = default;
};

ExtRational operator-(const ExtRational& x);
ExtRational operator+(const ExtRational& a, const ExtRational& b);
ExtRational operator-(const ExtRational& a, const ExtRational& b);

/// 1/x with the projective conventions 1/∞ = 0, 1/0 = ∞.
ExtRational reciprocal(const ExtRational& x);

/// One step of the negative continued fraction recursion: a - 1/v.
/// a must be finite; v may be 0 or ∞ (finite - ∞ = ∞).
ExtRational ext_sub_inv(const ExtRational& a, const ExtRational& v);

/// Word [a_1, ..., a_n] evaluating as a_1 - 1/(a_2 - 1/(... - 1/a_n)).
/// Entries are finite rationals; formal evaluation is defined for any of
/// them, chain semantics additionally need integral interior entries.
struct CFWord {
    std::vector<ExtRational> entries;

    CFWord() = default;
    explicit CFWord(std::vector<ExtRational> e);
};

ExtRational cf_eval(const CFWord& w);

/// Canonical integer expansion of a finite rational: e_1 = ceil(x), recurse
/// on 1/(e_1 - x).  Every entry after the first is >= 2, and
/// cf_eval(cf_expand(x)) == x.
std::vector<long long> cf_expand(const ExtRational& x);

/// Slam dunk rewrite [.., a, 0, b, ..] -> [.., a+b, ..] at the first interior
/// zero with integral neighbors; cf_eval is unchanged.
CFWord cf_zero_absorb(const CFWord& w);

/// Text form "p/q", "p", or "inf".
ExtRational parse_ext_rational(const std::string& text);
std::string to_string(const ExtRational& x);

} // namespace surgeon
