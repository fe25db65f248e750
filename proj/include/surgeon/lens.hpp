#pragma once

#include <string>
#include <vector>

#include "surgeon/rational.hpp"

namespace surgeon {

/// Prime summand of a closed manifold: an oriented lens space in canonical
/// form (p > 1, 0 < q < p, q minimal in the oriented class {q, q^-1 mod p})
/// or S1xS2.
struct Prime {
    enum class Kind { Lens, S1xS2 };
    Kind kind = Kind::Lens;
    long long p = 0;
    long long q = 0;

    friend bool operator==(const Prime&, const Prime&) = default;
    bool operator<(const Prime& o) const;
};

/// Connected sum of prime summands in sorted canonical order; the empty sum
/// is S^3, which absorbs into any other sum.
struct ClosedManifold {
    std::vector<Prime> summands;

    bool is_s3() const { return summands.empty(); }
    friend bool operator==(const ClosedManifold&, const ClosedManifold&) = default;
};

/// Canonical oriented representative of L(p, q).  Applies L(-p, q) = L(p, -q)
/// first, then picks min{q mod p, q^-1 mod p}.  Requires gcd(p, q) = 1 and
/// |p| != 1; p = 0 gives S1xS2.
Prime canonicalize(long long p, long long q);

/// Closed manifold for the pair (p, q) with S^3 and S1xS2 degenerate cases
/// folded in.
ClosedManifold manifold_from_pq(long long p, long long q);

/// Lens space produced by surgery on the unknot with coefficient x, read as
/// p/q with the sign carried by p.  ∞ gives S^3, 0 gives S1xS2.
ClosedManifold lens_from_surgery(const ExtRational& x);

ClosedManifold connected_sum(const ClosedManifold& a, const ClosedManifold& b);

ClosedManifold mirror(const ClosedManifold& a);

/// Oriented mode compares canonical forms; unoriented mode also allows one
/// global mirror of the whole sum.
bool is_homeomorphic(const ClosedManifold& a, const ClosedManifold& b, bool oriented);

/// |H1|: product of p over lens summands, 1 for S^3, 0 with any S1xS2 summand.
long long h1_order(const ClosedManifold& a);

/// Surgery description on a linear chain link.  ∞ entries delete a component
/// and split the chain; after splitting, each segment may carry rational
/// coefficients only at its two ends.
struct ChainDescription {
    std::vector<ExtRational> coefficients;
};

/// Evaluates the chain into a closed manifold: split at ∞, expand a rational
/// head into the reverse of its integer expansion (a rational tail folds
/// directly), fold the negative continued fraction, assemble the sum.
ClosedManifold chain_eval(const ChainDescription& c);

/// |H1| by the generalized linking presentation: tridiagonal determinant
/// with diagonal p_i and off-diagonal entries q_i for coefficients p_i/q_i.
/// ∞ entries (1/0) decouple their neighbors, so splitting is automatic.
long long chain_h1_oracle(const ChainDescription& c);

ChainDescription parse_chain(const std::string& text);
std::string to_string(const ChainDescription& c);
ClosedManifold parse_manifold(const std::string& text);
std::string to_string(const ClosedManifold& m);

} // namespace surgeon
