#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "surgeon/rational.hpp"

namespace surgeon {

/// Euclidean structure of a cusp cross-section: the translations of the two
/// peripheral generators.  Must span (nonzero area).
struct CuspShape {
    std::complex<double> mu{1.0, 0.0};
    std::complex<double> lambda{0.0, 1.0};
};

/// Primitive slope p*mu + q*lambda, canonically q > 0 or (q, p) = (0, 1),
/// or the empty slope * (cusp left unfilled).
struct Slope {
    bool empty = true;
    long long p = 0;
    long long q = 0;

    static Slope make(long long p, long long q);
    static Slope none() { return Slope{}; }

    friend bool operator==(const Slope&, const Slope&) = default;
};

Slope slope_from_rational(const ExtRational& x);

struct Multislope {
    std::vector<Slope> slopes;

    friend bool operator==(const Multislope&, const Multislope&) = default;
};

/// Declared isometry: a permutation of the cusps with a unimodular change of
/// peripheral basis on each, acting projectively on slopes.
struct IsometryAction {
    std::vector<int> perm;                        // cusp j maps to cusp perm[j]
    std::vector<std::array<long long, 4>> maps;   // row-major [a b; c d], det ±1
    int orientation = 1;

    bool is_identity() const;
};

/// Cusp translations plus the declared non-trivial isometries of a cusped
/// manifold.  These are ingested as data, never computed here.
struct CuspedManifoldData {
    std::string name;
    std::vector<CuspShape> cusps;
    std::vector<IsometryAction> isometries;
};

double cusp_area(const CuspShape& c);

/// Length of the slope in the cross-section rescaled to area 1; ∞ for the
/// empty slope.
double normalized_length(const Slope& s, const CuspShape& c);

/// Combination rule 1/|psi|^2 = sum_j 1/|psi_j|^2; empty components drop out
/// and the empty multislope has length ∞.
double multislope_length(const Multislope& ms, const std::vector<CuspShape>& cusps);

/// All canonical primitive slopes of normalized length <= N, sorted by
/// (length, p, q).  Only finitely many slopes are this short, so the scan
/// over the lattice box cut out by the dual basis is exhaustive.
std::vector<Slope> enumerate_short_slopes(const CuspShape& c, double max_length);

/// Universal bound from the deformation theory of hyperbolic Dehn filling:
/// every filling along slopes longer than this is hyperbolic with geodesic
/// cores.
inline constexpr double hk_length_bound = 7.5832;

bool exceeds_hk_bound(double length);

/// True iff every non-empty component is strictly longer than the bound.
bool hk_certify(const Multislope& ms, const std::vector<CuspShape>& cusps);

Multislope apply_isometry(const IsometryAction& g, const Multislope& ms);

/// True iff g(ms) != ms for every declared non-trivial isometry.
bool is_symmetry_breaking(const Multislope& ms, const CuspedManifoldData& data);

/// The multislope (*, r-k, 1+s, 1+1/b, -1/k) filling the five-cusped chain
/// link complement down to the knot exterior of the m = -1 family.
Multislope family_multislope(const ExtRational& r, const ExtRational& s, const ExtRational& b,
                             long long k);

/// Schema: {"name": str, "cusps": [{"mu": [re,im], "lambda": [re,im]}],
///          "isometries": [{"perm": [...], "maps": [[[a,b],[c,d]], ...],
///                          "orientation": 1|-1}]}
CuspedManifoldData load_manifold_data(const std::string& json_text);
CuspedManifoldData load_manifold_file(const std::string& path);

/// Comma-separated slopes, "*" for empty, e.g. "*,1/1,-2/1,2/1,1/2".
Multislope parse_multislope(const std::string& text);
std::string to_string(const Multislope& ms);

} // namespace surgeon
