#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>

#include "surgeon/lens.hpp"

namespace surgeon {

/// Parameters (m, r, s, b; k) of the doubly-filled chain link families
/// K_k(m,r,s,b).  The closed-form evaluators support the two regimes that
/// admit jointly primitive presentations: m = -1 with r rational, and
/// integral m, r.
struct FamilyParams {
    ExtRational m, r, s, b;
    long long k = 0;
};

enum class PresentationKind { LJP, MJP };

struct CableSpaceKind {
    enum class Kind { TorusKnotExterior, ThickenedTorus, TwoSolidTori };
    Kind kind = Kind::ThickenedTorus;
    long long p = 0;      // order of the exceptional fiber
    long long qprime = 0; // torus knot parameter, q*qprime = -1 mod p

    friend bool operator==(const CableSpaceKind&, const CableSpaceKind&) = default;
};

// --- magic manifold filling patterns (bundled dataset) -------------------

struct MagicMatcher {
    enum class Kind { Const, Rat, Int, OffsetInv, DepInt, DepOffsetInv };
    Kind kind = Kind::Const;
    ExtRational value;   // Const
    ExtRational base;    // OffsetInv / DepInt / DepOffsetInv
    long long coeff = 0; // Dep*: value = base + coeff*n (+ 1/var)
    char var = 'n';      // which integer the matcher binds
};

struct MagicEnv {
    long long n = 0, m = 0, t = 0, u = 1;
    long long lookup(const std::string& monomial) const;
};

struct MagicSummand {
    std::map<std::string, long long> p, q;
};

struct MagicPattern {
    std::string name;
    std::array<MagicMatcher, 3> slots;
    std::vector<MagicSummand> result;

    ClosedManifold evaluate(const MagicEnv& env) const;
    /// Filling coefficients of this pattern at the given bindings.
    std::array<ExtRational, 3> instantiate(const MagicEnv& env) const;
};

const std::vector<MagicPattern>& magic_patterns();

/// Matches (alpha, beta, gamma) in every order against the magic manifold
/// filling patterns.  All matching patterns must agree up to unoriented
/// homeomorphism, otherwise magic_inconsistency is thrown; no match gives
/// nullopt.
std::optional<ClosedManifold> magic_filling(const ExtRational& alpha,
                                            const ExtRational& beta,
                                            const ExtRational& gamma);

/// Lens space fillings of the Whitehead link exterior, symmetric in the two
/// coefficients: (-1,-6+1/n), (-2,-4+1/n), (-3,-3+1/n) and (p/q, ∞).
std::optional<ClosedManifold> whitehead_filling(const ExtRational& alpha,
                                                const ExtRational& beta);

/// Ambient manifold Y(m,r,s,b): the magic filling N(r, 1+s, 1+1/b) when
/// m = -1, the Whitehead filling (m, s+1/b) when r = 0, nullopt otherwise.
std::optional<ClosedManifold> compute_Y(const FamilyParams& p);

/// Surgered manifold Y*_k(m,r,s,b): the chain [s,-b-1,k,1-k,0,r] when m = -1,
/// the chain [-k,m,k-1,-b-1,s] when r = 0 with integral m, s.
ClosedManifold compute_Ystar(const FamilyParams& p);

/// Slope of the cable space produced by the framed surgery:
/// [1,k+1,r+1,m+1,-k] for integral m, r and [1,k+1,r-k+1] for m = -1.
ExtRational cable_slope(const ExtRational& m, const ExtRational& r, long long k);

CableSpaceKind classify_cable(const ExtRational& x);

/// LJP for integral b, MJP for b = ∞; requires the jointly primitive regime.
PresentationKind presentation_kind(const FamilyParams& p);

/// True when the construction guarantees a strong inversion:
/// s in {0,-1,-2,∞} or b in {∞,-1,-1/2,0}.
bool strongly_invertible_guaranteed(const FamilyParams& p);

enum class LensFamily { F33, F24 };

/// Searches for integers (x, y) realizing the target lens space as
/// L[3,x,3,y] (F33) or L[2,x,4,y] (F24), applying the mod 3 / mod 2
/// obstruction first.  The witness re-substitutes to a manifold unoriented
/// homeomorphic to the target.
std::optional<std::pair<long long, long long>> realizable_as(const ClosedManifold& target,
                                                             LensFamily family);

/// Closed form of L[3,x,3,y] / L[2,x,4,y] as a (p, q) pair.
std::pair<long long, long long> lens_family_form(LensFamily family, long long x, long long y);

} // namespace surgeon
