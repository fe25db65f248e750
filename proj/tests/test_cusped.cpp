#include <doctest.h>

#include <cmath>
#include <random>

#include "surgeon/cusped.hpp"

using namespace surgeon;

namespace {

const std::string fixtures = std::string(SURGEON_SOURCE_DIR) + "/data/fixtures/";

CuspShape square() { return CuspShape{{1.0, 0.0}, {0.0, 1.0}}; }

std::mt19937 rng(31337);

CuspShape random_cusp() {
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.2, 2.5);
    for (;;) {
        CuspShape c{{re(rng) + 0.5, re(rng)}, {re(rng), im(rng)}};
        double area = std::abs(std::imag(std::conj(c.mu) * c.lambda));
        if (area > 0.1 && std::abs(c.mu) > 0.3) return c;
    }
}

// Direct scan over the box bound the lattice geometry gives.
std::vector<Slope> brute_force_short_slopes(const CuspShape& c, double max_len) {
    double area = cusp_area(c);
    long long bound =
        llround(std::ceil(max_len * (std::abs(c.mu) + std::abs(c.lambda)) / std::sqrt(area))) + 1;
    std::vector<Slope> out;
    for (long long p = -bound; p <= bound; ++p)
        for (long long q = -bound; q <= bound; ++q) {
            if (p == 0 && q == 0) continue;
            if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1) continue;
            Slope s = Slope::make(p, q);
            if (!(s.p == p && s.q == q)) continue; // count each class once
            if (normalized_length(s, c) <= max_len) out.push_back(s);
        }
    return out;
}

} // namespace

TEST_CASE("normalized_length basics") {
    CHECK(normalized_length(Slope::make(3, 4), square()) == doctest::Approx(5.0).epsilon(1e-12));
    CuspShape big{{2.0, 0.0}, {0.0, 2.0}};
    CHECK(normalized_length(Slope::make(1, 0), big) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::isinf(normalized_length(Slope::none(), square())));
    CuspShape degenerate{{1.0, 0.0}, {2.0, 0.0}};
    CHECK_THROWS_AS(normalized_length(Slope::make(1, 0), degenerate), invalid_cusp);
}

TEST_CASE("normalized_length is scale invariant") {
    std::uniform_real_distribution<double> sc(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
        CuspShape c = random_cusp();
        std::complex<double> z(sc(rng), sc(rng) - 5.0);
        if (std::abs(z) < 0.1) continue;
        CuspShape scaled{c.mu * z, c.lambda * z};
        Slope s = Slope::make(std::uniform_int_distribution<long long>(-9, 9)(rng), 1);
        double a = normalized_length(s, c), b = normalized_length(s, scaled);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
    }
}

TEST_CASE("multislope_length combination") {
    CuspShape c{{100.0, 0.0}, {0.0, 1.0}}; // slope (1,0) has normalized length 10
    std::vector<CuspShape> cusps{c, c};
    Multislope both{{Slope::make(1, 0), Slope::make(1, 0)}};
    CHECK(multislope_length(both, cusps) ==
          doctest::Approx(10.0 / std::sqrt(2.0)).epsilon(1e-10));
    Multislope one{{Slope::make(1, 0), Slope::none()}};
    CHECK(multislope_length(one, cusps) == doctest::Approx(10.0).epsilon(1e-12));
    Multislope empty{{Slope::none(), Slope::none()}};
    CHECK(std::isinf(multislope_length(empty, cusps)));
    // replacing an empty component only shortens the multislope
    CHECK(multislope_length(both, cusps) <= multislope_length(one, cusps));
    for (int i = 0; i < 100; ++i) {
        std::vector<CuspShape> pair{random_cusp(), random_cusp()};
        Multislope partial{{Slope::make(std::uniform_int_distribution<long long>(-9, 9)(rng), 1),
                            Slope::none()}};
        Multislope full = partial;
        full.slopes[1] = Slope::make(1, std::uniform_int_distribution<long long>(1, 9)(rng));
        CHECK(multislope_length(full, pair) <= multislope_length(partial, pair));
    }
}

TEST_CASE("enumerate_short_slopes worked sets") {
    auto slopes = enumerate_short_slopes(square(), 2.5);
    CHECK(slopes.size() == 8);
    auto has = [&](long long p, long long q) {
        return std::find(slopes.begin(), slopes.end(), Slope::make(p, q)) != slopes.end();
    };
    CHECK(has(1, 0));
    CHECK(has(0, 1));
    CHECK(has(1, 1));
    CHECK(has(-1, 1));
    CHECK(has(2, 1));
    CHECK(has(-2, 1));
    CHECK(has(1, 2));
    CHECK(has(-1, 2));

    CHECK(enumerate_short_slopes(square(), 0.5).empty());

    CuspShape hex{{1.0, 0.0}, {1.0, 1.0}};
    auto two = enumerate_short_slopes(hex, 1.2);
    REQUIRE(two.size() == 2);
    CHECK(std::find(two.begin(), two.end(), Slope::make(1, 0)) != two.end());
    CHECK(std::find(two.begin(), two.end(), Slope::make(-1, 1)) != two.end());
}

TEST_CASE("enumerate_short_slopes agrees with the brute force scan") {
    for (int i = 0; i < 100; ++i) {
        CuspShape c = random_cusp();
        for (double n : {1.0, 2.5, hk_length_bound}) {
            auto fast = enumerate_short_slopes(c, n);
            auto slow = brute_force_short_slopes(c, n);
            REQUIRE(fast.size() == slow.size());
            for (const auto& s : slow)
                CHECK(std::find(fast.begin(), fast.end(), s) != fast.end());
        }
    }
}

TEST_CASE("hk_certify thresholds strictly at the bound") {
    CHECK(exceeds_hk_bound(std::nextafter(hk_length_bound, 1e9)));
    CHECK_FALSE(exceeds_hk_bound(hk_length_bound));
    CHECK(hk_length_bound == 7.5832);

    CuspShape len8{{64.0, 0.0}, {0.0, 1.0}}; // (1,0) has normalized length 64/8 = 8
    CuspShape len7{{49.0, 0.0}, {0.0, 1.0}};
    Multislope mu2{{Slope::make(1, 0), Slope::make(1, 0)}};
    CHECK(hk_certify(mu2, {len8, len8}));       // lengths (8, 8)
    CHECK_FALSE(hk_certify(mu2, {len8, len7})); // lengths (8, 7)
    Multislope empty{{Slope::none(), Slope::none()}};
    CHECK(hk_certify(empty, {len8, len8}));
}

TEST_CASE("apply_isometry") {
    CuspedManifoldData data = load_manifold_file(fixtures + "bulksymmetry-5cusp.json");
    REQUIRE(data.cusps.size() == 5);
    REQUIRE(data.isometries.size() == 1);
    const IsometryAction& g = data.isometries[0];

    Multislope ms = parse_multislope("*,1/1,-2/1,2/1,1/2");
    Multislope moved = apply_isometry(g, ms);
    CHECK(moved.slopes[0] == Slope::none());
    CHECK(moved.slopes[1] == Slope::make(1, 1));   // -(1,1) recanonicalized
    CHECK(moved.slopes[2] == Slope::make(2, 1));   // slopes 2 and 3 exchanged
    CHECK(moved.slopes[3] == Slope::make(-2, 1));
    CHECK(moved.slopes[4] == Slope::make(1, 2));
    CHECK(apply_isometry(g, moved) == ms); // involution

    IsometryAction identity;
    identity.perm = {0, 1, 2, 3, 4};
    identity.maps.assign(5, {1, 0, 0, 1});
    CHECK(identity.is_identity());
    CHECK(apply_isometry(identity, ms) == ms);

    IsometryAction flip;
    flip.perm = {0};
    flip.maps = {{1, 0, 0, -1}};
    flip.orientation = -1;
    Multislope horizontal{{Slope::make(1, 0)}};
    CHECK(apply_isometry(flip, horizontal) == horizontal);

    CHECK_THROWS_AS(apply_isometry(g, horizontal), invalid_multislope);
}

TEST_CASE("is_symmetry_breaking") {
    CuspedManifoldData no_sym{"trivial", {square(), square()}, {}};
    CHECK(is_symmetry_breaking(parse_multislope("1/1,2/1"), no_sym));

    CuspedManifoldData data = load_manifold_file(fixtures + "bulksymmetry-5cusp.json");
    Multislope fixed = parse_multislope("*,1/1,3/2,3/2,1/2");
    CHECK_FALSE(is_symmetry_breaking(fixed, data));
    Multislope moved = parse_multislope("*,1/1,-5/2,6/5,1/2"); // (1-3n,n) vs (b+1,b), n=2, b=5
    CHECK(is_symmetry_breaking(moved, data));

    // well-defined under sign flips of any component
    Multislope flipped = moved;
    flipped.slopes[2] = Slope::make(5, -2);
    CHECK(flipped.slopes[2] == moved.slopes[2]);
    CHECK(is_symmetry_breaking(flipped, data));
}

TEST_CASE("family_multislope") {
    Multislope ms = family_multislope(ExtRational(-1), ExtRational(-3), ExtRational(1), -2);
    REQUIRE(ms.slopes.size() == 5);
    CHECK(ms.slopes[0] == Slope::none());
    CHECK(ms.slopes[1] == Slope::make(1, 1));
    CHECK(ms.slopes[2] == Slope::make(-2, 1));
    CHECK(ms.slopes[3] == Slope::make(2, 1));
    CHECK(ms.slopes[4] == Slope::make(1, 2));

    // r - k = 0 gives the slope 0/1
    CHECK(family_multislope(ExtRational(3), ExtRational(-3), ExtRational(1), 3).slopes[1] ==
          Slope::make(0, 1));
    // 1 + s = (1-3n)/n for s = -4 + 1/n
    for (long long n : {-5LL, -1LL, 2LL, 7LL}) {
        ExtRational s = ExtRational(-4) + ExtRational(1, n);
        CHECK(family_multislope(ExtRational(-1), s, ExtRational(2), 1).slopes[2] ==
              Slope::make(1 - 3 * n, n));
    }
    CHECK_THROWS_AS(family_multislope(ExtRational(-1), ExtRational(-3), ExtRational(0), 1),
                    unsupported_parameters);
}

TEST_CASE("fixture loading and validation") {
    CuspedManifoldData sq = load_manifold_file(fixtures + "square-two-cusp.json");
    CHECK(sq.cusps.size() == 2);
    REQUIRE(sq.isometries.size() == 1);
    CHECK(sq.isometries[0].perm == std::vector<int>{1, 0});

    CHECK_THROWS_AS(load_manifold_data(R"({"name":"bad","cusps":[{"mu":[1,0],"lambda":[0,1]}],
        "isometries":[{"perm":[0],"maps":[[[2,0],[0,1]]],"orientation":1}]})"),
                    parse_error);
    CHECK_THROWS_AS(load_manifold_data(R"({"name":"bad","cusps":[{"mu":[1,0],"lambda":[2,0]}]})"),
                    parse_error);
}

TEST_CASE("orientation reversing fixture preserves one short slope per cusp") {
    CuspedManifoldData data = load_manifold_file(fixtures + "bulkreducible-4cusp.json");
    REQUIRE(data.isometries.size() == 1);
    const IsometryAction& g = data.isometries[0];
    CHECK(g.orientation == -1);
    for (std::size_t j = 0; j < data.cusps.size(); ++j) {
        auto slopes = enumerate_short_slopes(data.cusps[j], 3.0);
        REQUIRE(!slopes.empty());
        std::vector<Slope> preserved;
        for (const auto& s : slopes) {
            Multislope probe{{Slope::none(), Slope::none(), Slope::none(), Slope::none()}};
            probe.slopes[j] = s;
            if (apply_isometry(g, probe) == probe) preserved.push_back(s);
        }
        REQUIRE(!preserved.empty());
        // slopes come back sorted by length, so the minimum is the front;
        // it must be strictly shorter than any other preserved class
        double best = normalized_length(preserved.front(), data.cusps[j]);
        int minimal = 0;
        for (const auto& s : preserved)
            if (normalized_length(s, data.cusps[j]) <= best + 1e-12) ++minimal;
        CHECK(minimal == 1);
    }
}

TEST_CASE("multislope text round trip") {
    Multislope ms = parse_multislope("*,1/0,-2/1,2/1,1/2");
    CHECK(ms.slopes[1] == Slope::make(1, 0));
    CHECK(to_string(ms) == "*,1/0,-2/1,2/1,1/2");
}
