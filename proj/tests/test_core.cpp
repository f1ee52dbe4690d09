#include <doctest.h>

#include <vector>

#include "balcov/core.hpp"
#include "balcov/generators.hpp"
#include "fixtures.hpp"

using namespace balcov;

TEST_CASE("w_star sums exactly the contained edges") {
    InstanceFamily f1 = fixtures::e1();
    CHECK(w_star(f1.hyper(0), {1, 2}) == Rational(1, 2));
    CHECK(w_star(f1.hyper(0), {}) == 0);
    CHECK(w_star(f1.hyper(0), {1, 2, 3, 4}) == 1);

    InstanceFamily f2 = fixtures::e2_single();
    CHECK(w_star(f2.hyper(0), {1, 2, 3}) == Rational(1, 2));
    CHECK(w_star(f2.hyper(0), {1, 2, 3, 4}) == 1);
    CHECK(w_star(f2.hyper(0), {1, 4}) == 0);
}

TEST_CASE("w_star rejects out-of-range vertices") {
    InstanceFamily f1 = fixtures::e1();
    CHECK_THROWS_AS(w_star(f1.hyper(0), {0}), Error);
    CHECK_THROWS_AS(w_star(f1.hyper(0), {5}), Error);
    try {
        w_star(f1.hyper(0), {5});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_subset);
    }
}

TEST_CASE("delta is the marginal weight through j") {
    InstanceFamily f2 = fixtures::e2_single();
    CHECK(delta(f2.hyper(0), 3, {1, 2, 3}) == Rational(1, 5));
    CHECK(delta(f2.hyper(0), 1, {1, 2, 3, 4}) == Rational(1, 2));
    InstanceFamily f1 = fixtures::e1();
    CHECK(delta(f1.hyper(0), 1, {1, 2, 3, 4}) == Rational(2, 5));
    CHECK(delta(f1.hyper(1), 1, {1, 2, 3, 4}) == Rational(1, 10));
}

TEST_CASE("cover_slack and the half-weight validity flag") {
    CHECK(cover_slack(fixtures::e1()) == Rational(2, 5));
    CHECK(cover_slack(fixtures::e2()) == Rational(1, 2));
    CHECK(cover_slack(fixtures::identical_uniform(10, 3)) == Rational(1, 10));

    CHECK(cover_slack_report(fixtures::e1()).question_valid);
    CHECK_FALSE(cover_slack_report(fixtures::e2()).question_valid);
}

TEST_CASE("phi and unbalance on the worked instance") {
    InstanceFamily f1 = fixtures::e1();
    CHECK(phi(f1, {1}) == std::vector<Rational>{Rational(3, 10)});
    CHECK(phi(f1, {4, 3}) == std::vector<Rational>{Rational(0)});
    CHECK(unbalance(f1, {1}) == Rational(3, 10));
    CHECK(unbalance(f1, {3, 4}) == 0);
    CHECK(unbalance(f1, {2, 3, 4}) == Rational(3, 10));
    CHECK(phi_norm_sq(f1, {1}) == Rational(9, 100));
}

TEST_CASE("phi requires at least two hypergraphs") {
    InstanceFamily single = fixtures::e2_single();
    CHECK_THROWS_AS(phi(single, {1}), Error);
    CHECK(unbalance(single, {1, 2}) == 0);  // k = 1: no pair to compare
}

// sum_{j in S} delta(j, S) = r * w_star(S) for r-uniform hypergraphs
TEST_CASE("handshake identity over random families") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        int r = 1 + static_cast<int>(seed % 3);
        InstanceFamily fam = gen_random_family(12, 2 + seed % 3, r, Rational(2, 5), seed);
        SplitMix64 rng(seed * 77);
        std::vector<int> S;
        for (int v = 1; v <= fam.n(); ++v) {
            if (rng.next_below(2) == 0) S.push_back(v);
        }
        for (int i = 0; i < fam.k(); ++i) {
            Rational lhs(0);
            for (int j : S) lhs += delta(fam.hyper(i), j, S);
            CHECK(lhs == Rational(r) * w_star(fam.hyper(i), S));
        }
    }
}

TEST_CASE("monotone containment of w_star") {
    InstanceFamily fam = gen_random_family(10, 2, 2, Rational(2, 5), 42);
    CHECK(w_star(fam.hyper(0), {1, 2, 3}) <= w_star(fam.hyper(0), {1, 2, 3, 4}));
    CHECK(w_star(fam.hyper(0), {}) <= w_star(fam.hyper(0), {7}));
}

// unbalance^2 <= 2 * ||phi||^2: the max pairwise gap is at most the gap
// through index k plus another, each bounded by a phi component
TEST_CASE("pairwise gap against the difference vector norm") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        InstanceFamily fam = gen_random_family(9, 4, 1, Rational(1, 3), seed);
        SplitMix64 rng(seed);
        std::vector<int> S;
        for (int v = 1; v <= fam.n(); ++v) {
            if (rng.next_below(3) != 0) S.push_back(v);
        }
        Rational u = unbalance(fam, S);
        CHECK(u * u <= Rational(2) * phi_norm_sq(fam, S));
    }
}

TEST_CASE("delta never exceeds cover_slack") {
    InstanceFamily fam = gen_random_family(11, 3, 2, Rational(3, 10), 5);
    Rational c = cover_slack(fam);
    std::vector<int> full;
    for (int v = 1; v <= fam.n(); ++v) full.push_back(v);
    for (int i = 0; i < fam.k(); ++i) {
        for (int j = 1; j <= fam.n(); ++j) {
            CHECK(delta(fam.hyper(i), j, full) <= c);
        }
    }
}

TEST_CASE("floating point mirrors track the exact values") {
    InstanceFamily f1 = fixtures::e1();
    CHECK(w_star_fp(f1.hyper(0), {1, 2}) == doctest::Approx(0.5));
    CHECK(unbalance_fp(f1, {1}) == doctest::Approx(0.3));
    CHECK(cover_slack_fp(f1) == doctest::Approx(0.4));
}
