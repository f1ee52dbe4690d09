#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "balcov/core.hpp"
#include "balcov/generators.hpp"
#include "balcov/steinitz.hpp"
#include "fixtures.hpp"

using namespace balcov;

TEST_CASE("splitmix64 matches the reference stream") {
    SplitMix64 a(0);
    CHECK(a.next() == 0xe220a8397b1dcdafULL);
    CHECK(a.next() == 0x6e789e6aa1b965f4ULL);
    CHECK(a.next() == 0x06c45d188009454fULL);

    SplitMix64 b(42);
    CHECK(b.next() == 0xbdd732262feb6e95ULL);
    CHECK(b.next() == 0x28efe333b266f103ULL);

    SplitMix64 c(7);
    std::vector<std::uint64_t> digits;
    for (int i = 0; i < 5; ++i) digits.push_back(c.next_below(10));
    CHECK(digits == std::vector<std::uint64_t>{7, 4, 6, 3, 4});
}

TEST_CASE("shuffle is a seed-determined permutation") {
    std::vector<int> v(12);
    std::iota(v.begin(), v.end(), 1);
    SplitMix64 rng(99);
    rng.shuffle(v);
    std::vector<int> w(12);
    std::iota(w.begin(), w.end(), 1);
    SplitMix64 rng2(99);
    rng2.shuffle(w);
    CHECK(v == w);
    std::sort(w.begin(), w.end());
    for (int i = 0; i < 12; ++i) CHECK(w[i] == i + 1);
}

TEST_CASE("one-vertex family is the point mass") {
    InstanceFamily fam = gen_random_family(1, 1, 1, Rational(1), 3);
    CHECK(fam.n() == 1);
    CHECK(fam.hyper(0).edges().at({1}) == 1);
}

TEST_CASE("uniform generator honors the slack target") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        int k = 1 + static_cast<int>(seed % 4);
        int r = 1 + static_cast<int>(seed % 3);
        int n = 8 + static_cast<int>(seed % 7);
        Rational c(2, 5);
        InstanceFamily fam = gen_random_family(n, k, r, c, seed);
        CHECK(fam.n() == n);
        CHECK(fam.k() == k);
        REQUIRE(fam.uniform_r().has_value());
        CHECK(*fam.uniform_r() == r);
        CHECK(cover_slack(fam) <= c);
        CHECK(fam == gen_random_family(n, k, r, c, seed));
    }
}

TEST_CASE("tighter slack target is still met") {
    InstanceFamily fam = gen_random_family(10, 3, 2, Rational(1, 4), 7);
    CHECK(cover_slack(fam) <= Rational(1, 4));
}

TEST_CASE("slack below r/n is refused") {
    CHECK_THROWS_AS(gen_random_family(10, 2, 2, Rational(1, 10), 1), Error);
    try {
        gen_random_family(10, 2, 2, Rational(1, 10), 1);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::infeasible);
    }
}

TEST_CASE("exactly tight slack forces a perfectly regular family") {
    InstanceFamily fam = gen_random_family(6, 2, 2, Rational(1, 3), 11);
    REQUIRE(fam.uniform_r().has_value());
    CHECK(*fam.uniform_r() == 2);
    CHECK(cover_slack(fam) == Rational(1, 3));
}

TEST_CASE("mixed-cardinality generator stays within bounds") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        int max_card = 1 + static_cast<int>(seed % 4);
        InstanceFamily fam = gen_random_general(9, 2, max_card, Rational(2, 5), seed);
        CHECK(cover_slack(fam) <= Rational(2, 5));
        for (int i = 0; i < fam.k(); ++i) {
            for (const auto& [edge, weight] : fam.hyper(i).edges()) {
                CHECK(static_cast<int>(edge.size()) >= 1);
                CHECK(static_cast<int>(edge.size()) <= max_card);
                CHECK(weight > 0);
            }
        }
        CHECK(fam == gen_random_general(9, 2, max_card, Rational(2, 5), seed));
    }
}

TEST_CASE("mixed generator at the 1/n floor returns uniform singletons") {
    InstanceFamily fam = gen_random_general(5, 2, 3, Rational(1, 5), 4);
    for (int i = 0; i < fam.k(); ++i) {
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            CHECK(edge.size() == 1);
            CHECK(weight == Rational(1, 5));
        }
    }
    CHECK(cover_slack(fam) == Rational(1, 5));
}

TEST_CASE("sign vector families of orders one and two") {
    VectorFamily v1 = gen_hadamard_vectors(1);
    REQUIRE(v1.size() == 2);
    CHECK(v1.vec(0) == std::vector<Rational>{Rational(1)});
    CHECK(v1.vec(1) == std::vector<Rational>{Rational(-1)});

    VectorFamily v2 = gen_hadamard_vectors(2);
    REQUIRE(v2.size() == 4);
    CHECK(v2.vec(0) == std::vector<Rational>{Rational(1), Rational(1)});
    CHECK(v2.vec(1) == std::vector<Rational>{Rational(1), Rational(-1)});
    CHECK(v2.vec(2) == std::vector<Rational>{Rational(-1), Rational(0)});
    CHECK(v2.vec(3) == std::vector<Rational>{Rational(-1), Rational(0)});
}

TEST_CASE("order-four sign vectors are sum-zero with unit norms") {
    VectorFamily v = gen_hadamard_vectors(4);
    REQUIRE(v.size() == 8);
    CHECK(v.dimension() == 4);
    for (const auto& component : v.component_sum()) CHECK(component == 0);
    CHECK(v.max_inf_norm() == 1);
}

TEST_CASE("sign vector order must be a power of two") {
    CHECK_THROWS_AS(gen_hadamard_vectors(3), Error);
    CHECK_THROWS_AS(gen_hadamard_vectors(0), Error);
    try {
        gen_hadamard_vectors(6);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parameter);
    }
}

TEST_CASE("lifting vectors into singleton weights, worked example") {
    // d=1, five vectors, c=2/5, theta=1/2: n = max(5, 1/((1/2)(2/5))) = 5
    std::vector<std::vector<Rational>> rows = {
        {Rational(1, 5)}, {Rational(-1, 5)}, {Rational(0)}, {Rational(0)}, {Rational(0)}};
    VectorFamily v(1, rows);
    InstanceFamily fam = vectors_to_family(v, Rational(2, 5), Rational(1, 2));
    REQUIRE(fam.n() == 5);
    REQUIRE(fam.k() == 2);
    const auto& w1 = fam.hyper(0).edges();
    CHECK(w1.at({1}) == Rational(2, 5));
    CHECK(w1.find({2}) == w1.end());  // zero weight has no edge
    CHECK(w1.at({3}) == Rational(1, 5));
    CHECK(w1.at({4}) == Rational(1, 5));
    CHECK(w1.at({5}) == Rational(1, 5));
    for (int j = 1; j <= 5; ++j) CHECK(fam.hyper(1).edges().at({j}) == Rational(1, 5));
}

TEST_CASE("lift and read-back round trip, including padding") {
    std::vector<std::vector<Rational>> rows = {{Rational(1, 10), Rational(-1, 10)},
                                               {Rational(-1, 10), Rational(1, 10)}};
    VectorFamily v(2, rows);
    Rational c(1, 4), theta(1, 2);
    InstanceFamily fam = vectors_to_family(v, c, theta);
    // padding to n = 1/((1-theta) c) = 8 appends zero vectors
    REQUIRE(fam.n() == 8);
    VectorFamily back = family_to_vectors(fam);
    REQUIRE(back.size() == 8);
    for (int j = 0; j < 2; ++j) CHECK(back.vec(j) == v.vec(j));
    for (int j = 2; j < 8; ++j) {
        CHECK(back.vec(j) == std::vector<Rational>(2, Rational(0)));
    }
}

TEST_CASE("all-zero vectors lift to the uniform family") {
    VectorFamily v(1, std::vector<std::vector<Rational>>(4, {Rational(0)}));
    InstanceFamily fam = vectors_to_family(v, Rational(1, 2), Rational(1, 2));
    for (int i = 0; i < fam.k(); ++i) {
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            CHECK(weight == Rational(1, fam.n()));
        }
    }
}

TEST_CASE("lift rejects oversized or unbalanced vectors") {
    std::vector<std::vector<Rational>> big = {{Rational(1, 2)}, {Rational(-1, 2)}};
    CHECK_THROWS_AS(vectors_to_family(VectorFamily(1, big), Rational(2, 5), Rational(1, 2)),
                    Error);
    try {
        vectors_to_family(VectorFamily(1, big), Rational(2, 5), Rational(1, 2));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::reduction);
    }

    std::vector<std::vector<Rational>> skew = {{Rational(1, 10)}, {Rational(1, 10)}};
    try {
        vectors_to_family(VectorFamily(1, skew), Rational(2, 5), Rational(1, 2));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::reduction);
    }
}

TEST_CASE("near-regular blocks reject a non-integer subset size") {
    AlmostRegularParams p;
    p.c = Rational(1, 5);  // (4c)^{-1} = 5/4
    p.eps = Rational(1, 2);
    p.r = 10;
    p.m = 100;
    CHECK_THROWS_AS(gen_almost_regular(p), Error);
    try {
        gen_almost_regular(p);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::parameter);
    }
}

TEST_CASE("near-regular blocks succeed at a comfortable size") {
    AlmostRegularParams p;
    p.c = Rational(1, 8);
    p.eps = Rational(1, 2);
    p.r = 16;
    p.m = 400;
    p.seed = 1;
    AlmostRegularResult res = gen_almost_regular(p);
    CHECK(res.n == 128);  // r/c
    CHECK(res.m == 400);
    CHECK(res.s == 2);    // (4c)^{-1}
    CHECK(res.gap_threshold == 5);  // eps*m/40
    CHECK(res.success);
    CHECK(res.exhaustive_d);
    CHECK(res.certified);
    REQUIRE(res.bullets.size() == 4);
    for (const auto& bullet : res.bullets) CHECK(bullet.holds);
    REQUIRE(res.block1.size() == 400);
    REQUIRE(res.block2.size() == 400);
    Rational degree_cap = p.c * Rational(res.m);
    std::vector<int> deg1(res.n + 1, 0), deg2(res.n + 1, 0);
    for (const auto& nb : res.block1) {
        for (int v : nb) {
            REQUIRE(v >= 1);
            REQUIRE(v <= res.n);
            ++deg1[v];
        }
        CHECK(Rational(nb.size()) >= (1 - p.eps) * Rational(p.r));
        CHECK(static_cast<int>(nb.size()) <= p.r);
    }
    for (const auto& nb : res.block2) {
        for (int v : nb) ++deg2[v];
    }
    for (int v = 1; v <= res.n; ++v) {
        CHECK(Rational(deg1[v]) <= degree_cap);
        CHECK(Rational(deg2[v]) <= degree_cap);
    }

    AlmostRegularResult again = gen_almost_regular(p);
    CHECK(again.block1 == res.block1);
    CHECK(again.block2 == res.block2);
    CHECK(again.attempts == res.attempts);
}

TEST_CASE("near-regular blocks report failure instead of throwing") {
    AlmostRegularParams p;
    p.c = Rational(1, 8);
    p.eps = Rational(1, 2);
    p.r = 16;
    p.m = 80;   // too small for the subset-gap property to concentrate
    p.seed = 2;
    p.retry_budget = 3;
    AlmostRegularResult res = gen_almost_regular(p);
    CHECK(res.attempts == 3);
    CHECK_FALSE(res.success);
    CHECK_FALSE(res.certified);
    REQUIRE(res.failure_counts.size() == 4);
    int total = 0;
    for (int f : res.failure_counts) total += f;
    CHECK(total >= 3);  // every attempt failed at least one property
}
