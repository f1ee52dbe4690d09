#include <doctest.h>

#include <vector>

#include "balcov/core.hpp"
#include "balcov/generators.hpp"
#include "balcov/steinitz.hpp"
#include "fixtures.hpp"

using namespace balcov;

namespace {

VectorFamily sign_family() {
    return VectorFamily(1, {{Rational(1)}, {Rational(-1)}, {Rational(1)}, {Rational(-1)}});
}

VectorFamily axes_family() {
    return VectorFamily(2, {{Rational(1), Rational(0)},
                            {Rational(0), Rational(1)},
                            {Rational(-1), Rational(0)},
                            {Rational(0), Rational(-1)}});
}

// random sum-zero family: n-1 random vectors plus the negated sum
VectorFamily random_zero_sum(int d, int n, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> total(d, Rational(0));
    for (int j = 0; j + 1 < n; ++j) {
        std::vector<Rational> row;
        for (int i = 0; i < d; ++i) {
            Rational x(static_cast<long long>(rng.next_below(21)) - 10, 10);
            total[i] += x;
            row.push_back(std::move(x));
        }
        rows.push_back(std::move(row));
    }
    std::vector<Rational> last;
    for (int i = 0; i < d; ++i) last.push_back(-total[i]);
    rows.push_back(std::move(last));
    return VectorFamily(d, std::move(rows));
}

void check_order_contract(const VectorFamily& v, const std::vector<int>& order) {
    std::vector<char> seen(v.size() + 1, 0);
    for (int idx : order) {
        REQUIRE(idx >= 1);
        REQUIRE(idx <= v.size());
        CHECK_FALSE(seen[idx]);
        seen[idx] = 1;
    }
    CHECK(static_cast<int>(order.size()) == v.size());
    Rational cap = Rational(v.dimension()) * v.max_inf_norm();
    CHECK(max_prefix_inf_norm(v, order) <= cap);
    std::vector<Rational> norms = prefix_inf_norms(v, order);
    CHECK(norms.back() == 0);  // zero-sum preserved over the full prefix
}

}  // namespace

TEST_CASE("alternating signs stay within the unit interval") {
    VectorFamily v = sign_family();
    std::vector<int> order = steinitz_order(v);
    check_order_contract(v, order);
    CHECK(max_prefix_inf_norm(v, order) <= 1);
}

TEST_CASE("coordinate axes meet the dimension bound") {
    VectorFamily v = axes_family();
    std::vector<int> order = steinitz_order(v);
    check_order_contract(v, order);
    CHECK(max_prefix_inf_norm(v, order) <= 2);
}

TEST_CASE("single zero vector is ordered trivially") {
    VectorFamily v(3, {{Rational(0), Rational(0), Rational(0)}});
    std::vector<int> order = steinitz_order(v);
    CHECK(order == std::vector<int>{1});
    CHECK(max_prefix_inf_norm(v, order) == 0);
}

TEST_CASE("nonzero sum is rejected as a precondition") {
    VectorFamily v(1, {{Rational(1)}, {Rational(1)}});
    CHECK_THROWS_AS(steinitz_order(v), Error);
    try {
        steinitz_order(v);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::precondition);
    }
}

TEST_CASE("randomized sum-zero families meet the d * maxnorm bound") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        int d = 1 + static_cast<int>(seed % 5);
        int n = 3 + static_cast<int>(seed % 28);
        VectorFamily v = random_zero_sum(d, n, seed);
        check_order_contract(v, steinitz_order(v));
    }
}

TEST_CASE("ordering is scale equivariant") {
    VectorFamily v = random_zero_sum(3, 12, 4242);
    std::vector<std::vector<Rational>> scaled_rows;
    for (const auto& row : v.vectors()) {
        std::vector<Rational> scaled;
        for (const auto& x : row) scaled.push_back(x * Rational(3, 7));
        scaled_rows.push_back(std::move(scaled));
    }
    VectorFamily scaled(3, std::move(scaled_rows));
    std::vector<int> order = steinitz_order(v);
    CHECK(steinitz_order(scaled) == order);
    CHECK(max_prefix_inf_norm(scaled, order) ==
          Rational(3, 7) * max_prefix_inf_norm(v, order));
}

TEST_CASE("n at most d comes back in increasing order") {
    VectorFamily v(4, {{Rational(1), Rational(0), Rational(0), Rational(0)},
                       {Rational(-1), Rational(0), Rational(0), Rational(0)}});
    CHECK(steinitz_order(v) == std::vector<int>{1, 2});
}

TEST_CASE("difference vectors of the worked instance") {
    VectorFamily v = family_to_vectors(fixtures::e1());
    CHECK(v.dimension() == 1);
    CHECK(v.vectors() == std::vector<std::vector<Rational>>{{Rational(3, 10)},
                                                            {Rational(-3, 10)},
                                                            {Rational(-3, 10)},
                                                            {Rational(3, 10)}});
    for (const auto& comp : v.component_sum()) CHECK(comp == 0);
    CHECK(v.max_inf_norm() <= cover_slack(fixtures::e1()));
}

TEST_CASE("identical hypergraphs reduce to zero vectors") {
    VectorFamily v = family_to_vectors(fixtures::identical_uniform(6, 3));
    CHECK(v.dimension() == 2);
    for (const auto& row : v.vectors()) {
        for (const auto& x : row) CHECK(x == 0);
    }
}

TEST_CASE("difference vectors require 1-uniform input") {
    CHECK_THROWS_AS(family_to_vectors(fixtures::e2()), Error);
}

TEST_CASE("prefix norms recompute per step") {
    VectorFamily v = sign_family();
    std::vector<Rational> norms = prefix_inf_norms(v, {1, 2, 3, 4});
    CHECK(norms == std::vector<Rational>{Rational(1), Rational(0), Rational(1), Rational(0)});
    CHECK(max_prefix_inf_norm(v, {1, 3, 2, 4}) == 2);
}
