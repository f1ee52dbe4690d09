#include "balcov/steinitz.hpp"

#include <algorithm>
#include <numeric>

#include "balcov/linalg.hpp"

namespace balcov {

std::vector<int> steinitz_order(const VectorFamily& v) {
    int n = v.size();
    int d = v.dimension();
    if (n < 1) throw Error(ErrorKind::precondition, "ordering requires at least one vector");
    for (const auto& s : v.component_sum()) {
        if (s != 0) throw Error(ErrorKind::precondition, "vectors must sum to zero");
    }

    std::vector<int> order(n);
    Rational maxnorm = v.max_inf_norm();
    if (maxnorm == 0 || n <= d) {
        std::iota(order.begin(), order.end(), 1);
        return order;
    }

    // Unit scale; the descent is scale invariant but the analysis is stated
    // for norms <= 1.
    RationalMatrix rows(d + 1, std::vector<Rational>(n));
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < d; ++i) rows[i][j] = v.vec(j)[i] / maxnorm;
    }
    for (int j = 0; j < n; ++j) rows[d][j] = 1;

    std::vector<char> active(n, 1);
    std::vector<Rational> lambda(n, Rational(n - d, n));
    for (int t = n; t > d; --t) {
        Rational shrink = Rational(t - 1 - d, t - d);
        std::vector<Rational> point(n, Rational(0));
        for (int j = 0; j < n; ++j) {
            if (active[j]) point[j] = lambda[j] * shrink;
        }
        descend_to_extreme_point(rows, point, Rational(0), Rational(1));
        int eject = -1;
        for (int j = 0; j < n; ++j) {
            if (active[j] && point[j] == 0) {
                eject = j;
                break;
            }
        }
        if (eject < 0)
            throw Error(ErrorKind::internal, "extreme point without a zero coordinate");
        order[t - 1] = eject + 1;
        active[eject] = 0;
        lambda = std::move(point);
    }
    int pos = 0;
    for (int j = 0; j < n; ++j) {
        if (active[j]) order[pos++] = j + 1;
    }

    Rational cap = Rational(d) * maxnorm;
    for (const auto& norm : prefix_inf_norms(v, order)) {
        if (norm > cap)
            throw Error(ErrorKind::internal, "ordering violates the d * maxnorm prefix bound");
    }
    return order;
}

VectorFamily family_to_vectors(const InstanceFamily& fam) {
    if (fam.k() < 2) throw Error(ErrorKind::dimension, "difference vectors require k >= 2");
    auto r = fam.uniform_r();
    if (!r || *r != 1)
        throw Error(ErrorKind::uniformity, "difference vectors require a 1-uniform family");
    int n = fam.n(), k = fam.k();

    auto singleton = [&](int i, int j) -> Rational {
        const auto& edges = fam.hyper(i).edges();
        auto it = edges.find(Edge{j});
        return it == edges.end() ? Rational(0) : it->second;
    };

    std::vector<std::vector<Rational>> vectors(n, std::vector<Rational>(k - 1));
    for (int j = 1; j <= n; ++j) {
        Rational last = singleton(k - 1, j);
        for (int i = 0; i + 1 < k; ++i) vectors[j - 1][i] = singleton(i, j) - last;
    }
    return VectorFamily(k - 1, std::move(vectors));
}

std::vector<Rational> prefix_inf_norms(const VectorFamily& v, const std::vector<int>& order) {
    int n = v.size(), d = v.dimension();
    if (static_cast<int>(order.size()) != n)
        throw Error(ErrorKind::validation, "order length differs from family size");
    std::vector<char> seen(n + 1, 0);
    for (int idx : order) {
        if (idx < 1 || idx > n || seen[idx])
            throw Error(ErrorKind::validation, "order is not a permutation of 1..n");
        seen[idx] = 1;
    }
    std::vector<Rational> sum(d, Rational(0));
    std::vector<Rational> norms(n);
    for (int t = 0; t < n; ++t) {
        const auto& vec = v.vec(order[t] - 1);
        Rational norm = 0;
        for (int i = 0; i < d; ++i) {
            sum[i] += vec[i];
            norm = std::max(norm, rational_abs(sum[i]));
        }
        norms[t] = norm;
    }
    return norms;
}

Rational max_prefix_inf_norm(const VectorFamily& v, const std::vector<int>& order) {
    Rational best = 0;
    for (const auto& norm : prefix_inf_norms(v, order)) best = std::max(best, norm);
    return best;
}

}  // namespace balcov
