#include "balcov/core.hpp"

#include <algorithm>

namespace balcov {

namespace {

bool edge_inside(const Edge& edge, const std::vector<char>& mask) {
    for (int v : edge) {
        if (!mask[v]) return false;
    }
    return true;
}

}  // namespace

Rational w_star(const WeightedHypergraph& h, const std::vector<int>& S) {
    auto sorted = normalize_subset(h.ground_size(), S);
    auto mask = subset_mask(h.ground_size(), sorted);
    Rational total = 0;
    for (const auto& [edge, weight] : h.edges()) {
        if (edge_inside(edge, mask)) total += weight;
    }
    return total;
}

Rational delta(const WeightedHypergraph& h, int j, const std::vector<int>& S) {
    auto sorted = normalize_subset(h.ground_size(), S);
    auto mask = subset_mask(h.ground_size(), sorted);
    if (j < 1 || j > h.ground_size() || !mask[j])
        throw Error(ErrorKind::precondition, "delta requires j in S");
    Rational total = 0;
    for (const auto& [edge, weight] : h.edges()) {
        if (!std::binary_search(edge.begin(), edge.end(), j)) continue;
        if (edge_inside(edge, mask)) total += weight;
    }
    return total;
}

std::vector<Rational> phi(const InstanceFamily& fam, const std::vector<int>& S) {
    if (fam.k() < 2) throw Error(ErrorKind::dimension, "phi requires k >= 2");
    Rational last = w_star(fam.hyper(fam.k() - 1), S);
    std::vector<Rational> out;
    out.reserve(fam.k() - 1);
    for (int i = 0; i + 1 < fam.k(); ++i) out.push_back(w_star(fam.hyper(i), S) - last);
    return out;
}

Rational phi_norm_sq(const InstanceFamily& fam, const std::vector<int>& S) {
    Rational sq = 0;
    for (const auto& c : phi(fam, S)) sq += c * c;
    return sq;
}

Rational unbalance(const InstanceFamily& fam, const std::vector<int>& S) {
    if (fam.k() == 1) {
        normalize_subset(fam.n(), S);  // still validate
        return 0;
    }
    Rational lo, hi;
    for (int i = 0; i < fam.k(); ++i) {
        Rational v = w_star(fam.hyper(i), S);
        if (i == 0) {
            lo = hi = v;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return hi - lo;
}

Rational cover_slack(const InstanceFamily& fam) {
    // max_{i,j} delta_i(j, [n]): per vertex, the total incident weight.
    Rational best = 0;
    for (int i = 0; i < fam.k(); ++i) {
        std::vector<Rational> incidence(fam.n() + 1, Rational(0));
        for (const auto& [edge, weight] : fam.hyper(i).edges()) {
            for (int v : edge) incidence[v] += weight;
        }
        for (int j = 1; j <= fam.n(); ++j) best = std::max(best, incidence[j]);
    }
    return best;
}

CoverSlackReport cover_slack_report(const InstanceFamily& fam) {
    CoverSlackReport report;
    report.value = cover_slack(fam);
    report.question_valid = report.value < Rational(1, 2);
    return report;
}

double w_star_fp(const WeightedHypergraph& h, const std::vector<int>& S) {
    auto sorted = normalize_subset(h.ground_size(), S);
    auto mask = subset_mask(h.ground_size(), sorted);
    double total = 0;
    for (const auto& [edge, weight] : h.edges()) {
        if (edge_inside(edge, mask)) total += to_double(weight);
    }
    return total;
}

double delta_fp(const WeightedHypergraph& h, int j, const std::vector<int>& S) {
    return to_double(delta(h, j, S));
}

std::vector<double> phi_fp(const InstanceFamily& fam, const std::vector<int>& S) {
    std::vector<double> out;
    for (const auto& c : phi(fam, S)) out.push_back(to_double(c));
    return out;
}

double unbalance_fp(const InstanceFamily& fam, const std::vector<int>& S) {
    double lo = 0, hi = 0;
    for (int i = 0; i < fam.k(); ++i) {
        double v = w_star_fp(fam.hyper(i), S);
        if (i == 0) {
            lo = hi = v;
        } else {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    return hi - lo;
}

double cover_slack_fp(const InstanceFamily& fam) { return to_double(cover_slack(fam)); }

}  // namespace balcov
