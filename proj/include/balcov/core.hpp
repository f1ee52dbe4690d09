#pragma once

#include <vector>

#include "balcov/types.hpp"

namespace balcov {

// Total weight of edges fully contained in S.
Rational w_star(const WeightedHypergraph& h, const std::vector<int>& S);

// Marginal contribution of j within S: w*(S) - w*(S \ {j}), i.e. the total
// weight of edges inside S that contain j. Requires j in S.
Rational delta(const WeightedHypergraph& h, int j, const std::vector<int>& S);

// Imbalance vector with k-1 components: w_i*(S) - w_k*(S). Requires k >= 2.
std::vector<Rational> phi(const InstanceFamily& fam, const std::vector<int>& S);

Rational phi_norm_sq(const InstanceFamily& fam, const std::vector<int>& S);

// Largest pairwise gap max_{i1,i2} |w_i1*(S) - w_i2*(S)|; zero when k = 1.
Rational unbalance(const InstanceFamily& fam, const std::vector<int>& S);

// Smallest c with every w_i*([n] \ {j}) >= 1 - c, equivalently the largest
// single-vertex incidence max_{i,j} delta_i(j, [n]).
Rational cover_slack(const InstanceFamily& fam);

struct CoverSlackReport {
    Rational value;
    bool question_valid = false;  // value < 1/2
};

CoverSlackReport cover_slack_report(const InstanceFamily& fam);

// Floating-point mirrors; benchmark plumbing only, never used for correctness.
double w_star_fp(const WeightedHypergraph& h, const std::vector<int>& S);
double delta_fp(const WeightedHypergraph& h, int j, const std::vector<int>& S);
std::vector<double> phi_fp(const InstanceFamily& fam, const std::vector<int>& S);
double unbalance_fp(const InstanceFamily& fam, const std::vector<int>& S);
double cover_slack_fp(const InstanceFamily& fam);

}  // namespace balcov
