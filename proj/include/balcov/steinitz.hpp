#pragma once

#include <vector>

#include "balcov/types.hpp"

namespace balcov {

// Orders a zero-sum family so every prefix sum has infinity norm at most
// d * max_j ||v_j||_inf. Nested-set construction: maintain coefficient
// vectors lambda_t on t-subsets with sum t - d and zero weighted vector sum,
// step down via an extreme point of the shrunken polytope (exact rational
// elimination) and eject a zero coordinate (smallest index). Returns 1-based
// vector indices; inputs with n <= d come back in increasing order. The bound
// is re-verified on the output before returning.
std::vector<int> steinitz_order(const VectorFamily& v);

// Difference vectors of a 1-uniform family: component i of v_j is
// w_i({j}) - w_k({j}). Zero-sum with infinity norms at most cover_slack.
VectorFamily family_to_vectors(const InstanceFamily& fam);

std::vector<Rational> prefix_inf_norms(const VectorFamily& v, const std::vector<int>& order);

Rational max_prefix_inf_norm(const VectorFamily& v, const std::vector<int>& order);

}  // namespace balcov
