#pragma once

#include <optional>
#include <vector>

#include "balcov/rational.hpp"

namespace balcov {

using RationalMatrix = std::vector<std::vector<Rational>>;  // row-major

// Kernel vector of the column submatrix selected by `columns`, or nullopt if
// those columns are linearly independent. Deterministic: Gauss-Jordan with
// first-nonzero pivots, free variable = leftmost non-pivot column, result
// scaled so its first nonzero entry is positive. Indices in the returned
// vector follow the order of `columns`.
std::optional<std::vector<Rational>> kernel_vector(const RationalMatrix& rows,
                                                   const std::vector<int>& columns);

int matrix_rank(const RationalMatrix& rows);

// Moves `point` to an extreme point of { x in [lo, hi]^n : rows * x = rows * point },
// repeatedly sliding along kernel directions of the non-tight columns until the
// first coordinate hits a bound. `point` must satisfy the box constraints.
void descend_to_extreme_point(const RationalMatrix& rows, std::vector<Rational>& point,
                              const Rational& lo, const Rational& hi);

}  // namespace balcov
