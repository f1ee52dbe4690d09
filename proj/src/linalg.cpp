#include "balcov/linalg.hpp"

#include "balcov/types.hpp"

namespace balcov {

std::optional<std::vector<Rational>> kernel_vector(const RationalMatrix& rows,
                                                   const std::vector<int>& columns) {
    size_t nrows = rows.size();
    size_t ncols = columns.size();
    if (ncols == 0) return std::nullopt;

    RationalMatrix a(nrows, std::vector<Rational>(ncols));
    for (size_t r = 0; r < nrows; ++r) {
        for (size_t c = 0; c < ncols; ++c) a[r][c] = rows[r][columns[c]];
    }

    // Gauss-Jordan, pivots recorded as (row, col).
    std::vector<std::pair<size_t, size_t>> pivots;
    size_t pivot_row = 0;
    size_t free_col = ncols;
    for (size_t c = 0; c < ncols && free_col == ncols; ++c) {
        size_t r = pivot_row;
        while (r < nrows && a[r][c] == 0) ++r;
        if (r == nrows) {
            free_col = c;  // leftmost free column
            break;
        }
        std::swap(a[r], a[pivot_row]);
        Rational inv = a[pivot_row][c];
        for (size_t cc = c; cc < ncols; ++cc) a[pivot_row][cc] /= inv;
        for (size_t rr = 0; rr < nrows; ++rr) {
            if (rr == pivot_row || a[rr][c] == 0) continue;
            Rational f = a[rr][c];
            for (size_t cc = c; cc < ncols; ++cc) a[rr][cc] -= f * a[pivot_row][cc];
        }
        pivots.emplace_back(pivot_row, c);
        ++pivot_row;
    }
    if (free_col == ncols) return std::nullopt;

    std::vector<Rational> z(ncols, Rational(0));
    z[free_col] = 1;
    for (const auto& [pr, pc] : pivots) z[pc] = -a[pr][free_col];

    for (size_t c = 0; c < ncols; ++c) {
        if (z[c] == 0) continue;
        if (z[c] < 0) {
            for (auto& v : z) v = -v;
        }
        break;
    }
    return z;
}

int matrix_rank(const RationalMatrix& rows) {
    if (rows.empty()) return 0;
    RationalMatrix a = rows;
    size_t nrows = a.size(), ncols = a[0].size();
    size_t pivot_row = 0;
    int rank = 0;
    for (size_t c = 0; c < ncols && pivot_row < nrows; ++c) {
        size_t r = pivot_row;
        while (r < nrows && a[r][c] == 0) ++r;
        if (r == nrows) continue;
        std::swap(a[r], a[pivot_row]);
        Rational inv = a[pivot_row][c];
        for (size_t cc = c; cc < ncols; ++cc) a[pivot_row][cc] /= inv;
        for (size_t rr = pivot_row + 1; rr < nrows; ++rr) {
            if (a[rr][c] == 0) continue;
            Rational f = a[rr][c];
            for (size_t cc = c; cc < ncols; ++cc) a[rr][cc] -= f * a[pivot_row][cc];
        }
        ++pivot_row;
        ++rank;
    }
    return rank;
}

void descend_to_extreme_point(const RationalMatrix& rows, std::vector<Rational>& point,
                              const Rational& lo, const Rational& hi) {
    size_t n = point.size();
    for (const auto& x : point) {
        if (x < lo || x > hi) throw Error(ErrorKind::internal, "descent start outside box");
    }
    while (true) {
        std::vector<int> free_cols;
        for (size_t j = 0; j < n; ++j) {
            if (point[j] > lo && point[j] < hi) free_cols.push_back(static_cast<int>(j));
        }
        auto z = kernel_vector(rows, free_cols);
        if (!z) return;  // free columns independent: extreme point

        // Largest tau >= 0 keeping point + tau * z inside the box; positive
        // because every free coordinate is strictly interior.
        std::optional<Rational> tau;
        for (size_t idx = 0; idx < free_cols.size(); ++idx) {
            const Rational& zi = (*z)[idx];
            if (zi == 0) continue;
            const Rational& xi = point[free_cols[idx]];
            Rational limit = zi > 0 ? Rational((hi - xi) / zi) : Rational((lo - xi) / zi);
            if (!tau || limit < *tau) tau = limit;
        }
        if (!tau) throw Error(ErrorKind::internal, "zero kernel direction in descent");
        for (size_t idx = 0; idx < free_cols.size(); ++idx) {
            point[free_cols[idx]] += *tau * (*z)[idx];
        }
    }
}

}  // namespace balcov
