#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sworbit/int_matrix.hpp"
#include "sworbit/integers.hpp"

namespace sworbit {

/// Smith normal form of an integer matrix A:
///   left * A * right == diagonal(d)  with |det left| = |det right| = 1,
/// d nonnegative, each nonzero entry dividing the next, zeros trailing.
/// `d` always has length min(rows, cols).
struct SmithDecomposition {
    std::vector<Int> d;
    IntMatrix left;   // row transforms, rows x rows
    IntMatrix right;  // column transforms, cols x cols

    IntMatrix diagonal(std::size_t rows, std::size_t cols) const {
        return IntMatrix::diagonal(rows, cols, d);
    }
};

namespace detail {

// Smallest nonzero |entry| in the trailing submatrix, first hit in row-major
// order on ties.  The scan order makes the transforms reproducible run to run.
inline std::optional<std::pair<std::size_t, std::size_t>> select_pivot(const IntMatrix& b,
                                                                       std::size_t from) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs = 0;
    for (std::size_t r = from; r < b.rows(); ++r)
        for (std::size_t c = from; c < b.cols(); ++c) {
            if (b.at(r, c) == 0) continue;
            Int mag = abs_int(b.at(r, c));
            if (!best || mag < best_abs) {
                best = {r, c};
                best_abs = mag;
            }
        }
    return best;
}

}  // namespace detail

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    IntMatrix b = a;
    IntMatrix u = IntMatrix::identity(m);
    IntMatrix v = IntMatrix::identity(n);

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        auto pivot = detail::select_pivot(b, t);
        if (!pivot) break;  // trailing block is zero; remaining divisors are 0

        for (;;) {
            b.swap_rows(t, pivot->first);
            u.swap_rows(t, pivot->first);
            b.swap_cols(t, pivot->second);
            v.swap_cols(t, pivot->second);

            bool clean = true;
            for (std::size_t r = t + 1; r < m; ++r) {
                if (b.at(r, t) == 0) continue;
                Int q = b.at(r, t) / b.at(t, t);  // truncated: remainder shrinks below pivot
                b.add_row_multiple(r, t, -q);
                u.add_row_multiple(r, t, -q);
                if (b.at(r, t) != 0) clean = false;
            }
            for (std::size_t c = t + 1; c < n; ++c) {
                if (b.at(t, c) == 0) continue;
                Int q = b.at(t, c) / b.at(t, t);
                b.add_col_multiple(c, t, -q);
                v.add_col_multiple(c, t, -q);
                if (b.at(t, c) != 0) clean = false;
            }
            if (clean) {
                // Pivot must divide the whole trailing block for the
                // divisor chain; fold in a bad row and re-reduce if not.
                bool divides_all = true;
                for (std::size_t r = t + 1; r < m && divides_all; ++r)
                    for (std::size_t c = t + 1; c < n; ++c)
                        if (b.at(r, c) % b.at(t, t) != 0) {
                            b.add_row_multiple(t, r, 1);
                            u.add_row_multiple(t, r, 1);
                            divides_all = false;
                            break;
                        }
                if (divides_all) break;
            }
            pivot = detail::select_pivot(b, t);
        }

        if (b.at(t, t) < 0) {
            b.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithDecomposition result;
    result.d.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) result.d.push_back(b.at(i, i));
    result.left = std::move(u);
    result.right = std::move(v);
    return result;
}

}  // namespace sworbit
