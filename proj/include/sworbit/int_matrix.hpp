#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sworbit/errors.hpp"
#include "sworbit/integers.hpp"

namespace sworbit {

/// Dense integer matrix with exact entries, row-major storage.
/// Zero-by-n and n-by-zero shapes are legal and behave like empty products.
class IntMatrix {
public:
    IntMatrix() = default;

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    /// Builds from a row list; every row must have the same length.
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_)
                raise(errc::dimension_mismatch, "ragged row list in matrix literal");
            for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
        }
        return m;
    }

    /// rows x cols matrix whose leading diagonal is `diag`, zero elsewhere.
    static IntMatrix diagonal(std::size_t rows, std::size_t cols, const std::vector<Int>& diag) {
        IntMatrix m(rows, cols);
        for (std::size_t i = 0; i < diag.size() && i < rows && i < cols; ++i) m.at(i, i) = diag[i];
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return entries_.empty(); }

    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool operator==(const IntMatrix& other) const = default;

    IntMatrix operator*(const IntMatrix& rhs) const {
        if (cols_ != rhs.rows_) raise(errc::dimension_mismatch, "matrix product shape mismatch");
        IntMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& aik = at(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += aik * rhs.at(k, j);
            }
        return out;
    }

    // Elementary operations used by the normal-form algorithm.  The same
    // operation applied to the transform matrices keeps U*A*V in step.
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
    }

    void add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
        if (k == 0) return;
        for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += k * at(src, c);
    }

    void add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
        if (k == 0) return;
        for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += k * at(r, src);
    }

    void negate_row(std::size_t r) {
        for (std::size_t c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const {
        if (rows_ != cols_) raise(errc::dimension_mismatch, "determinant of non-square matrix");
        const std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix m = *this;
        Int prev = 1;
        int sign = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m.at(k, k) == 0) {
                std::size_t pivot = k;
                while (pivot < n && m.at(pivot, k) == 0) ++pivot;
                if (pivot == n) return 0;
                m.swap_rows(k, pivot);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    m.at(i, j) = num / prev;  // divides exactly
                }
                m.at(i, k) = 0;
            }
            prev = m.at(k, k);
        }
        return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
    }

    std::string to_string() const {
        std::ostringstream out;
        out << "[";
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r) out << "; ";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) out << ",";
                out << at(r, c);
            }
        }
        out << "]";
        return out.str();
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

}  // namespace sworbit
