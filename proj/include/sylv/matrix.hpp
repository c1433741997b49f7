#pragma once

#include <utility>
#include <vector>

#include "sylv/rational.hpp"

namespace sylv {

/// Dense row-major matrix of exact rationals.
class ScalarMatrix {
  public:
    ScalarMatrix() = default;
    ScalarMatrix(int rows, int cols) : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw dimension_error("ScalarMatrix: negative dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }

    ScalarMatrix operator*(const ScalarMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw dimension_error("ScalarMatrix: incompatible product");
        ScalarMatrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                if (at(i, k) == 0) continue;
                for (int j = 0; j < rhs.cols_; ++j) out.at(i, j) += at(i, k) * rhs.at(k, j);
            }
        return out;
    }

    void swap_rows(int a, int b) {
        for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
    }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> entries_;
};

namespace detail {

/// Fraction-free Bareiss elimination over the integers. Consumes its input.
inline Integer bareiss_int_det(std::vector<Integer>& m, int n) {
    auto e = [&](int r, int c) -> Integer& { return m[static_cast<size_t>(r) * n + c]; };
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (e(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(e(k, c), e(pivot, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
            }
            e(i, k) = 0;
        }
        prev = e(k, k);
    }
    return n == 0 ? Integer(1) : Integer(sign * e(n - 1, n - 1));
}

} // namespace detail

/// Exact determinant. Denominators are cleared row by row, then the integer
/// core runs fraction-free Bareiss; 0x0 determinant is 1.
inline Rational det(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw dimension_error("det: matrix must be square");
    const int n = m.rows();
    if (n == 0) return 1;
    std::vector<Integer> im(static_cast<size_t>(n) * n);
    Integer scale = 1;
    for (int r = 0; r < n; ++r) {
        Integer row_lcm = 1;
        for (int c = 0; c < n; ++c) row_lcm = boost::multiprecision::lcm(row_lcm, denominator(m.at(r, c)));
        for (int c = 0; c < n; ++c) {
            const Rational v = m.at(r, c) * row_lcm;
            im[static_cast<size_t>(r) * n + c] = numerator(v);
        }
        scale *= row_lcm;
    }
    return Rational(detail::bareiss_int_det(im, n)) / Rational(scale);
}

} // namespace sylv
