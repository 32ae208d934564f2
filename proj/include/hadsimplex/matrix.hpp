#pragma once

#include "hadsimplex/rational.hpp"

#include <vector>

namespace hadsimplex {

/// Dense rational matrix, row-major.  Small and exact; everything downstream
/// (determinants, barycentric coordinates, norms) goes through this type, so
/// no floating point sneaks into the geometric core.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols);

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    RatMatrix transposed() const;
    RatMatrix operator*(const RatMatrix& rhs) const;
    bool operator==(const RatMatrix& rhs) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact determinant of an integer matrix (row-major, n*n entries) by
/// fraction-free Bareiss elimination with row pivoting.
BigInt bareiss_determinant_int(std::vector<BigInt> a, int n);

/// Exact determinant of a square rational matrix: rows are scaled to a common
/// integer denominator, the integer determinant is computed fraction-free, and
/// the scaling is divided back out.
Rational bareiss_determinant(const RatMatrix& m);

/// Exact inverse by Gauss-Jordan elimination.  Throws InvalidParameterError
/// when the input is not square or is singular.
RatMatrix inverse(const RatMatrix& m);

} // namespace hadsimplex
