#include "hadsimplex/matrix.hpp"

#include "hadsimplex/errors.hpp"

#include <utility>

namespace hadsimplex {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw InvalidParameterError("negative matrix dimension");
    data_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::transposed() const {
    RatMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionMismatchError("matrix product shape mismatch");
    RatMatrix out(rows_, rhs.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int k = 0; k < cols_; ++k) {
            const Rational& lhs_rk = at(r, k);
            if (lhs_rk == 0) continue;
            for (int c = 0; c < rhs.cols_; ++c) out.at(r, c) += lhs_rk * rhs.at(k, c);
        }
    return out;
}

BigInt bareiss_determinant_int(std::vector<BigInt> a, int n) {
    if (n == 0) return 1;
    if (static_cast<std::size_t>(n) * n != a.size())
        throw DimensionMismatchError("entry count does not match matrix order");
    auto idx = [n](int r, int c) { return static_cast<std::size_t>(r) * n + c; };
    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[idx(k, k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[idx(r, k)] != 0) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(a[idx(k, c)], a[idx(swap_row, c)]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                // Fraction-free update: the division by the previous pivot is
                // exact, which keeps every intermediate an integer.
                a[idx(r, c)] = (a[idx(r, c)] * a[idx(k, k)] - a[idx(r, k)] * a[idx(k, c)]) / prev;
            }
            a[idx(r, k)] = 0;
        }
        prev = a[idx(k, k)];
    }
    return sign > 0 ? a[idx(n - 1, n - 1)] : BigInt(-a[idx(n - 1, n - 1)]);
}

Rational bareiss_determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatchError("determinant of a non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    // Scale each row to integers; det picks up the product of the scalings.
    std::vector<BigInt> ints(static_cast<std::size_t>(n) * n);
    BigInt scale_product = 1;
    for (int r = 0; r < n; ++r) {
        BigInt row_lcm = 1;
        for (int c = 0; c < n; ++c) row_lcm = lcm(row_lcm, denominator(m.at(r, c)));
        for (int c = 0; c < n; ++c) {
            const Rational& v = m.at(r, c);
            ints[static_cast<std::size_t>(r) * n + c] =
                numerator(v) * (row_lcm / denominator(v));
        }
        scale_product *= row_lcm;
    }
    return Rational(bareiss_determinant_int(std::move(ints), n), scale_product);
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidParameterError("inverse of a non-square matrix");
    const int n = m.rows();
    RatMatrix work = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (work.at(r, k) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw InvalidParameterError("inverse of a singular matrix");
        if (pivot != k)
            for (int c = 0; c < n; ++c) {
                std::swap(work.at(k, c), work.at(pivot, c));
                std::swap(inv.at(k, c), inv.at(pivot, c));
            }
        const Rational p = work.at(k, k);
        for (int c = 0; c < n; ++c) {
            work.at(k, c) /= p;
            inv.at(k, c) /= p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == k) continue;
            const Rational f = work.at(r, k);
            if (f == 0) continue;
            for (int c = 0; c < n; ++c) {
                work.at(r, c) -= f * work.at(k, c);
                inv.at(r, c) -= f * inv.at(k, c);
            }
        }
    }
    return inv;
}

} // namespace hadsimplex
