#include "doctest.h"

#include "hadsimplex/errors.hpp"
#include "hadsimplex/matrix.hpp"

#include <random>
#include <vector>

using namespace hadsimplex;

namespace {

// Independent oracle: cofactor expansion along the first row.  Exponential,
// which is fine for the n <= 5 cross-checks below.
BigInt cofactor_det(const std::vector<BigInt>& a, int n) {
    if (n == 1) return a[0];
    BigInt det = 0;
    std::vector<BigInt> minor(static_cast<std::size_t>(n - 1) * (n - 1));
    for (int j = 0; j < n; ++j) {
        for (int r = 1; r < n; ++r) {
            int mc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[static_cast<std::size_t>(r - 1) * (n - 1) + mc++] =
                    a[static_cast<std::size_t>(r) * n + c];
            }
        }
        const BigInt term = a[j] * cofactor_det(minor, n - 1);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

} // namespace

TEST_CASE("bareiss matches cofactor expansion on random integer matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int n = 1; n <= 5; ++n) {
        for (int trial = 0; trial < 30; ++trial) {
            std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
            for (auto& v : a) v = entry(rng);
            CHECK(bareiss_determinant_int(a, n) == cofactor_det(a, n));
        }
    }
}

TEST_CASE("bareiss known values") {
    CHECK(bareiss_determinant_int({BigInt(7)}, 1) == 7);
    // identity
    for (int n = 1; n <= 5; ++n) {
        std::vector<BigInt> a(static_cast<std::size_t>(n) * n, BigInt(0));
        for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i) * n + i] = 1;
        CHECK(bareiss_determinant_int(a, n) == 1);
    }
    // |2 1 1; 1 3 1; 1 1 4| = 2*11 - 1*3 + 1*(-2) = 17
    CHECK(bareiss_determinant_int({BigInt(2), BigInt(1), BigInt(1),
                                   BigInt(1), BigInt(3), BigInt(1),
                                   BigInt(1), BigInt(1), BigInt(4)}, 3) == 17);
    // singular (repeated row)
    CHECK(bareiss_determinant_int({BigInt(1), BigInt(2),
                                   BigInt(1), BigInt(2)}, 2) == 0);
    // needs row pivoting (zero leading pivot)
    CHECK(bareiss_determinant_int({BigInt(0), BigInt(1),
                                   BigInt(1), BigInt(0)}, 2) == -1);
}

TEST_CASE("rational determinant clears denominators correctly") {
    RatMatrix m(2, 2);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(1, 3);
    m.at(1, 0) = Rational(1, 4);
    m.at(1, 1) = Rational(1, 5);
    CHECK(bareiss_determinant(m) == Rational(1, 60));

    CHECK(bareiss_determinant(RatMatrix::identity(4)) == 1);

    RatMatrix s(2, 2);  // proportional rows
    s.at(0, 0) = Rational(1, 2);
    s.at(0, 1) = Rational(1, 3);
    s.at(1, 0) = Rational(3, 2);
    s.at(1, 1) = Rational(1, 1);
    CHECK(bareiss_determinant(s) == 0);
}

TEST_CASE("inverse round-trips and rejects singular input") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> entry(-4, 4);
    int found = 0;
    while (found < 10) {
        RatMatrix m(3, 3);
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                m.at(r, c) = Rational(entry(rng), 1 + (entry(rng) & 1));
        if (bareiss_determinant(m) == 0) continue;
        ++found;
        CHECK(m * inverse(m) == RatMatrix::identity(3));
        CHECK(inverse(m) * m == RatMatrix::identity(3));
    }

    RatMatrix sing(2, 2);
    sing.at(0, 0) = 1;
    sing.at(0, 1) = 2;
    sing.at(1, 0) = 2;
    sing.at(1, 1) = 4;
    CHECK_THROWS_AS(inverse(sing), InvalidParameterError);

    RatMatrix rect(2, 3);
    CHECK_THROWS_AS(inverse(rect), InvalidParameterError);
}

TEST_CASE("matrix product and transpose basics") {
    RatMatrix a(2, 3);
    int v = 1;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 3; ++c) a.at(r, c) = v++;
    const RatMatrix at = a.transposed();
    CHECK(at.rows() == 3);
    CHECK(at.cols() == 2);
    CHECK(at.at(2, 1) == a.at(1, 2));

    const RatMatrix p = a * at;  // 2x2 Gram matrix
    CHECK(p.at(0, 0) == 1 + 4 + 9);
    CHECK(p.at(0, 1) == 1 * 4 + 2 * 5 + 3 * 6);
    CHECK(p.at(1, 0) == p.at(0, 1));
    CHECK(p.at(1, 1) == 16 + 25 + 36);
}
