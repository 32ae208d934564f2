#include "doctest.h"

#include "hadsimplex/errors.hpp"
#include "hadsimplex/hadamard.hpp"
#include "hadsimplex/simplex.hpp"

#include <random>
#include <vector>

using namespace hadsimplex;

namespace {

Simplex hadamard_simplex(int order_log2_or_q, bool use_paley) {
    const HadamardMatrix h = normalize_last_column(
        use_paley ? paley(order_log2_or_q) : sylvester(order_log2_or_q));
    return simplex_from_hadamard(h);
}

// The standard corner simplex 0, e_1, ..., e_n — deliberately irregular.
Simplex corner_simplex(int n) {
    Simplex s;
    s.dimension = n;
    s.vertices.assign(n + 1, std::vector<Rational>(n, Rational(0)));
    for (int i = 1; i <= n; ++i) s.vertices[i][i - 1] = 1;
    return s;
}

std::vector<Rational> rational_point(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> x(n);
    for (auto& c : x) c = Rational(num(rng), den(rng));
    return x;
}

} // namespace

TEST_CASE("order-4 simplex has the expected vertices") {
    const Simplex s = hadamard_simplex(2, false);
    REQUIRE(s.dimension == 3);
    REQUIRE(s.vertices.size() == 4);
    const std::vector<std::vector<Rational>> expected = {
        {1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {1, -1, -1}};
    CHECK(s.vertices == expected);
}

TEST_CASE("vertex matrix determinant for order 4 is +-16") {
    const Simplex s = hadamard_simplex(2, false);
    const Rational d = bareiss_determinant(s.vertex_matrix());
    CHECK((d == 16 || d == -16));
}

TEST_CASE("barycentric coordinates at a hand-computed point") {
    const auto ev = build_evaluator(hadamard_simplex(2, false));
    const auto lam = ev.barycentric({-1, -1, -1});
    const std::vector<Rational> expected = {Rational(-1, 2), Rational(1, 2),
                                            Rational(1, 2), Rational(1, 2)};
    CHECK(lam == expected);
}

TEST_CASE("coefficient matrix is the scaled transpose for Hadamard simplices") {
    // The vertex matrix of a Hadamard simplex is the normalized matrix
    // itself, whose inverse is its transpose over n+1.
    for (int k : {1, 2, 3}) {
        const HadamardMatrix h = normalize_last_column(sylvester(k));
        const Simplex s = simplex_from_hadamard(h);
        const auto ev = build_evaluator(s);
        const int m = h.order();
        RatMatrix ht(m, m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c) ht.at(r, c) = h.at(c, r);
        RatMatrix scaled_coeffs(m, m);
        for (int r = 0; r < m; ++r)
            for (int c = 0; c < m; ++c)
                scaled_coeffs.at(r, c) = ev.coefficients().at(r, c) * m;
        CHECK(scaled_coeffs == ht);
    }
}

TEST_CASE("lambda_i(vertex_j) = delta_ij") {
    for (const Simplex& s :
         {hadamard_simplex(2, false), hadamard_simplex(7, true),
          corner_simplex(4)}) {
        const auto ev = build_evaluator(s);
        for (std::size_t j = 0; j < s.vertices.size(); ++j) {
            const auto lam = ev.barycentric(s.vertices[j]);
            for (std::size_t i = 0; i < lam.size(); ++i)
                CHECK(lam[i] == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("partition of unity and point reproduction on random points") {
    std::mt19937 rng(90125);
    for (const Simplex& s :
         {hadamard_simplex(1, false), hadamard_simplex(3, false),
          corner_simplex(3)}) {
        const auto ev = build_evaluator(s);
        const int n = s.dimension;
        for (int trial = 0; trial < 25; ++trial) {
            const auto x = rational_point(rng, n);
            const auto lam = ev.barycentric(x);
            Rational sum = 0;
            std::vector<Rational> rebuilt(n, Rational(0));
            for (int j = 0; j <= n; ++j) {
                sum += lam[j];
                for (int c = 0; c < n; ++c)
                    rebuilt[c] += lam[j] * s.vertices[j][c];
            }
            CHECK(sum == 1);
            CHECK(rebuilt == x);
        }
    }
}

TEST_CASE("Hadamard simplices are regular with squared edge 2(n+1)") {
    for (const Simplex& s :
         {hadamard_simplex(2, false), hadamard_simplex(7, true)}) {
        CHECK(is_regular(s));
        const Rational expected = 2 * (s.dimension + 1);
        CHECK(squared_distance(s.vertices[0], s.vertices[1]) == expected);
    }
    CHECK_FALSE(is_regular(corner_simplex(2)));
}

TEST_CASE("vertices pairwise dot to -1 for symmetric-cube Hadamard simplices") {
    const Simplex s = hadamard_simplex(3, false);
    for (std::size_t i = 0; i < s.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
            CHECK(dot(s.vertices[i], s.vertices[j]) == -1);
}

TEST_CASE("simplex_from_hadamard validates its input") {
    CHECK_THROWS_AS(simplex_from_hadamard(sylvester(2)),
                    NormalizationRequiredError);  // last column is (+,-,-,+)
    const HadamardMatrix not_h(2, {1, 1, 1, 1});
    CHECK_THROWS_AS(simplex_from_hadamard(not_h), InvalidParameterError);
}

TEST_CASE("degenerate simplices are rejected by the evaluator") {
    Simplex s = corner_simplex(2);
    s.vertices[2] = s.vertices[1];
    CHECK_THROWS_AS(build_evaluator(s), DegenerateSimplexError);
}

TEST_CASE("order-2 evaluator coefficients, frozen") {
    const auto ev = build_evaluator(hadamard_simplex(1, false));
    // lambda_0(x) = x/2 + 1/2, lambda_1(x) = -x/2 + 1/2
    CHECK(ev.coefficients().at(0, 0) == Rational(1, 2));
    CHECK(ev.coefficients().at(0, 1) == Rational(-1, 2));
    CHECK(ev.coefficients().at(1, 0) == Rational(1, 2));
    CHECK(ev.coefficients().at(1, 1) == Rational(1, 2));
    CHECK(ev.vertex_determinant() == 2);
}

TEST_CASE("cube maps invert each other and scaling scales edges") {
    const Simplex s = hadamard_simplex(2, false);
    CHECK(to_symmetric_cube(to_unit_cube(s)).vertices == s.vertices);

    const Simplex u = to_unit_cube(s);
    CHECK(u.vertices[0] == std::vector<Rational>{1, 1, 1});
    CHECK(u.vertices[1] == std::vector<Rational>{0, 1, 0});

    const Simplex big = scaled(s, 3);
    CHECK(squared_distance(big.vertices[0], big.vertices[1]) ==
          9 * squared_distance(s.vertices[0], s.vertices[1]));
}

TEST_CASE("cube vertices follow the mask convention") {
    const Cube q = Cube::symmetric(3);
    CHECK(q.vertex(0b000) == std::vector<Rational>{-1, -1, -1});
    CHECK(q.vertex(0b101) == std::vector<Rational>{1, -1, 1});
    CHECK(q.vertex_count() == 8);

    const Cube u = Cube::unit(2);
    CHECK(u.vertex(0b00) == std::vector<Rational>{0, 0});
    CHECK(u.vertex(0b11) == std::vector<Rational>{1, 1});

    CHECK_THROWS_AS(q.vertex(8), InvalidParameterError);
}
