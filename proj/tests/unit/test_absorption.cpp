#include "doctest.h"

#include "hadsimplex/absorption.hpp"
#include "hadsimplex/cube_norm.hpp"
#include "hadsimplex/errors.hpp"
#include "hadsimplex/hadamard.hpp"
#include "hadsimplex/simplex.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

using namespace hadsimplex;

namespace {

// Test-local barycentric solver: plain Gaussian elimination with partial
// pivoting over rationals, sharing no code with LagrangeEvaluator.  Solves
// S^T lambda = (x, 1).
std::vector<Rational> solve_barycentric(const Simplex& s,
                                        const std::vector<Rational>& x) {
    const int m = s.dimension + 1;
    // Augmented system: columns are vertices (plus the 1-row).
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
    for (int j = 0; j < m; ++j) {
        for (int c = 0; c < s.dimension; ++c) a[c][j] = s.vertices[j][c];
        a[s.dimension][j] = 1;
    }
    for (int c = 0; c < s.dimension; ++c) a[c][m] = x[c];
    a[s.dimension][m] = 1;

    for (int col = 0; col < m; ++col) {
        int piv = col;
        while (piv < m && a[piv][col] == 0) ++piv;
        REQUIRE(piv < m);
        std::swap(a[piv], a[col]);
        for (int r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational f = a[r][col] / a[col][col];
            for (int c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
        }
    }
    std::vector<Rational> lambda(m);
    for (int r = 0; r < m; ++r) lambda[r] = a[r][m] / a[r][r];
    return lambda;
}

std::vector<Rational> centroid(const Simplex& s) {
    std::vector<Rational> c(s.dimension, Rational(0));
    for (const auto& v : s.vertices)
        for (int i = 0; i < s.dimension; ++i) c[i] += v[i];
    for (auto& ci : c) ci /= int(s.vertices.size());
    return c;
}

// Defining-property oracle: sigma-homothet about the centroid contains the
// cube iff every cube vertex, pulled back by the homothety, has nonnegative
// barycentric coordinates.  Convexity reduces the cube to its vertices.
bool homothet_contains_cube(const Simplex& s, const Cube& q,
                            const Rational& sigma) {
    const auto c = centroid(s);
    for (std::uint64_t mask = 0; mask < q.vertex_count(); ++mask) {
        auto x = q.vertex(mask);
        for (int i = 0; i < q.dimension; ++i)
            x[i] = c[i] + (x[i] - c[i]) / sigma;
        for (const Rational& l : solve_barycentric(s, x))
            if (l < 0) return false;
    }
    return true;
}

NormReport scan(const Simplex& s) {
    return projector_norm(build_evaluator(s), Cube::symmetric(s.dimension));
}

Simplex hadamard_simplex(const HadamardMatrix& h) {
    return simplex_from_hadamard(normalize_last_column(h));
}

} // namespace

TEST_CASE("xi formula basics") {
    CHECK(xi_from_min_lambda(3, Rational(-1, 2)) == 3);
    CHECK(xi_from_min_lambda(3, Rational(0)) == 1);
    CHECK(xi_from_min_lambda(3, Rational(1, 4)) == 1);  // clamped at 1
    CHECK(xi_from_min_lambda(1, Rational(0)) == 1);
    CHECK(xi_from_min_lambda(7, Rational(-1, 4)) == 3);
}

TEST_CASE("n=3 absorption report, hand-computed") {
    const auto r = hadamard_projector_norm(normalize_last_column(sylvester(2)));
    const Rational xi = xi_from_min_lambda(3, r.min_lambda);
    CHECK(xi == 3);
    const AbsorptionReport a = check_xi_inequalities(r, xi);
    CHECK(a.lower == Rational(5, 3));
    CHECK(a.upper == 3);
    CHECK(a.tight_right);
    CHECK(a.has_one_vertex);
    REQUIRE(a.mu_lower_bounds.size() == 1);
    CHECK(a.mu_lower_bounds.at(1) == 3);
}

TEST_CASE("a simplex that already contains the cube has xi = 1") {
    // Scaling the n=3 simplex by its own xi (= 3) makes the homothety
    // unnecessary; the collapsed chain must be accepted, not flagged.
    const Simplex s =
        scaled(hadamard_simplex(sylvester(2)), 3);
    const auto r = scan(s);
    CHECK(r.norm == 1);
    CHECK(r.min_lambda >= 0);
    const Rational xi = xi_from_min_lambda(3, r.min_lambda);
    CHECK(xi == 1);
    const AbsorptionReport a = check_xi_inequalities(r, xi);
    CHECK(a.lower == 1);
    CHECK(a.upper == 1);
    // Both ends of the chain collapse onto xi, so the right equality is
    // (trivially) attained.
    CHECK(a.tight_right);
    CHECK_FALSE(a.has_one_vertex);
}

TEST_CASE("absorption_index wrapper equals the two-step computation") {
    const Simplex s = hadamard_simplex(paley(7));
    const auto ev = build_evaluator(s);
    const Cube q = Cube::symmetric(7);
    const auto r = projector_norm(ev, q);
    CHECK(absorption_index(ev, q) ==
          xi_from_min_lambda(7, r.min_lambda));
}

TEST_CASE("xi is minimal: containment holds at xi and fails just below") {
    std::vector<Simplex> cases = {
        hadamard_simplex(sylvester(1)),
        hadamard_simplex(sylvester(2)),
        hadamard_simplex(paley(3)),
    };
    // A lopsided triangle keeps the oracle honest beyond the regular case.
    Simplex tri;
    tri.dimension = 2;
    tri.vertices = {{1, 1}, {-1, 1}, {0, -1}};
    cases.push_back(tri);

    for (const Simplex& s : cases) {
        CAPTURE(s.dimension);
        const Cube q = Cube::symmetric(s.dimension);
        const auto r = projector_norm(build_evaluator(s), q);
        const Rational xi = xi_from_min_lambda(s.dimension, r.min_lambda);
        CHECK(homothet_contains_cube(s, q, xi));
        if (xi > 1) {
            const Rational just_below = xi * Rational(999, 1000);
            CHECK_FALSE(homothet_contains_cube(
                s, q, just_below < 1 ? Rational(1) : just_below));
        }
    }
}

TEST_CASE("lopsided triangle: the full report by hand") {
    Simplex tri;
    tri.dimension = 2;
    tri.vertices = {{1, 1}, {-1, 1}, {0, -1}};
    const auto r = scan(tri);
    CHECK(r.norm == 2);
    CHECK(r.min_lambda == Rational(-1, 2));
    CHECK(r.maximizers == std::vector<std::uint64_t>{0, 1});
    CHECK(r.census == std::map<int, std::uint64_t>{{1, 2}});

    const Rational xi = xi_from_min_lambda(2, r.min_lambda);
    CHECK(xi == Rational(5, 2));
    const AbsorptionReport a = check_xi_inequalities(r, xi);
    CHECK(a.lower == Rational(7, 4));
    CHECK(a.upper == Rational(5, 2));
    CHECK(a.tight_right);
    CHECK(a.has_one_vertex);
}

TEST_CASE("tampered reports are caught") {
    const auto r = hadamard_projector_norm(normalize_last_column(sylvester(2)));

    // xi above the upper bound
    CHECK_THROWS_AS(check_xi_inequalities(r, Rational(10)),
                    InvariantViolationError);
    // xi below the lower bound
    CHECK_THROWS_AS(check_xi_inequalities(r, Rational(1)),
                    InvariantViolationError);
    // right-equality claimed by the census but xi strictly inside
    CHECK_THROWS_AS(check_xi_inequalities(r, Rational(29, 10)),
                    InvariantViolationError);

    // census with mu = 0 alongside norm > 1 is self-contradictory
    NormReport bad = r;
    bad.census[0] = 1;
    CHECK_THROWS_AS(
        check_xi_inequalities(bad, xi_from_min_lambda(3, bad.min_lambda)),
        InvariantViolationError);
}

TEST_CASE("mu census refinement tightens the lower bound") {
    // Order 8: every maximizer has mu negative coordinates; each mu in the
    // census implies xi >= (n+1)/(2 mu) (norm - 1) + 1.
    const auto r = hadamard_projector_norm(normalize_last_column(sylvester(3)));
    const Rational xi = xi_from_min_lambda(7, r.min_lambda);
    const AbsorptionReport a = check_xi_inequalities(r, xi);
    for (const auto& [mu, bound] : a.mu_lower_bounds) {
        CHECK(mu >= 1);
        CHECK(bound == Rational(8, 2 * mu) * (r.norm - 1) + 1);
        CHECK(bound <= xi);
        CHECK(bound >= a.lower);
        CHECK(r.census.count(mu) == 1);
    }
    // Every mu >= 1 in the census contributes a bound.
    for (const auto& [mu, count] : r.census)
        if (mu >= 1) CHECK(a.mu_lower_bounds.count(mu) == 1);
}
