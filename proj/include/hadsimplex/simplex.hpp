#pragma once

#include "hadsimplex/hadamard.hpp"
#include "hadsimplex/matrix.hpp"
#include "hadsimplex/rational.hpp"

#include <cstdint>
#include <vector>

namespace hadsimplex {

/// Axis-aligned cube given by its center and half-side.  Vertices are indexed
/// by bit masks: bit i set means coordinate i sits at center + half_side.
struct Cube {
    int dimension = 0;
    std::vector<Rational> center;
    Rational half_side = 1;

    /// [-1, 1]^n
    static Cube symmetric(int n);
    /// [0, 1]^n
    static Cube unit(int n);

    std::vector<Rational> vertex(std::uint64_t mask) const;
    std::uint64_t vertex_count() const { return std::uint64_t{1} << dimension; }
};

/// n+1 points in n-space, in a fixed vertex order.
struct Simplex {
    int dimension = 0;
    std::vector<std::vector<Rational>> vertices;

    /// (n+1) x (n+1) matrix whose row j is (vertex_j, 1).  Nondegeneracy of the
    /// simplex is exactly nonsingularity of this matrix.
    RatMatrix vertex_matrix() const;
};

/// Rows of a normalized Hadamard matrix of order n+1, with the (all-ones) last
/// coordinate dropped, give n+1 points of the cube [-1,1]^n; these form a
/// regular simplex inscribed in that cube.  The input must already have an
/// all-ones last column (NormalizationRequiredError otherwise) so that the
/// vertex order of the simplex matches the row order of the matrix.
Simplex simplex_from_hadamard(const HadamardMatrix& h);

Simplex scaled(const Simplex& s, const Rational& factor);

/// Affine maps between the two standard cubes: x -> (x + 1) / 2 and back.
Simplex to_unit_cube(const Simplex& s);
Simplex to_symmetric_cube(const Simplex& s);

/// Exact evaluator for the barycentric coordinates of a nondegenerate simplex:
/// lambda_j(x) = sum_i coeff(i, j) * x_i + coeff(n, j).  Columns of the
/// coefficient matrix are the lambda_j; the last row holds the constant terms.
class LagrangeEvaluator {
public:
    static LagrangeEvaluator build(const Simplex& s);

    int dimension() const { return dimension_; }
    const RatMatrix& coefficients() const { return coefficients_; }
    const Rational& vertex_determinant() const { return vertex_determinant_; }

    std::vector<Rational> barycentric(const std::vector<Rational>& x) const;

private:
    int dimension_ = 0;
    RatMatrix coefficients_;
    Rational vertex_determinant_;
};

LagrangeEvaluator build_evaluator(const Simplex& s);

/// All pairwise squared edge lengths equal (exact comparison).
bool is_regular(const Simplex& s);

/// Squared Euclidean distance between two points.
Rational squared_distance(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Standard scalar product.
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

} // namespace hadsimplex
