#pragma once

#include "hadsimplex/cube_norm.hpp"
#include "hadsimplex/rational.hpp"
#include "hadsimplex/simplex.hpp"

#include <map>

namespace hadsimplex {

/// Absorption index of a cube by a simplex, plus the inequality chain
/// relating it to the projector norm and the mu-census refinements.
struct AbsorptionReport {
    int dimension = 0;
    Rational norm = 1;
    Rational xi = 1;
    /// (n+1)/(2n) * (norm - 1) + 1
    Rational lower = 1;
    /// (n+1)/2 * (norm - 1) + 1
    Rational upper = 1;
    /// mu -> (n+1)/(2 mu) * (norm - 1) + 1, for each mu >= 1 in the census.
    std::map<int, Rational> mu_lower_bounds;
    bool tight_right = false;
    bool has_one_vertex = false;
};

/// xi from the most negative barycentric coordinate over the cube vertices:
/// the sigma-homothet of the simplex about its centroid contains a point x
/// iff every lambda_j(x) >= (1 - sigma)/(n+1), so
/// xi = max(1, 1 + (n+1) * (-min lambda)).  Convexity reduces the min over
/// the whole cube to its vertices, which the NormReport scan already visits.
Rational xi_from_min_lambda(int dimension, const Rational& min_lambda);

/// Convenience wrapper: runs the exact vertex scan and applies the formula.
Rational absorption_index(const LagrangeEvaluator& ev, const Cube& cube,
                          const ScanOptions& opts = {});

/// Populates the report and asserts the chain
///   (n+1)/(2n)(norm-1)+1 <= xi <= (n+1)/2(norm-1)+1
/// together with the census refinements: every mu >= 1 present contributes a
/// lower bound (n+1)/(2 mu)(norm-1)+1 <= xi, and (when norm > 1) the right
/// equality holds iff a 1-vertex exists.  For norm = 1 the chain collapses
/// and the function instead asserts xi = lower = upper = 1 (no coordinate is
/// ever negative, so no mu >= 1 vertex can exist).  Violations throw
/// InvariantViolationError naming the failed relation.
AbsorptionReport check_xi_inequalities(const NormReport& report, const Rational& xi);

} // namespace hadsimplex
