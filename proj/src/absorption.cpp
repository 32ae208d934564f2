#include "hadsimplex/absorption.hpp"

#include "hadsimplex/errors.hpp"

#include <string>

namespace hadsimplex {

Rational xi_from_min_lambda(int dimension, const Rational& min_lambda) {
    if (dimension < 1) throw InvalidParameterError("absorption needs dimension >= 1");
    Rational xi = 1 + (dimension + 1) * (-min_lambda);
    return xi < 1 ? Rational(1) : xi;
}

Rational absorption_index(const LagrangeEvaluator& ev, const Cube& cube,
                          const ScanOptions& opts) {
    const NormReport report = projector_norm(ev, cube, opts);
    return xi_from_min_lambda(report.dimension, report.min_lambda);
}

AbsorptionReport check_xi_inequalities(const NormReport& report, const Rational& xi) {
    const int n = report.dimension;
    if (n < 1) throw InvalidParameterError("absorption needs dimension >= 1");
    if (xi < 1) throw InvalidParameterError("absorption index below 1: " + rational_str(xi));

    AbsorptionReport out;
    out.dimension = n;
    out.norm = report.norm;
    out.xi = xi;
    out.lower = 1 + Rational(n + 1, 2 * n) * (report.norm - 1);
    out.upper = 1 + Rational(n + 1, 2) * (report.norm - 1);
    out.tight_right = xi == out.upper;
    out.has_one_vertex = report.census.count(1) != 0;

    if (!(out.lower <= xi))
        throw InvariantViolationError("left side of the absorption chain failed: " +
                                      rational_str(out.lower) + " > " + rational_str(xi));
    if (!(xi <= out.upper))
        throw InvariantViolationError("right side of the absorption chain failed: " +
                                      rational_str(xi) + " > " + rational_str(out.upper));

    if (report.norm == 1) {
        // Norm 1 forces the whole chain to collapse: every vertex sum equals
        // 1, no barycentric coordinate is negative anywhere, xi must be 1.
        if (xi != 1 || out.lower != 1 || out.upper != 1)
            throw InvariantViolationError("norm 1 must collapse the absorption chain to 1");
        return out;
    }

    for (const auto& [mu, count] : report.census) {
        if (count == 0) continue;
        if (mu < 1)
            throw InvariantViolationError("census contains mu = " + std::to_string(mu) +
                                          " although the norm exceeds 1");
        const Rational bound = 1 + Rational(n + 1, 2 * mu) * (report.norm - 1);
        out.mu_lower_bounds.emplace(mu, bound);
        if (!(bound <= xi))
            throw InvariantViolationError(
                "mu-vertex refinement failed for mu = " + std::to_string(mu) + ": " +
                rational_str(bound) + " > " + rational_str(xi));
    }

    if (out.tight_right != out.has_one_vertex)
        throw InvariantViolationError(
            out.tight_right
                ? "right equality attained without a 1-vertex in the census"
                : "census contains a 1-vertex but the right equality is not attained");
    return out;
}

} // namespace hadsimplex
