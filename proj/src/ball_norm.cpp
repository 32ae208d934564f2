#include "hadsimplex/ball_norm.hpp"

#include "hadsimplex/errors.hpp"

#include <cmath>
#include <string>

namespace hadsimplex {

double psi(double t, int n) {
    if (n < 1) throw InvalidParameterError("psi needs dimension >= 1");
    if (!(t >= 0.0) || !(t <= n + 1))
        throw InvalidParameterError("psi argument " + std::to_string(t) + " outside [0, " +
                                    std::to_string(n + 1) + "]");
    const double m = n + 1;
    return (2.0 * std::sqrt(static_cast<double>(n)) / m) * std::sqrt(t * (m - t)) +
           std::abs(1.0 - 2.0 * t / m);
}

int split_point(int n) {
    if (n < 1) throw InvalidParameterError("split point needs dimension >= 1");
    const BigInt t = n + 1;
    const BigInt c = isqrt_ceil(t);
    return static_cast<int>((t - c) / 2);
}

BallNormResult ball_projector_norm(int n) {
    BallNormResult r;
    r.n = n;
    r.a = split_point(n);
    r.psi_a = psi(static_cast<double>(r.a), n);
    r.psi_a1 = psi(static_cast<double>(r.a) + 1.0, n);
    r.norm = r.psi_a > r.psi_a1 ? r.psi_a : r.psi_a1;
    r.exact_sqrt = is_perfect_square(BigInt(n) + 1);
    return r;
}

bool cube_ball_consistency(const NormReport& report) {
    if (report.dimension < 1) return false;
    const double ball = ball_projector_norm(report.dimension).norm;
    return rational_double(report.norm) <= ball + 1e-9;
}

BallSweepResult ball_norm_sweep(int max_n) {
    if (max_n < 1) throw InvalidParameterError("sweep needs max dimension >= 1");
    BallSweepResult sweep;
    sweep.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
        const BallNormResult r = ball_projector_norm(n);
        const double lo = std::sqrt(static_cast<double>(n));
        const double hi = std::sqrt(static_cast<double>(n) + 1.0);
        const bool in_bounds = lo - 1e-9 <= r.norm && r.norm <= hi + 1e-9;
        const bool equality_ok =
            r.exact_sqrt ? std::abs(r.norm - hi) <= 1e-9 : r.norm < hi;
        if (r.exact_sqrt) ++sweep.perfect_square_count;
        if (!in_bounds && sweep.bounds_hold) {
            sweep.bounds_hold = false;
            if (sweep.first_violation == 0) sweep.first_violation = n;
        }
        if (!equality_ok && sweep.equality_matches_perfect_squares) {
            sweep.equality_matches_perfect_squares = false;
            if (sweep.first_violation == 0) sweep.first_violation = n;
        }
    }
    return sweep;
}

} // namespace hadsimplex
