#pragma once

#include "hadsimplex/cube_norm.hpp"

namespace hadsimplex {

/// Norm of the projector induced by a regular simplex inscribed in a ball.
/// The norm depends on the dimension only (scale invariance), and equals the
/// maximum of psi at the two integers bracketing the real maximizer.
struct BallNormResult {
    int n = 0;
    /// floor((n+1)/2 - sqrt(n+1)/2); the candidate integers are a and a+1.
    int a = 0;
    double psi_a = 0.0;
    double psi_a1 = 0.0;
    double norm = 0.0;
    /// n+1 is a perfect square; exactly then norm = sqrt(n+1) (the value is
    /// (n+1)/sqrt(n+1) algebraically), detected in integers, never by
    /// comparing floats.
    bool exact_sqrt = false;
};

/// psi(t) = (2 sqrt(n)/(n+1)) * sqrt(t (n+1-t)) + |1 - 2t/(n+1)|
/// for 0 <= t <= n+1 (InvalidParameterError outside).
double psi(double t, int n);

/// floor((n+1)/2 - sqrt(n+1)/2), computed purely in integers as
/// (n+1 - ceil(sqrt(n+1))) / 2 — the two agree for every n, and the integer
/// form cannot misround when n+1 is a perfect square.
int split_point(int n);

BallNormResult ball_projector_norm(int n);

/// Cube norm of a simplex never exceeds the ball norm of its dimension
/// (the circumscribed ball contains the cube's inscribed configuration).
/// Float comparison with 1e-9 slack on the ball side.
bool cube_ball_consistency(const NormReport& report);

struct BallSweepResult {
    int max_n = 0;
    /// sqrt(n) - 1e-9 <= norm <= sqrt(n+1) + 1e-9 for every n in [1, max_n].
    bool bounds_hold = true;
    /// |norm - sqrt(n+1)| <= 1e-9 at every perfect-square n+1, and
    /// norm < sqrt(n+1) strictly at every other n.  The strict side is the
    /// honest rendering of "equality only at n = m^2 - 1": fixed tolerances
    /// cannot decide equality (near-squares n+1 = r^2 +- 2 give true gaps
    /// below 1e-9 once n is a few thousand), so membership is decided by
    /// integer perfect-square detection.
    bool equality_matches_perfect_squares = true;
    int first_violation = 0;
    int perfect_square_count = 0;
};

BallSweepResult ball_norm_sweep(int max_n);

} // namespace hadsimplex
