#pragma once

#include "hadsimplex/hadamard.hpp"
#include "hadsimplex/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hadsimplex {

/// How an h value in a BoundsRow was certified.
enum class HProvenance {
    Bruteforce,       ///< exhaustive 0/1 determinant search
    HadamardEquality, ///< certified by an order-(n+1) Hadamard matrix
    BoundOnly,        ///< no exact value; only the [h_lower, h_upper] interval
};

/// One dimension's worth of max-determinant data and norm bounds.
struct BoundsRow {
    int n = 0;
    /// Exact maximal 0/1 determinant of order n, when certified.
    std::optional<BigInt> h;
    HProvenance provenance = HProvenance::BoundOnly;
    /// Certified bracket (always filled; degenerate [h, h] when h is exact).
    BigInt h_lower = 1;
    BigInt h_upper = 1;
    /// h / n!, the maximal simplex volume in the unit cube (exact h only).
    std::optional<Rational> nu;
    /// (n+1)^{(n+1)/2} / 2^n
    double hadamard_bound = 0.0;
    /// n^{n/2} sqrt(2n+1) / 2^n, even n only.
    std::optional<double> barba_bound;
    /// 2 h_{n+1}/h_n + 1 — requires both h values exact.
    std::optional<Rational> maxdet_ratio_bound;
    /// sqrt(2n+3) + 1, the closed-form relaxation of the ratio bound.
    double coarse_norm_bound = 0.0;
    /// sqrt(n+1)
    double sqrt_norm_bound = 0.0;
    /// sqrt(n-1)/e, a lower bound on the minimal projector norm.
    double min_norm_lower = 0.0;
};

/// Exhaustive maximal determinant of n x n 0/1 matrices, n <= 6.  DFS over
/// strictly decreasing nonzero row masks with exact incremental elimination
/// (dependent prefixes pruned) and a Hadamard-style popcount bound; optionally
/// parallel over the first row.
BigInt maxdet01_bruteforce(int n, int workers = 1);

/// |det| of a square 0/1 matrix given as row bit masks — used to turn a
/// user-supplied witness into a certified lower bound for h_n.
BigInt det01_abs(const std::vector<std::uint32_t>& rows, int n);

/// Parses rows of '0'/'1' characters (whitespace ignored, '#' comments,
/// errors carry line numbers) into row masks; must be square.
std::vector<std::uint32_t> parse_01_matrix(const std::string& text, int& n_out);

/// h_n = (n+1)^{(n+1)/2} / 2^n, valid exactly when an order-(n+1) Hadamard
/// matrix exists; the matrix is the certificate and is re-verified here.
/// Throws InvariantViolationError if the division is not exact (wrong
/// certificate) and InvalidParameterError if the certificate does not fit.
BigInt h_from_hadamard_equality(int n, const HadamardMatrix& certificate);

/// 2 h_{n+1} / h_n + 1, exact.
Rational maxdet_ratio_bound(const BigInt& h_n, const BigInt& h_n1);

/// (h_{n+1}/h_n, nu_{n+1}/nu_n) exact; asserts h_{n+1}/h_n is above the
/// closed-form floor sqrt(n-1)/(2e) - 1/2.
std::pair<Rational, Rational> det_volume_ratios(const BigInt& h_n, const BigInt& h_n1, int n);

double h_upper_hadamard(int n);
/// Exact floor of the same bound: isqrt((n+1)^{n+1}) / 2^n.
BigInt h_upper_hadamard_floor(int n);
double h_upper_barba(int n);
BigInt h_upper_barba_floor(int n);
double coarse_norm_bound(int n);
double sqrt_norm_bound(int n);
double min_norm_lower(int n);

/// Sign of 4^n h^2 - (n+1)^{n+1}: equality (0) exactly when h attains the
/// Hadamard determinant bound, i.e. when n+1 is a Hadamard order.
int compare_h_with_hadamard_upper(const BigInt& h, int n);

BigInt factorial(int n);

/// Assembles the full row for a dimension: h via brute force (n <= 6) or a
/// constructible Hadamard certificate, otherwise an exact-floor interval;
/// cross-checks the two certification routes against each other when both
/// apply, and every h against the exact bound comparisons.
BoundsRow make_bounds_row(int n, int workers = 1);

} // namespace hadsimplex
