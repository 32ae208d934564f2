#pragma once

#include "hadsimplex/hadamard.hpp"
#include "hadsimplex/rational.hpp"
#include "hadsimplex/simplex.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hadsimplex {

struct ScanOptions {
    int workers = 1;
    /// Census and maximizer_count are always complete; the stored maximizer
    /// list is truncated to this many entries (smallest masks first) when the
    /// full set would be larger.
    std::uint64_t maximizer_cap = std::uint64_t{1} << 16;
};

/// Result of maximizing sum_j |lambda_j(x)| over the 2^n cube vertices.
struct NormReport {
    int dimension = 0;
    /// max over vertices of sum_j |lambda_j(x)|; always >= 1 because the
    /// lambda sum to 1 everywhere.
    Rational norm = 1;
    std::uint64_t maximizer_count = 0;
    bool maximizers_complete = true;
    /// Vertex masks attaining the max, ascending (see Cube::vertex for the
    /// mask convention); truncated when maximizers_complete is false.
    std::vector<std::uint64_t> maximizers;
    /// mu -> number of maximizers with exactly mu strictly negative
    /// barycentric coordinates (zeros count as neither sign).
    std::map<int, std::uint64_t> census;
    /// Most negative lambda_j(x) seen over all vertices and all j (the
    /// absorption module turns this into the absorption index).
    Rational min_lambda = 1;
    /// Wall time of the scan; never serialized unless explicitly requested.
    double elapsed_ms = 0.0;
};

/// Exhaustive exact scan using the evaluator's rational coefficients.
/// Enumerates vertex masks in natural order (split into contiguous blocks
/// across workers) and recomputes each vertex from scratch in integer
/// arithmetic over one common denominator.  Throws CapacityError past n = 30
/// and DimensionMismatchError when evaluator and cube dimensions differ.
NormReport projector_norm(const LagrangeEvaluator& ev, const Cube& cube,
                          const ScanOptions& opts = {});

/// Same report, computed independently for Hadamard-derived simplices on the
/// cube [-1,1]^n: all lambda numerators are the integer dot products
/// (row_j, (x,1)) over denominator n+1, maintained incrementally along a
/// Gray-code walk (one coordinate flip per step, O(n) update).  Requires a
/// verified matrix with an all-ones last column.
NormReport hadamard_projector_norm(const HadamardMatrix& h, const ScanOptions& opts = {});

/// Exact check of norm^2 <= n+1, the square-comparison form of the
/// sqrt(n+1) bound for Hadamard-derived simplices.
bool verify_sqrt_bound(const NormReport& report);

/// "0101..." rendering of a vertex mask: character k is coordinate k+1,
/// '1' meaning center + half_side.
std::string vertex_bits(std::uint64_t mask, int n);

} // namespace hadsimplex
