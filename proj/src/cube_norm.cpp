#include "hadsimplex/cube_norm.hpp"

#include "hadsimplex/errors.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <future>
#include <string>
#include <utility>

namespace hadsimplex {

namespace {

constexpr int kMaxScanDimension = 30;

/// Per-block scan state and result.  `best` and `min_value` are numerators
/// over one denominator shared by every block of a scan, so blocks merge by
/// plain integer comparison.
struct Partial {
    BigInt best = -1;
    std::uint64_t count = 0;
    std::vector<std::uint64_t> maximizers;
    std::map<int, std::uint64_t> census;
    BigInt min_value;
};

/// Keeps `list` a superset of the cap smallest masks seen so far while never
/// letting it grow past 2*cap.  A mask dropped here can never belong to the
/// final cap-smallest set: at drop time cap smaller masks were already kept,
/// and they stay kept.
void push_capped(std::vector<std::uint64_t>& list, std::uint64_t cap, std::uint64_t mask) {
    list.push_back(mask);
    if (list.size() > 2 * cap) {
        std::nth_element(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(cap), list.end());
        list.resize(static_cast<std::size_t>(cap));
    }
}

void merge_into(Partial& into, Partial&& from) {
    if (from.min_value < into.min_value) into.min_value = from.min_value;
    if (from.best > into.best) {
        into.best = std::move(from.best);
        into.count = from.count;
        into.maximizers = std::move(from.maximizers);
        into.census = std::move(from.census);
    } else if (from.best == into.best) {
        into.count += from.count;
        into.maximizers.insert(into.maximizers.end(), from.maximizers.begin(),
                               from.maximizers.end());
        for (const auto& [mu, c] : from.census) into.census[mu] += c;
    }
}

NormReport assemble(int n, Partial&& total, const BigInt& denom, const ScanOptions& opts) {
    NormReport report;
    report.dimension = n;
    report.norm = Rational(total.best, denom);
    report.min_lambda = Rational(total.min_value, denom);
    report.maximizer_count = total.count;
    std::sort(total.maximizers.begin(), total.maximizers.end());
    if (total.count > opts.maximizer_cap) {
        total.maximizers.resize(static_cast<std::size_t>(
            std::min<std::uint64_t>(opts.maximizer_cap, total.maximizers.size())));
        report.maximizers_complete = false;
    }
    report.maximizers = std::move(total.maximizers);
    report.census = std::move(total.census);
    return report;
}

/// Integer form of the barycentric coordinates on a cube-vertex grid:
/// lambda_j at the vertex of `mask` equals
///   (base[j] + sum over set bits i of delta[i*m + j]) / denom.
struct Lift {
    int n = 0;
    int m = 0;
    BigInt denom = 1;
    std::vector<BigInt> base;
    std::vector<BigInt> delta;
};

Lift build_lift(const LagrangeEvaluator& ev, const Cube& cube) {
    const int n = ev.dimension();
    const int m = n + 1;
    const RatMatrix& coeff = ev.coefficients();
    std::vector<Rational> base_r(static_cast<std::size_t>(m));
    std::vector<Rational> delta_r(static_cast<std::size_t>(n) * m);
    const Rational step = 2 * cube.half_side;
    for (int j = 0; j < m; ++j) {
        Rational acc = coeff.at(n, j);
        for (int i = 0; i < n; ++i) acc += coeff.at(i, j) * (cube.center[i] - cube.half_side);
        base_r[j] = acc;
        for (int i = 0; i < n; ++i) delta_r[static_cast<std::size_t>(i) * m + j] = coeff.at(i, j) * step;
    }
    Lift lift;
    lift.n = n;
    lift.m = m;
    for (const auto& r : base_r) lift.denom = lcm(lift.denom, denominator(r));
    for (const auto& r : delta_r) lift.denom = lcm(lift.denom, denominator(r));
    lift.base.resize(base_r.size());
    lift.delta.resize(delta_r.size());
    for (std::size_t k = 0; k < base_r.size(); ++k)
        lift.base[k] = numerator(base_r[k]) * (lift.denom / denominator(base_r[k]));
    for (std::size_t k = 0; k < delta_r.size(); ++k)
        lift.delta[k] = numerator(delta_r[k]) * (lift.denom / denominator(delta_r[k]));
    return lift;
}

/// Natural-order walk over [lo, hi) recomputing every vertex from scratch.
/// Deliberately shares no stepping logic with the Gray-code path below; the
/// two are cross-checked against each other in the tests.
Partial scan_generic_block(const Lift& lift, std::uint64_t lo, std::uint64_t hi,
                           std::uint64_t cap) {
    const int m = lift.m;
    Partial part;
    std::vector<BigInt> vals(static_cast<std::size_t>(m));
    bool first = true;
    for (std::uint64_t mask = lo; mask < hi; ++mask) {
        for (int j = 0; j < m; ++j) vals[j] = lift.base[j];
        for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
            const int i = std::countr_zero(bits);
            const BigInt* row = &lift.delta[static_cast<std::size_t>(i) * m];
            for (int j = 0; j < m; ++j) vals[j] += row[j];
        }
        BigInt sum = 0;
        BigInt local_min = vals[0];
        for (int j = 0; j < m; ++j) {
            if (vals[j] < 0)
                sum -= vals[j];
            else
                sum += vals[j];
            if (vals[j] < local_min) local_min = vals[j];
        }
        if (first || local_min < part.min_value) part.min_value = local_min;
        first = false;
        if (sum > part.best) {
            part.best = sum;
            part.count = 0;
            part.maximizers.clear();
            part.census.clear();
        }
        if (sum == part.best) {
            ++part.count;
            int mu = 0;
            for (int j = 0; j < m; ++j)
                if (vals[j] < 0) ++mu;
            ++part.census[mu];
            push_capped(part.maximizers, cap, mask);
        }
    }
    return part;
}

/// Gray-code walk over vertex indices [lo, hi): index v visits the vertex of
/// mask v ^ (v >> 1), and stepping v-1 -> v flips exactly bit countr_zero(v),
/// so the n+1 dot products (row_j, (x, 1)) update in O(n+1).
Partial scan_hadamard_block(const HadamardMatrix& h, std::uint64_t lo, std::uint64_t hi,
                            std::uint64_t cap) {
    const int m = h.order();
    const int n = m - 1;
    std::vector<std::int64_t> dots(static_cast<std::size_t>(m));
    std::uint64_t mask = lo ^ (lo >> 1);
    for (int j = 0; j < m; ++j) {
        std::int64_t d = h.at(j, n); // the (x, 1) tail coordinate
        for (int i = 0; i < n; ++i) d += ((mask >> i) & 1 ? 1 : -1) * h.at(j, i);
        dots[j] = d;
    }
    std::int64_t best = -1;
    std::int64_t min_dot = dots.empty() ? 0 : dots[0];
    Partial part;
    for (std::uint64_t v = lo; v < hi; ++v) {
        if (v != lo) {
            const int b = std::countr_zero(v);
            mask ^= std::uint64_t{1} << b;
            const std::int64_t twice = ((mask >> b) & 1) ? 2 : -2;
            for (int j = 0; j < m; ++j) dots[j] += twice * h.at(j, b);
        }
        std::int64_t sum = 0;
        for (int j = 0; j < m; ++j) {
            const std::int64_t d = dots[j];
            sum += d < 0 ? -d : d;
            if (d < min_dot) min_dot = d;
        }
        if (sum > best) {
            best = sum;
            part.count = 0;
            part.maximizers.clear();
            part.census.clear();
        }
        if (sum == best) {
            ++part.count;
            int mu = 0;
            for (int j = 0; j < m; ++j)
                if (dots[j] < 0) ++mu;
            ++part.census[mu];
            push_capped(part.maximizers, cap, mask);
        }
    }
    part.best = best;
    part.min_value = min_dot;
    return part;
}

struct Block {
    std::uint64_t lo;
    std::uint64_t hi;
};

std::vector<Block> split_range(std::uint64_t total, int workers) {
    if (workers < 1) workers = 1;
    if (workers > 256) workers = 256;
    if (static_cast<std::uint64_t>(workers) > total) workers = static_cast<int>(total);
    const std::uint64_t q = total / workers;
    const std::uint64_t r = total % workers;
    std::vector<Block> blocks;
    blocks.reserve(static_cast<std::size_t>(workers));
    std::uint64_t lo = 0;
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t len = q + (static_cast<std::uint64_t>(w) < r ? 1 : 0);
        blocks.push_back({lo, lo + len});
        lo += len;
    }
    return blocks;
}

template <typename BlockFn>
Partial run_blocks(std::uint64_t total, const ScanOptions& opts, BlockFn&& fn) {
    const auto blocks = split_range(total, opts.workers);
    if (blocks.size() == 1) return fn(blocks[0].lo, blocks[0].hi);
    std::vector<std::future<Partial>> futures;
    futures.reserve(blocks.size());
    for (const Block& b : blocks)
        futures.push_back(std::async(std::launch::async, fn, b.lo, b.hi));
    Partial total_part = futures[0].get();
    for (std::size_t i = 1; i < futures.size(); ++i) merge_into(total_part, futures[i].get());
    return total_part;
}

} // namespace

NormReport projector_norm(const LagrangeEvaluator& ev, const Cube& cube,
                          const ScanOptions& opts) {
    const int n = ev.dimension();
    if (n != cube.dimension)
        throw DimensionMismatchError("evaluator dimension " + std::to_string(n) +
                                     " does not match cube dimension " +
                                     std::to_string(cube.dimension));
    if (n > kMaxScanDimension)
        throw CapacityError("dimension " + std::to_string(n) + " exceeds the 2^" +
                            std::to_string(kMaxScanDimension) + " vertex enumeration budget");
    if (cube.half_side <= 0) throw InvalidParameterError("cube half side must be positive");
    const auto start = std::chrono::steady_clock::now();
    const Lift lift = build_lift(ev, cube);
    const std::uint64_t total = std::uint64_t{1} << n;
    Partial part = run_blocks(total, opts, [&](std::uint64_t lo, std::uint64_t hi) {
        return scan_generic_block(lift, lo, hi, opts.maximizer_cap);
    });
    NormReport report = assemble(n, std::move(part), lift.denom, opts);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

NormReport hadamard_projector_norm(const HadamardMatrix& h, const ScanOptions& opts) {
    if (!is_hadamard(h))
        throw InvalidParameterError("input rows are not orthogonal at order " +
                                    std::to_string(h.order()));
    if (!last_column_all_ones(h))
        throw NormalizationRequiredError("last column must be all ones; normalize first");
    const int n = h.order() - 1;
    if (n > kMaxScanDimension)
        throw CapacityError("dimension " + std::to_string(n) + " exceeds the 2^" +
                            std::to_string(kMaxScanDimension) + " vertex enumeration budget");
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t total = std::uint64_t{1} << n;
    Partial part = run_blocks(total, opts, [&](std::uint64_t lo, std::uint64_t hi) {
        return scan_hadamard_block(h, lo, hi, opts.maximizer_cap);
    });
    NormReport report = assemble(n, std::move(part), BigInt(h.order()), opts);
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return report;
}

bool verify_sqrt_bound(const NormReport& report) {
    const BigInt p = numerator(report.norm);
    const BigInt q = denominator(report.norm);
    return p * p <= (report.dimension + 1) * q * q;
}

std::string vertex_bits(std::uint64_t mask, int n) {
    std::string bits(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((mask >> i) & 1) bits[static_cast<std::size_t>(i)] = '1';
    return bits;
}

} // namespace hadsimplex
