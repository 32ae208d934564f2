#include "hadsimplex/bounds.hpp"

#include "hadsimplex/errors.hpp"
#include "hadsimplex/matrix.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <future>
#include <sstream>
#include <string>

namespace hadsimplex {

namespace {

constexpr int kMaxBruteforce = 6;

/// Exact incremental elimination state for the maxdet DFS: rows already
/// chosen, reduced to echelon form with fraction-free updates so every entry
/// stays an integer (all values are minors of a 0/1 matrix — tiny).
struct Echelon {
    int n;
    int depth = 0;
    std::array<std::array<std::int64_t, 6>, 6> rows{};
    std::array<int, 6> pivot_col{};
    std::array<std::int64_t, 7> pivots{}; // pivots[0] = 1, then one per depth

    explicit Echelon(int n_) : n(n_) { pivots[0] = 1; }

    /// Reduces `row` against the eliminated rows; returns false when the new
    /// row is a linear combination of the chosen ones (no extension of this
    /// prefix has a nonzero determinant).
    bool push(std::array<std::int64_t, 6> row) {
        for (int i = 0; i < depth; ++i) {
            const std::int64_t factor = row[pivot_col[i]];
            const std::int64_t pivot = pivots[i + 1];
            for (int c = 0; c < n; ++c)
                row[c] = (row[c] * pivot - factor * rows[i][c]) / pivots[i];
        }
        int col = -1;
        for (int c = 0; c < n; ++c)
            if (row[c] != 0) {
                col = c;
                break;
            }
        if (col < 0) return false;
        rows[depth] = row;
        pivot_col[depth] = col;
        pivots[depth + 1] = row[col];
        ++depth;
        return true;
    }

    void pop() { --depth; }

    /// After n pushes the last pivot is the determinant up to sign.
    std::int64_t abs_det() const {
        const std::int64_t d = pivots[depth];
        return d < 0 ? -d : d;
    }
};

std::array<std::int64_t, 6> mask_row(std::uint32_t mask, int n) {
    std::array<std::int64_t, 6> row{};
    for (int c = 0; c < n; ++c) row[c] = (mask >> c) & 1;
    return row;
}

std::int64_t int_pow(std::int64_t base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

/// DFS over strictly decreasing row masks below `prev`.  `pc_product` is the
/// product of popcounts of the chosen rows; by the Hadamard bound the squared
/// determinant of any completion is at most pc_product * n^(remaining), which
/// prunes without ever cutting a branch that could beat `best`.
void maxdet_dfs(Echelon& state, std::uint32_t prev, std::int64_t pc_product,
                std::atomic<std::int64_t>& best) {
    const int n = state.n;
    const int remaining = n - state.depth;
    if (remaining == 0) {
        const std::int64_t d = state.abs_det();
        std::int64_t seen = best.load(std::memory_order_relaxed);
        while (d > seen && !best.compare_exchange_weak(seen, d, std::memory_order_relaxed)) {
        }
        return;
    }
    for (std::uint32_t mask = prev; mask-- > 1;) {
        // Need `remaining - 1` further distinct masks strictly below this one.
        if (mask < static_cast<std::uint32_t>(remaining)) break;
        const std::int64_t pc = std::popcount(mask);
        const std::int64_t bound_sq = pc_product * pc * int_pow(n, remaining - 1);
        const std::int64_t cur = best.load(std::memory_order_relaxed);
        if (bound_sq <= cur * cur) continue;
        if (!state.push(mask_row(mask, n))) continue;
        maxdet_dfs(state, mask, pc_product * pc, best);
        state.pop();
    }
}

} // namespace

BigInt maxdet01_bruteforce(int n, int workers) {
    if (n < 1) throw InvalidParameterError("determinant order must be >= 1");
    if (n > kMaxBruteforce)
        throw CapacityError("exhaustive search past order " + std::to_string(kMaxBruteforce) +
                            " is not supported");
    const std::uint32_t top = (std::uint32_t{1} << n);
    std::atomic<std::int64_t> best{1}; // identity matrix witness
    std::vector<std::uint32_t> first_rows;
    for (std::uint32_t r = top; r-- > 1;) first_rows.push_back(r);

    auto run_first_row = [&](std::uint32_t r1) {
        Echelon state(n);
        state.push(mask_row(r1, n)); // a single nonzero row is never dependent
        maxdet_dfs(state, r1, std::popcount(r1), best);
    };

    if (workers <= 1) {
        for (std::uint32_t r1 : first_rows) run_first_row(r1);
    } else {
        std::atomic<std::size_t> next{0};
        auto drain = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= first_rows.size()) return;
                run_first_row(first_rows[i]);
            }
        };
        const int count = std::min<int>(workers, 64);
        std::vector<std::future<void>> futures;
        futures.reserve(static_cast<std::size_t>(count));
        for (int w = 0; w < count; ++w)
            futures.push_back(std::async(std::launch::async, drain));
        for (auto& f : futures) f.get();
    }
    return BigInt(best.load());
}

BigInt det01_abs(const std::vector<std::uint32_t>& rows, int n) {
    if (n < 1 || rows.size() != static_cast<std::size_t>(n))
        throw InvalidParameterError("witness must be a square 0/1 matrix");
    std::vector<BigInt> entries(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            entries[static_cast<std::size_t>(r) * n + c] = (rows[r] >> c) & 1;
    BigInt d = bareiss_determinant_int(std::move(entries), n);
    return d < 0 ? BigInt(-d) : d;
}

std::vector<std::uint32_t> parse_01_matrix(const std::string& text, int& n_out) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int width = -1;
    std::vector<std::uint32_t> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::uint32_t mask = 0;
        int count = 0;
        bool comment = false;
        for (char ch : line) {
            if (comment) break;
            switch (ch) {
            case '0': ++count; break;
            case '1':
                if (count >= 31)
                    throw MalformedMatrixError("line " + std::to_string(line_no) + ": row too wide");
                mask |= std::uint32_t{1} << count;
                ++count;
                break;
            case ' ':
            case '\t': break;
            case '#': comment = true; break;
            default:
                throw MalformedMatrixError("line " + std::to_string(line_no) +
                                           ": unexpected character '" + std::string(1, ch) + "'");
            }
        }
        if (count == 0) continue;
        if (width < 0) width = count;
        if (count != width)
            throw MalformedMatrixError("line " + std::to_string(line_no) + ": expected " +
                                       std::to_string(width) + " entries, found " +
                                       std::to_string(count));
        rows.push_back(mask);
    }
    if (rows.empty()) throw MalformedMatrixError("no matrix rows found");
    if (static_cast<int>(rows.size()) != width)
        throw MalformedMatrixError("matrix is " + std::to_string(rows.size()) + "x" +
                                   std::to_string(width) + ", expected square");
    n_out = width;
    return rows;
}

BigInt h_from_hadamard_equality(int n, const HadamardMatrix& certificate) {
    if (n < 1) throw InvalidParameterError("dimension must be >= 1");
    if (certificate.order() != n + 1)
        throw InvalidParameterError("certificate order " + std::to_string(certificate.order()) +
                                    " does not match n+1 = " + std::to_string(n + 1));
    if (!is_hadamard(certificate))
        throw InvalidParameterError("certificate is not a Hadamard matrix");
    const int m = n + 1;
    if (m % 2 != 0)
        throw InvalidParameterError("odd order " + std::to_string(m) +
                                    " only admits the trivial matrix");
    BigInt power = pow(BigInt(m), static_cast<unsigned>(m / 2));
    const BigInt div = BigInt(1) << n;
    if (power % div != 0)
        throw InvariantViolationError("(n+1)^{(n+1)/2} not divisible by 2^n at n = " +
                                      std::to_string(n));
    return power / div;
}

Rational maxdet_ratio_bound(const BigInt& h_n, const BigInt& h_n1) {
    if (h_n < 1 || h_n1 < 1) throw InvalidParameterError("h values must be >= 1");
    return Rational(2 * h_n1, h_n) + 1;
}

std::pair<Rational, Rational> det_volume_ratios(const BigInt& h_n, const BigInt& h_n1, int n) {
    if (h_n < 1 || h_n1 < 1) throw InvalidParameterError("h values must be >= 1");
    const Rational ratio(h_n1, h_n);
    const Rational volume_ratio(h_n1, (n + 1) * h_n);
    const double floor_bound = std::sqrt(static_cast<double>(n) - 1.0) / (2.0 * std::exp(1.0)) - 0.5;
    if (!(rational_double(ratio) > floor_bound))
        throw InvariantViolationError("determinant growth ratio fell below its closed-form floor");
    return {ratio, volume_ratio};
}

double h_upper_hadamard(int n) {
    return std::pow(static_cast<double>(n) + 1.0, (static_cast<double>(n) + 1.0) / 2.0) /
           std::pow(2.0, static_cast<double>(n));
}

BigInt h_upper_hadamard_floor(int n) {
    if (n < 1) throw InvalidParameterError("dimension must be >= 1");
    const BigInt inner = pow(BigInt(n + 1), static_cast<unsigned>(n + 1));
    return isqrt_floor(inner) >> n;
}

double h_upper_barba(int n) {
    if (n < 1 || n % 2 != 0)
        throw InvalidParameterError("this determinant bound applies to even orders only");
    return std::pow(static_cast<double>(n), static_cast<double>(n) / 2.0) *
           std::sqrt(2.0 * n + 1.0) / std::pow(2.0, static_cast<double>(n));
}

BigInt h_upper_barba_floor(int n) {
    if (n < 1 || n % 2 != 0)
        throw InvalidParameterError("this determinant bound applies to even orders only");
    const BigInt inner = pow(BigInt(n), static_cast<unsigned>(n)) * (2 * n + 1);
    return isqrt_floor(inner) >> n;
}

double coarse_norm_bound(int n) { return std::sqrt(2.0 * n + 3.0) + 1.0; }

double sqrt_norm_bound(int n) { return std::sqrt(static_cast<double>(n) + 1.0); }

double min_norm_lower(int n) {
    if (n < 1) throw InvalidParameterError("dimension must be >= 1");
    return std::sqrt(static_cast<double>(n) - 1.0) / std::exp(1.0);
}

int compare_h_with_hadamard_upper(const BigInt& h, int n) {
    const BigInt lhs = (BigInt(1) << (2 * n)) * h * h;
    const BigInt rhs = pow(BigInt(n + 1), static_cast<unsigned>(n + 1));
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

BigInt factorial(int n) {
    if (n < 0) throw InvalidParameterError("factorial of a negative number");
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

namespace {

/// h_{k} through whichever certification route reaches k, or nullopt.
std::optional<std::pair<BigInt, HProvenance>> certified_h(int k, int workers) {
    if (k >= 1 && k <= kMaxBruteforce) {
        BigInt brute = maxdet01_bruteforce(k, workers);
        // Cross-check against the other route whenever it also applies.
        if (auto cert = try_construct(k + 1)) {
            const BigInt equality = h_from_hadamard_equality(k, *cert);
            if (equality != brute)
                throw InvariantViolationError("certification routes disagree at n = " +
                                              std::to_string(k));
        }
        return std::make_pair(std::move(brute), HProvenance::Bruteforce);
    }
    if (auto cert = try_construct(k + 1))
        return std::make_pair(h_from_hadamard_equality(k, *cert), HProvenance::HadamardEquality);
    return std::nullopt;
}

} // namespace

BoundsRow make_bounds_row(int n, int workers) {
    if (n < 1) throw InvalidParameterError("dimension must be >= 1");
    BoundsRow row;
    row.n = n;
    row.hadamard_bound = h_upper_hadamard(n);
    if (n % 2 == 0) row.barba_bound = h_upper_barba(n);
    row.coarse_norm_bound = coarse_norm_bound(n);
    row.sqrt_norm_bound = sqrt_norm_bound(n);
    row.min_norm_lower = min_norm_lower(n);

    row.h_upper = h_upper_hadamard_floor(n);
    if (n % 2 == 0) row.h_upper = std::min(row.h_upper, h_upper_barba_floor(n));

    if (auto certified = certified_h(n, workers)) {
        row.h = certified->first;
        row.provenance = certified->second;
        row.h_lower = *row.h;
        row.h_upper = *row.h;
        row.nu = Rational(*row.h, factorial(n));
        if (compare_h_with_hadamard_upper(*row.h, n) > 0)
            throw InvariantViolationError("h exceeds the determinant upper bound at n = " +
                                          std::to_string(n));
        if (n % 2 == 0 && *row.h > h_upper_barba_floor(n))
            throw InvariantViolationError("h exceeds the even-order bound at n = " +
                                          std::to_string(n));
        if (auto next = certified_h(n + 1, workers))
            row.maxdet_ratio_bound = maxdet_ratio_bound(*row.h, next->first);
    }
    return row;
}

} // namespace hadsimplex
