#include "hadsimplex/hadamard.hpp"

#include "hadsimplex/errors.hpp"

#include <sstream>
#include <string>

namespace hadsimplex {

HadamardMatrix::HadamardMatrix(int order, std::vector<std::int8_t> entries)
    : order_(order), entries_(std::move(entries)) {
    if (order < 1) throw MalformedMatrixError("matrix order must be positive");
    if (entries_.size() != static_cast<std::size_t>(order) * order)
        throw MalformedMatrixError("entry count does not match a square matrix of order " +
                                   std::to_string(order));
    for (std::int8_t e : entries_)
        if (e != 1 && e != -1) throw MalformedMatrixError("entries must be +1 or -1");
}

void HadamardMatrix::set(int r, int c, int value) {
    if (value != 1 && value != -1) throw MalformedMatrixError("entries must be +1 or -1");
    entries_[static_cast<std::size_t>(r) * order_ + c] = static_cast<std::int8_t>(value);
}

namespace {
// Largest order any construction here will materialize; entries alone for
// order 4096 already take 16 MiB.
constexpr int kMaxOrder = 4096;
} // namespace

HadamardMatrix sylvester(int k) {
    if (k < 0) throw InvalidParameterError("doubling count must be non-negative");
    if (k > 12) throw CapacityError("order 2^" + std::to_string(k) + " is past the supported range");
    HadamardMatrix h(1, {1});
    for (int step = 0; step < k; ++step) h = doubled(h);
    return h;
}

HadamardMatrix doubled(const HadamardMatrix& h) {
    const int m = h.order();
    if (2 * m > kMaxOrder)
        throw CapacityError("order " + std::to_string(2 * m) + " is past the supported range");
    const int m2 = 2 * m;
    std::vector<std::int8_t> entries(static_cast<std::size_t>(m2) * m2);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            const std::int8_t v = static_cast<std::int8_t>(h.at(r, c));
            entries[static_cast<std::size_t>(r) * m2 + c] = v;
            entries[static_cast<std::size_t>(r) * m2 + m + c] = v;
            entries[static_cast<std::size_t>(m + r) * m2 + c] = v;
            entries[static_cast<std::size_t>(m + r) * m2 + m + c] = static_cast<std::int8_t>(-v);
        }
    return HadamardMatrix(m2, std::move(entries));
}

bool is_prime(std::int64_t v) {
    if (v < 2) return false;
    if (v % 2 == 0) return v == 2;
    for (std::int64_t d = 3; d * d <= v; d += 2)
        if (v % d == 0) return false;
    return true;
}

HadamardMatrix paley(int q) {
    if (!is_prime(q) || q % 4 != 3)
        throw InvalidParameterError("order " + std::to_string(q) +
                                    " is not a prime congruent to 3 mod 4");
    if (q + 1 > kMaxOrder)
        throw CapacityError("order " + std::to_string(q + 1) + " is past the supported range");
    const int m = q + 1;
    // chi[a] = +1 for nonzero squares mod q, -1 for non-squares, 0 for 0.
    std::vector<int> chi(static_cast<std::size_t>(q), -1);
    chi[0] = 0;
    for (int a = 1; a < q; ++a) chi[static_cast<std::size_t>(a) * a % q] = 1;

    // H = I + S with S = [[0, e^T], [-e, Q]], Q[i][j] = chi(i - j).
    // chi(-1) = -1 when q % 4 == 3, which makes S skew-symmetric and H Hadamard.
    std::vector<std::int8_t> entries(static_cast<std::size_t>(m) * m);
    auto put = [&](int r, int c, int v) {
        entries[static_cast<std::size_t>(r) * m + c] = static_cast<std::int8_t>(v);
    };
    put(0, 0, 1);
    for (int c = 1; c < m; ++c) put(0, c, 1);
    for (int r = 1; r < m; ++r) put(r, 0, -1);
    for (int r = 1; r < m; ++r)
        for (int c = 1; c < m; ++c) {
            if (r == c) {
                put(r, c, 1);
            } else {
                const int diff = ((r - c) % q + q) % q;
                put(r, c, chi[diff]);
            }
        }
    return HadamardMatrix(m, std::move(entries));
}

bool is_hadamard(const HadamardMatrix& h) {
    const int m = h.order();
    for (int r = 0; r < m; ++r)
        for (int s = r; s < m; ++s) {
            std::int64_t dot = 0;
            for (int c = 0; c < m; ++c) dot += h.at(r, c) * h.at(s, c);
            if (dot != (r == s ? m : 0)) return false;
        }
    return true;
}

HadamardMatrix apply_op(const HadamardMatrix& h, const EquivalenceOp& op) {
    const int m = h.order();
    auto check_index = [m](int idx, const char* what) {
        if (idx < 1 || idx > m)
            throw InvalidParameterError(std::string(what) + " index " + std::to_string(idx) +
                                        " out of range 1.." + std::to_string(m));
    };
    HadamardMatrix out = h;
    switch (op.kind) {
    case EquivalenceOp::Kind::NegateRow:
        check_index(op.i, "row");
        for (int c = 0; c < m; ++c) out.set(op.i - 1, c, -h.at(op.i - 1, c));
        break;
    case EquivalenceOp::Kind::NegateCol:
        check_index(op.i, "column");
        for (int r = 0; r < m; ++r) out.set(r, op.i - 1, -h.at(r, op.i - 1));
        break;
    case EquivalenceOp::Kind::SwapRows:
        check_index(op.i, "row");
        check_index(op.j, "row");
        if (op.i == op.j) throw InvalidParameterError("swap needs two distinct rows");
        for (int c = 0; c < m; ++c) {
            out.set(op.i - 1, c, h.at(op.j - 1, c));
            out.set(op.j - 1, c, h.at(op.i - 1, c));
        }
        break;
    case EquivalenceOp::Kind::SwapCols:
        check_index(op.i, "column");
        check_index(op.j, "column");
        if (op.i == op.j) throw InvalidParameterError("swap needs two distinct columns");
        for (int r = 0; r < m; ++r) {
            out.set(r, op.i - 1, h.at(r, op.j - 1));
            out.set(r, op.j - 1, h.at(r, op.i - 1));
        }
        break;
    }
    return out;
}

bool last_column_all_ones(const HadamardMatrix& h) {
    const int m = h.order();
    for (int r = 0; r < m; ++r)
        if (h.at(r, m - 1) != 1) return false;
    return true;
}

HadamardMatrix normalize_last_column(const HadamardMatrix& h) {
    const int m = h.order();
    HadamardMatrix out = h;
    for (int r = 0; r < m; ++r)
        if (h.at(r, m - 1) == -1)
            for (int c = 0; c < m; ++c) out.set(r, c, -h.at(r, c));
    return out;
}

HadamardMatrix parse_matrix(const std::string& text) {
    std::vector<std::int8_t> entries;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int width = -1;
    int rows = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<std::int8_t> row;
        bool comment = false;
        for (char ch : line) {
            if (comment) break;
            switch (ch) {
            case '+': row.push_back(1); break;
            case '-': row.push_back(-1); break;
            case ' ':
            case '\t': break;
            case '#': comment = true; break;
            default:
                throw MalformedMatrixError("line " + std::to_string(line_no) +
                                           ": unexpected character '" + std::string(1, ch) + "'");
            }
        }
        if (row.empty()) continue; // blank or comment-only line
        if (width < 0) width = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != width)
            throw MalformedMatrixError("line " + std::to_string(line_no) + ": expected " +
                                       std::to_string(width) + " entries, found " +
                                       std::to_string(row.size()));
        entries.insert(entries.end(), row.begin(), row.end());
        ++rows;
    }
    if (rows == 0) throw MalformedMatrixError("no matrix rows found");
    if (rows != width)
        throw MalformedMatrixError("matrix is " + std::to_string(rows) + "x" +
                                   std::to_string(width) + ", expected square");
    return HadamardMatrix(rows, std::move(entries));
}

std::string serialize_matrix(const HadamardMatrix& h) {
    const int m = h.order();
    std::string out;
    out.reserve(static_cast<std::size_t>(m) * (m + 1));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) out.push_back(h.at(r, c) == 1 ? '+' : '-');
        out.push_back('\n');
    }
    return out;
}

std::optional<HadamardMatrix> try_construct(int m) {
    if (m < 1) return std::nullopt;
    if (m == 1) return sylvester(0);
    if (m == 2) return sylvester(1);
    if (m % 4 != 0) return std::nullopt;
    if ((m & (m - 1)) == 0) {
        int k = 0;
        for (int v = m; v > 1; v >>= 1) ++k;
        return sylvester(k);
    }
    if (is_prime(m - 1) && (m - 1) % 4 == 3) return paley(m - 1);
    if (m % 2 == 0)
        if (auto half = try_construct(m / 2)) return doubled(*half);
    return std::nullopt;
}

} // namespace hadsimplex
