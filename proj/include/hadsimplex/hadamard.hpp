#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hadsimplex {

/// Square matrix with entries in {-1, +1}.  The type only enforces the sign
/// alphabet and squareness; orthogonality of the rows is a separate property
/// checked by is_hadamard(), so parsed candidates can be represented (and then
/// rejected) without a second matrix type.
class HadamardMatrix {
public:
    HadamardMatrix(int order, std::vector<std::int8_t> entries);

    int order() const { return order_; }
    int at(int r, int c) const { return entries_[static_cast<std::size_t>(r) * order_ + c]; }
    void set(int r, int c, int value);

    const std::vector<std::int8_t>& entries() const { return entries_; }

    bool operator==(const HadamardMatrix& rhs) const = default;

private:
    int order_;
    std::vector<std::int8_t> entries_;
};

/// One step of the standard equivalence relation on sign matrices.
/// Indices are 1-based, matching how such operations are usually written down.
struct EquivalenceOp {
    enum class Kind { NegateRow, NegateCol, SwapRows, SwapCols };
    Kind kind;
    int i = 0;
    int j = 0; // second index, swaps only
};

/// Order 2^k by repeated doubling of [+1].  k up to 12 (order 4096) is
/// accepted; beyond that CapacityError.
HadamardMatrix sylvester(int k);

/// Order q+1 from quadratic residues mod q; requires q prime with
/// q % 4 == 3, otherwise InvalidParameterError.
HadamardMatrix paley(int q);

/// [[H, H], [H, -H]] — doubles the order of any Hadamard matrix.
HadamardMatrix doubled(const HadamardMatrix& h);

/// Exact integer check that H * H^T equals order * identity.
bool is_hadamard(const HadamardMatrix& h);

/// Applies one equivalence operation, returning a new matrix.  Out-of-range
/// indices (or a swap with i == j) raise InvalidParameterError.
HadamardMatrix apply_op(const HadamardMatrix& h, const EquivalenceOp& op);

bool last_column_all_ones(const HadamardMatrix& h);

/// Negates every row whose last entry is -1.  Row negation preserves the
/// Hadamard property, so the result is equivalent to the input and has an
/// all-ones last column.  Idempotent.
HadamardMatrix normalize_last_column(const HadamardMatrix& h);

/// Text format: one row per line, characters '+' and '-', optional spaces and
/// tabs between them; blank lines and lines starting with '#' are skipped.
/// Errors carry the 1-based line number of the offending row.
HadamardMatrix parse_matrix(const std::string& text);

std::string serialize_matrix(const HadamardMatrix& h);

/// Builds an order-m Hadamard matrix when the constructions in this module
/// reach it: order 1, 2, powers of two, q+1 for usable primes q, and doubling
/// of any reachable order m/2.  Returns nullopt for orders they miss.
std::optional<HadamardMatrix> try_construct(int m);

bool is_prime(std::int64_t v);

} // namespace hadsimplex
