#include "doctest.h"

#include "hadsimplex/cube_norm.hpp"
#include "hadsimplex/hadamard.hpp"
#include "hadsimplex/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace hadsimplex;

// Certifies the shipped data/hadamard16 set: five valid order-16 matrices,
// the documented (norm, census) multiset, and pairwise inequivalence.

namespace {

std::string data_path(const std::string& name) {
    return std::string(HADSIMPLEX_SOURCE_DIR) + "/data/hadamard16/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "missing data file ", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// --- complete canonical form for order-16 equivalence ----------------------
// canonical(H) = min over (r1; ordered distinct r2..r5; sign flips of
// r2..r5) of the sorted masks of the 11 remaining rows, where columns are
// first negated to make row r1 all-ones and then reordered so that a
// column's index equals its 4-bit sign pattern under r2..r5 (tuples whose
// patterns do not hit all 16 values are skipped).  Every equivalence
// operation is absorbed: column negations by the r1 normalization, column
// permutations by the pattern ordering, row negations by the sign flips
// (r2..r5), the slot-0 normalization (remaining rows) and the r1 choice
// being sign-irrelevant, and row permutations by minimizing over tuples and
// sorting the rest.  Hence two matrices are equivalent iff their canonical
// keys are equal, which makes the key a complete invariant, unlike census
// or profile summaries.
using CanonKey = std::array<std::uint16_t, 11>;

CanonKey canonical16(const HadamardMatrix& h) {
    REQUIRE(h.order() == 16);
    constexpr int N = 16;
    std::array<std::uint16_t, N> base{};
    for (int r = 0; r < N; ++r) {
        std::uint16_t v = 0;
        for (int c = 0; c < N; ++c)
            if (h.at(r, c) < 0) v |= std::uint16_t(1u << c);
        base[r] = v;
    }
    CanonKey best;
    best.fill(0xFFFF);
    bool have = false;

    for (int r1 = 0; r1 < N; ++r1) {
        std::array<std::uint16_t, N> rows{};
        for (int r = 0; r < N; ++r) rows[r] = base[r] ^ base[r1];
        std::array<int, 15> rest{};
        int k = 0;
        for (int r = 0; r < N; ++r)
            if (r != r1) rest[k++] = r;

        std::array<int, 4> t{};
        std::array<bool, 15> used{};
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == 4) {
                for (int sig = 0; sig < 16; ++sig) {
                    const std::uint16_t m0 = rows[t[0]] ^ ((sig & 1) ? 0xFFFF : 0);
                    const std::uint16_t m1 = rows[t[1]] ^ ((sig & 2) ? 0xFFFF : 0);
                    const std::uint16_t m2 = rows[t[2]] ^ ((sig & 4) ? 0xFFFF : 0);
                    const std::uint16_t m3 = rows[t[3]] ^ ((sig & 8) ? 0xFFFF : 0);
                    std::array<std::uint8_t, N> slot{};
                    std::uint16_t seen = 0;
                    bool distinct = true;
                    for (int c = 0; c < N && distinct; ++c) {
                        const int p = ((m0 >> c) & 1) | (((m1 >> c) & 1) << 1) |
                                      (((m2 >> c) & 1) << 2) |
                                      (((m3 >> c) & 1) << 3);
                        slot[c] = static_cast<std::uint8_t>(p);
                        if (seen & (1u << p)) distinct = false;
                        seen |= std::uint16_t(1u << p);
                    }
                    if (!distinct) continue;
                    CanonKey key{};
                    int n = 0;
                    for (int ri = 0; ri < 15; ++ri) {
                        const int r = rest[ri];
                        if (r == t[0] || r == t[1] || r == t[2] || r == t[3])
                            continue;
                        const std::uint16_t src = rows[r];
                        std::uint16_t dst = 0;
                        for (int c = 0; c < N; ++c)
                            if ((src >> c) & 1) dst |= std::uint16_t(1u << slot[c]);
                        if (dst & 1) dst = std::uint16_t(~dst);
                        key[n++] = dst;
                    }
                    std::sort(key.begin(), key.end());
                    if (!have || key < best) {
                        best = key;
                        have = true;
                    }
                }
                return;
            }
            for (int i = 0; i < 15; ++i) {
                if (used[i]) continue;
                used[i] = true;
                t[depth] = rest[i];
                self(self, depth + 1);
                used[i] = false;
            }
        };
        rec(rec, 0);
    }
    REQUIRE(have);
    return best;
}

HadamardMatrix transposed(const HadamardMatrix& h) {
    const int n = h.order();
    std::vector<std::int8_t> e(static_cast<std::size_t>(n) * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            e[static_cast<std::size_t>(c) * n + r] = static_cast<std::int8_t>(h.at(r, c));
    return HadamardMatrix(n, std::move(e));
}

std::string census_string(const HadamardMatrix& h) {
    const auto rep = hadamard_projector_norm(normalize_last_column(h));
    std::string key = rational_str(rep.norm) + "|";
    for (const auto& [mu, count] : rep.census)
        key += std::to_string(mu) + ":" + std::to_string(count) + ",";
    return key;
}

} // namespace

TEST_CASE("shipped order-16 class representatives are valid and documented") {
    std::vector<HadamardMatrix> mats;
    for (int i = 1; i <= 5; ++i) {
        const HadamardMatrix h = parse_matrix(slurp(data_path("class" + std::to_string(i) + ".txt")));
        CHECK(h.order() == 16);
        CHECK(is_hadamard(h));
        mats.push_back(h);
    }

    std::multiset<std::string> censuses;
    for (const auto& h : mats) censuses.insert(census_string(h));
    const std::multiset<std::string> expected = {
        "4/1|6:448,",
        "4/1|6:192,",
        "4/1|6:64,",
        "7/2|4:896,5:1344,6:5376,8:1344,",
        "7/2|4:896,5:1344,6:5376,8:1344,",
    };
    CHECK(censuses == expected);

    // class1 is the Sylvester matrix itself.
    CHECK(canonical16(mats[0]) == canonical16(sylvester(4)));
}

TEST_CASE("the five class representatives are pairwise inequivalent") {
    std::vector<CanonKey> keys;
    for (int i = 1; i <= 5; ++i)
        keys.push_back(canonical16(
            parse_matrix(slurp(data_path("class" + std::to_string(i) + ".txt")))));
    for (std::size_t a = 0; a < keys.size(); ++a)
        for (std::size_t b = a + 1; b < keys.size(); ++b)
            CHECK(keys[a] != keys[b]);
}

TEST_CASE("the two classes sharing a census are a transpose pair") {
    const HadamardMatrix c4 = parse_matrix(slurp(data_path("class4.txt")));
    const HadamardMatrix c5 = parse_matrix(slurp(data_path("class5.txt")));
    CHECK(canonical16(transposed(c4)) == canonical16(c5));
    CHECK(canonical16(transposed(c5)) == canonical16(c4));
    // ...which is exactly why neither matrix is equivalent to its own
    // transpose:
    CHECK(canonical16(transposed(c4)) != canonical16(c4));
}
