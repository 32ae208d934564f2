#include "hadsimplex/simplex.hpp"

#include "hadsimplex/errors.hpp"

#include <string>

namespace hadsimplex {

Cube Cube::symmetric(int n) {
    if (n < 0) throw InvalidParameterError("cube dimension must be non-negative");
    Cube c;
    c.dimension = n;
    c.center.assign(static_cast<std::size_t>(n), Rational(0));
    c.half_side = 1;
    return c;
}

Cube Cube::unit(int n) {
    if (n < 0) throw InvalidParameterError("cube dimension must be non-negative");
    Cube c;
    c.dimension = n;
    c.center.assign(static_cast<std::size_t>(n), Rational(1, 2));
    c.half_side = Rational(1, 2);
    return c;
}

std::vector<Rational> Cube::vertex(std::uint64_t mask) const {
    if (dimension < 64 && (mask >> dimension) != 0)
        throw InvalidParameterError("vertex mask has bits past the cube dimension");
    std::vector<Rational> v(static_cast<std::size_t>(dimension));
    for (int i = 0; i < dimension; ++i)
        v[i] = center[i] + ((mask >> i) & 1 ? half_side : -half_side);
    return v;
}

RatMatrix Simplex::vertex_matrix() const {
    const int n = dimension;
    RatMatrix m(n + 1, n + 1);
    for (int r = 0; r <= n; ++r) {
        for (int c = 0; c < n; ++c) m.at(r, c) = vertices[r][c];
        m.at(r, n) = 1;
    }
    return m;
}

Simplex simplex_from_hadamard(const HadamardMatrix& h) {
    if (!is_hadamard(h))
        throw InvalidParameterError("input rows are not orthogonal at order " +
                                    std::to_string(h.order()));
    if (!last_column_all_ones(h))
        throw NormalizationRequiredError("last column must be all ones; normalize first");
    const int n = h.order() - 1;
    Simplex s;
    s.dimension = n;
    s.vertices.resize(static_cast<std::size_t>(n) + 1);
    for (int r = 0; r <= n; ++r) {
        s.vertices[r].resize(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c) s.vertices[r][c] = h.at(r, c);
    }
    return s;
}

Simplex scaled(const Simplex& s, const Rational& factor) {
    Simplex out = s;
    for (auto& v : out.vertices)
        for (auto& x : v) x *= factor;
    return out;
}

Simplex to_unit_cube(const Simplex& s) {
    Simplex out = s;
    for (auto& v : out.vertices)
        for (auto& x : v) x = (x + 1) / 2;
    return out;
}

Simplex to_symmetric_cube(const Simplex& s) {
    Simplex out = s;
    for (auto& v : out.vertices)
        for (auto& x : v) x = 2 * x - 1;
    return out;
}

LagrangeEvaluator LagrangeEvaluator::build(const Simplex& s) {
    const int n = s.dimension;
    if (n < 0 || s.vertices.size() != static_cast<std::size_t>(n) + 1)
        throw InvalidParameterError("simplex needs dimension + 1 vertices");
    for (const auto& v : s.vertices)
        if (v.size() != static_cast<std::size_t>(n))
            throw DimensionMismatchError("vertex coordinate count does not match dimension");
    const RatMatrix m = s.vertex_matrix();
    LagrangeEvaluator ev;
    ev.dimension_ = n;
    ev.vertex_determinant_ = bareiss_determinant(m);
    if (ev.vertex_determinant_ == 0)
        throw DegenerateSimplexError("simplex vertices are affinely dependent");
    // Column j of the inverse holds the coefficients of lambda_j: by
    // definition lambda(x)^T * M = (x, 1), so lambda(x) = M^{-T} (x, 1).
    ev.coefficients_ = inverse(m);
    return ev;
}

std::vector<Rational> LagrangeEvaluator::barycentric(const std::vector<Rational>& x) const {
    const int n = dimension_;
    if (x.size() != static_cast<std::size_t>(n))
        throw DimensionMismatchError("point has " + std::to_string(x.size()) +
                                     " coordinates, evaluator expects " + std::to_string(n));
    std::vector<Rational> lambda(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        Rational acc = coefficients_.at(n, j);
        for (int i = 0; i < n; ++i) acc += coefficients_.at(i, j) * x[i];
        lambda[j] = acc;
    }
    return lambda;
}

LagrangeEvaluator build_evaluator(const Simplex& s) {
    return LagrangeEvaluator::build(s);
}

Rational squared_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("points of different dimension");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rational d = a[i] - b[i];
        acc += d * d;
    }
    return acc;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("points of different dimension");
    Rational acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool is_regular(const Simplex& s) {
    const auto& v = s.vertices;
    if (v.size() < 2) return true;
    Rational edge = squared_distance(v[0], v[1]);
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            if (squared_distance(v[a], v[b]) != edge) return false;
    return true;
}

} // namespace hadsimplex
