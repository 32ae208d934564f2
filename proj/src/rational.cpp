#include "hadsimplex/rational.hpp"

#include "hadsimplex/errors.hpp"

namespace hadsimplex {

std::string rational_str(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_parse(const std::string& text) {
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw InvalidParameterError("not a rational: '" + text + "'");
        return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw InvalidParameterError("not a rational: '" + text + "'");
    BigInt q(den);
    if (q == 0) throw InvalidParameterError("zero denominator in '" + text + "'");
    return Rational(BigInt(num), q);
}

double rational_double(const Rational& r) {
    return r.convert_to<double>();
}

BigInt isqrt_floor(const BigInt& v) {
    if (v < 0) throw InvalidParameterError("isqrt of a negative value");
    return sqrt(v);
}

BigInt isqrt_ceil(const BigInt& v) {
    BigInt f = isqrt_floor(v);
    return f * f == v ? f : f + 1;
}

bool is_perfect_square(const BigInt& v) {
    if (v < 0) return false;
    BigInt f = sqrt(v);
    return f * f == v;
}

} // namespace hadsimplex
