#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hadsimplex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" form: lowest terms, q > 0, denominator always present
/// (so whole numbers read "4/1").  Used everywhere a rational is reported.
std::string rational_str(const Rational& r);

/// Accepts "p/q" or a bare integer "p".  Throws InvalidParameterError on
/// anything else (including q == 0).
Rational rational_parse(const std::string& text);

double rational_double(const Rational& r);

/// floor(sqrt(v)) for v >= 0.
BigInt isqrt_floor(const BigInt& v);

/// Smallest c >= 0 with c*c >= v.
BigInt isqrt_ceil(const BigInt& v);

bool is_perfect_square(const BigInt& v);

} // namespace hadsimplex
