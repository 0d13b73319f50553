#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tempo_btw {

/// Arbitrary-precision integer used for exact path counts.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in reduced form with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace tempo_btw
