#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ptd {

// Arbitrary-precision fraction, always in lowest terms with a positive
// denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Correctly rounded (round-to-nearest-even) conversion to double.
double to_double(const Rational& r);

// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double x);

// Rising factorial a (a+1) ... (a+n-1); 1 for n = 0.
Rational pochhammer(const Rational& a, unsigned n);

}  // namespace ptd
