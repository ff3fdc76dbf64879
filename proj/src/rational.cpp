#include "ptdarboux/rational.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace ptd {

double to_double(const Rational& r) {
  using boost::multiprecision::msb;
  if (r == 0) return 0.0;
  BigInt p = boost::multiprecision::numerator(r);
  BigInt q = boost::multiprecision::denominator(r);
  const bool negative = p < 0;
  if (negative) p = -p;

  // Scale so that the integer quotient has 62 or 63 significant bits, then
  // fold the remainder into a sticky bit. The hardware uint64 -> double
  // conversion then rounds correctly.
  const long shift = 62 - (static_cast<long>(msb(p)) - static_cast<long>(msb(q)));
  if (shift > 0) {
    p <<= static_cast<unsigned>(shift);
  } else if (shift < 0) {
    q <<= static_cast<unsigned>(-shift);
  }
  BigInt quotient, remainder;
  boost::multiprecision::divide_qr(p, q, quotient, remainder);
  auto bits = quotient.convert_to<std::uint64_t>();
  if (remainder != 0) bits |= 1u;
  const double magnitude = std::ldexp(static_cast<double>(bits), static_cast<int>(-shift));
  return negative ? -magnitude : magnitude;
}

Rational from_double(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("from_double: non-finite value");
  if (x == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result{BigInt(scaled)};
  if (exponent > 0) {
    result *= Rational(BigInt(1) << exponent);
  } else if (exponent < 0) {
    result /= Rational(BigInt(1) << -exponent);
  }
  return result;
}

Rational pochhammer(const Rational& a, unsigned n) {
  Rational product{1};
  for (unsigned j = 0; j < n; ++j) product *= a + j;
  return product;
}

}  // namespace ptd
