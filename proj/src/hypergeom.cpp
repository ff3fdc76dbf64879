#include "ptdarboux/hypergeom.hpp"

#include <string>

#include "ptdarboux/errors.hpp"

namespace ptd {

void validate(const TerminatingHypergeometric& h) {
  const Rational& c = h.c;
  if (c <= 0 && boost::multiprecision::denominator(c) == 1) {
    throw ParameterError("2F1: c = " + c.str() + " is zero or a negative integer");
  }
}

HypergeomPolynomial::HypergeomPolynomial(const TerminatingHypergeometric& h) : params_(h) {
  validate(h);
  exact_.reserve(h.n + 1);
  rounded_.reserve(h.n + 1);
  Rational term{1};
  const Rational minus_n{-static_cast<long long>(h.n)};
  for (unsigned j = 0;; ++j) {
    exact_.push_back(term);
    const double hi = to_double(term);
    rounded_.emplace_back(hi, to_double(term - from_double(hi)));
    if (j == h.n) break;
    term *= (minus_n + j) * (h.b + j);
    term /= (h.c + j) * (j + 1);
  }
}

Rational HypergeomPolynomial::operator()(const Rational& z) const {
  Rational acc = exact_.back();
  for (auto it = exact_.rbegin() + 1; it != exact_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

double HypergeomPolynomial::operator()(double z) const {
  DoubleDouble acc = rounded_.back();
  for (auto it = rounded_.rbegin() + 1; it != rounded_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc.value();
}

Rational f21_eval_exact(const TerminatingHypergeometric& h, const Rational& z) {
  return HypergeomPolynomial(h)(z);
}

double f21_eval_real(const TerminatingHypergeometric& h, double z) {
  return HypergeomPolynomial(h)(z);
}

F21Derivative f21_derivative(const TerminatingHypergeometric& h) {
  validate(h);
  if (h.n == 0) return {Rational{0}, h};
  const Rational minus_n{-static_cast<long long>(h.n)};
  return {minus_n * h.b / h.c, {h.n - 1, h.b + 1, h.c + 1}};
}

MidpointVanishing midpoint_vanishing(unsigned m) {
  const Rational half{1, 2};
  MidpointVanishing result;
  result.odd_value = f21_eval_exact({2 * m + 1, Rational(2 * m + 5), Rational(5, 2)}, half);
  if (m >= 1) {
    result.shifted_value = f21_eval_exact({2 * m - 1, Rational(2 * m + 5), Rational(7, 2)}, half);
  }
  return result;
}

}  // namespace ptd
