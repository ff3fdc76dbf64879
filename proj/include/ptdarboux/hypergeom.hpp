#pragma once

#include <optional>
#include <vector>

#include "ptdarboux/double_double.hpp"
#include "ptdarboux/rational.hpp"

namespace ptd {

// Names the polynomial 2F1(-n, b; c; z).
struct TerminatingHypergeometric {
  unsigned n = 0;
  Rational b;
  Rational c;
};

// Throws ParameterError when c is zero or a negative integer.
void validate(const TerminatingHypergeometric& h);

// Coefficients a_j = (-n)_j (b)_j / ((c)_j j!) generated once, exactly, then
// rounded to double-double for the floating-point path. Build one per
// parameter triple and reuse it across many abscissae.
class HypergeomPolynomial {
 public:
  explicit HypergeomPolynomial(const TerminatingHypergeometric& h);

  [[nodiscard]] const TerminatingHypergeometric& params() const { return params_; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return exact_; }

  [[nodiscard]] Rational operator()(const Rational& z) const;
  // Double-double Horner; the only rounding beyond the input z is at the
  // final hi + lo collapse, so heavy cancellation at large n stays harmless.
  [[nodiscard]] double operator()(double z) const;

 private:
  TerminatingHypergeometric params_;
  std::vector<Rational> exact_;
  std::vector<DoubleDouble> rounded_;
};

Rational f21_eval_exact(const TerminatingHypergeometric& h, const Rational& z);
double f21_eval_real(const TerminatingHypergeometric& h, double z);

struct F21Derivative {
  Rational factor;
  TerminatingHypergeometric shifted;
};

// d/dz 2F1(-n, b; c; z) = factor * 2F1(-(n-1), b+1; c+1; z).
// For n = 0 the factor is 0 and the parameters are returned unchanged.
F21Derivative f21_derivative(const TerminatingHypergeometric& h);

struct MidpointVanishing {
  // 2F1(-(2m+1), 2m+5; 5/2; 1/2), exact
  Rational odd_value;
  // 2F1(-(2m-1), 2m+5; 7/2; 1/2), exact; absent for m = 0 where the first
  // parameter would be +1 and the series does not terminate
  std::optional<Rational> shifted_value;

  [[nodiscard]] bool odd_vanishes() const { return odd_value == 0; }
  [[nodiscard]] std::optional<bool> shifted_vanishes() const {
    if (!shifted_value) return std::nullopt;
    return *shifted_value == 0;
  }
};

MidpointVanishing midpoint_vanishing(unsigned m);

}  // namespace ptd
