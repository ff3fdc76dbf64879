#pragma once

#include "ptdarboux/rational.hpp"

namespace ptd {

// Endpoint-safe forms of B_k(t) = k cos(kt) - cot(t) sin(kt), t in [0, pi].
//
// bracket_stable uses B_k(t) = -sin^2(t) U'_{k-1}(cos t), which follows from
// B_k = sin t d/dt [sin(kt)/sin t]; it has no cancellation as t -> 0, pi.
// bracket_chebyshev is k cos(kt) - cos(t) U_{k-1}(cos t): division-free but
// it still cancels to O(t^2) near the ends.
double bracket_stable(int k, double t);
double bracket_chebyshev(int k, double t);

struct ChiDerivatives {
  double value;
  double first;
  double second;
};

// Normalized transformed state chi~_k(x) = N_k B_k(2 alpha x),
// N_k = sqrt(4 alpha/pi) / sqrt(k^2 - 1), energy 4 alpha^2 k^2.
class TrigEigenfunction {
 public:
  TrigEigenfunction(int k, double alpha);

  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double norm() const { return norm_; }
  [[nodiscard]] double energy() const { return 4.0 * alpha_ * alpha_ * k_ * k_; }

  // Closed interval [0, pi/(2 alpha)]; zero at both ends.
  [[nodiscard]] double operator()(double x) const;

  // Analytic derivatives in x. Throws DomainError within 1e-6 of an endpoint.
  [[nodiscard]] ChiDerivatives derivatives(double x) const;

 private:
  int k_;
  double alpha_;
  double norm_;
};

inline double chi_eval(const TrigEigenfunction& f, double x) { return f(x); }
inline ChiDerivatives chi_derivatives(const TrigEigenfunction& f, double x) {
  return f.derivatives(x);
}

// C_n relating A_n = N_{n+2} / C_n, from matching chi~_{n+2} and psi_n at the
// midpoint: the value for even n, the slope for odd n.
//   n = 2m:   (-1)^{m+1} / (8(m+1)) 2F1(-2m, 2m+4; 5/2; 1/2)
//   n = 2m+1: (-1)^{m+1}/20 (2m+1)(2m+5)/(4(m+1)(m+2)) 2F1(-2m, 2m+6; 7/2; 1/2)
Rational coefficient_C(unsigned n);

// C_n^{-1} N_{n+2}, sign kept so that psi_n == chi~_{n+2}. Throws
// DegenerateError if C_n = 0.
double normalization_A(unsigned n, double alpha);

// Default exclusion around sin(2 alpha x) = 0, in units of t = 2 alpha x.
inline constexpr double kDefaultNodeMargin = 1e-3;

struct IdentitySides {
  double lhs;
  double rhs;
};

// lhs = 2F1(-n, n+4; 5/2; sin^2(alpha x))
// rhs = 4 C_n B_{n+2}(2 alpha x) / sin^2(2 alpha x)
// Throws StabilityError if t = 2 alpha x is within `margin` of 0 or pi.
IdentitySides identity_sides(unsigned n, double alpha, double x,
                             double margin = kDefaultNodeMargin);

// lhs = 2F1(-2m, 2m+4; 5/2; sin^2) / 2F1(-2m, 2m+4; 5/2; 1/2)
// rhs = (-1)^{m+1} / (2(m+1)) B_{2m+2}(t) / sin^2(t)
IdentitySides ratio_identity_even(unsigned m, double alpha, double x,
                                  double margin = kDefaultNodeMargin);

// lhs = 2F1(-(2m+1), 2m+5; 5/2; sin^2) / 2F1(-2m, 2m+6; 7/2; 1/2)
// rhs = (-1)^{m+1}/20 (2m+1)(2m+5)/((m+1)(m+2)) B_{2m+3}(t) / sin^2(t)
IdentitySides ratio_identity_odd(unsigned m, double alpha, double x,
                                 double margin = kDefaultNodeMargin);

}  // namespace ptd
