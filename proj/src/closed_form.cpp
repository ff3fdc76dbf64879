#include "ptdarboux/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ptdarboux/chebyshev.hpp"
#include "ptdarboux/errors.hpp"
#include "ptdarboux/hypergeom.hpp"

namespace ptd {

namespace {

double sign_pow(unsigned m) { return (m % 2 == 0) ? 1.0 : -1.0; }

double trig_norm(int k, double alpha) {
  return std::sqrt(4.0 * alpha / std::numbers::pi) / std::sqrt(static_cast<double>(k) * k - 1.0);
}

// Common guard for the identity right-hand sides; returns t = 2 alpha x.
double checked_t(double alpha, double x, double margin, const char* who) {
  if (!(alpha > 0.0)) throw ParameterError(std::string(who) + ": alpha must be > 0");
  const double t = 2.0 * alpha * x;
  if (!(t > 0.0 && t < std::numbers::pi)) {
    std::ostringstream msg;
    msg << who << ": x = " << x << " outside (0, pi/(2 alpha))";
    throw DomainError(msg.str());
  }
  if (t < margin || t > std::numbers::pi - margin) {
    std::ostringstream msg;
    msg << who << ": t = 2 alpha x = " << t << " within " << margin
        << " of a zero of sin(t); evaluate the polynomial side instead";
    throw StabilityError(msg.str());
  }
  return t;
}

double hypergeom_at_midpoint(const TerminatingHypergeometric& h, const char* who) {
  const Rational value = f21_eval_exact(h, Rational(1, 2));
  if (value == 0) {
    throw DegenerateError(std::string(who) + ": midpoint 2F1 vanishes, ratio undefined");
  }
  return to_double(value);
}

}  // namespace

double bracket_stable(int k, double t) {
  const double s = std::sin(t);
  return -s * s * chebyshev_u_derivatives(static_cast<unsigned>(k - 1), std::cos(t))[1];
}

double bracket_chebyshev(int k, double t) {
  const double c = std::cos(t);
  return k * std::cos(k * t) - c * chebyshev_u(static_cast<unsigned>(k - 1), c);
}

TrigEigenfunction::TrigEigenfunction(int k, double alpha)
    : k_(k), alpha_(alpha), norm_(0.0) {
  if (k < 2) throw ParameterError("TrigEigenfunction: k must be >= 2");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ParameterError("TrigEigenfunction: alpha must be > 0");
  }
  norm_ = trig_norm(k, alpha);
}

double TrigEigenfunction::operator()(double x) const {
  const double t = 2.0 * alpha_ * x;
  if (!(t >= 0.0 && t <= std::numbers::pi)) {
    std::ostringstream msg;
    msg << "chi_eval: x = " << x << " outside [0, pi/(2 alpha)]";
    throw DomainError(msg.str());
  }
  return norm_ * bracket_stable(k_, t);
}

ChiDerivatives TrigEigenfunction::derivatives(double x) const {
  const double len = std::numbers::pi / (2.0 * alpha_);
  if (!(x >= 1e-6 && x <= len - 1e-6)) {
    std::ostringstream msg;
    msg << "chi_derivatives: x = " << x << " not interior (endpoint margin 1e-6)";
    throw DomainError(msg.str());
  }
  // chi = -N g(t), g = s^2 P(c), P = U'_{k-1}, c = cos t, s = sin t, t = 2 alpha x.
  const double t = 2.0 * alpha_ * x;
  const double s = std::sin(t);
  const double c = std::cos(t);
  const auto u = chebyshev_u_derivatives(static_cast<unsigned>(k_ - 1), c);
  const double p = u[1];
  const double dp = u[2];
  const double ddp = u[3];
  const double s2 = s * s;
  const double g = s2 * p;
  const double dg = 2.0 * s * c * p - s2 * s * dp;
  const double ddg = 2.0 * (c * c - s2) * p - 5.0 * s2 * c * dp + s2 * s2 * ddp;
  const double scale = 2.0 * alpha_;
  return {-norm_ * g, -norm_ * scale * dg, -norm_ * scale * scale * ddg};
}

Rational coefficient_C(unsigned n) {
  const Rational half{1, 2};
  if (n % 2 == 0) {
    const unsigned m = n / 2;
    const Rational f = f21_eval_exact({2 * m, Rational(2 * m + 4), Rational(5, 2)}, half);
    const Rational sign{m % 2 == 0 ? -1 : 1};  // (-1)^{m+1}
    return sign / (8 * (m + 1)) * f;
  }
  const unsigned m = (n - 1) / 2;
  const Rational f = f21_eval_exact({2 * m, Rational(2 * m + 6), Rational(7, 2)}, half);
  const Rational sign{m % 2 == 0 ? -1 : 1};
  return sign / 20 * Rational((2 * m + 1) * (2 * m + 5), 4 * (m + 1) * (m + 2)) * f;
}

double normalization_A(unsigned n, double alpha) {
  const Rational c = coefficient_C(n);
  if (c == 0) {
    throw DegenerateError("normalization_A: C_" + std::to_string(n) + " = 0, A_n undefined");
  }
  return trig_norm(static_cast<int>(n) + 2, alpha) / to_double(c);
}

IdentitySides identity_sides(unsigned n, double alpha, double x, double margin) {
  const double t = checked_t(alpha, x, margin, "identity_sides");
  const double z = std::sin(alpha * x);
  const double lhs = f21_eval_real({n, Rational(n + 4), Rational(5, 2)}, z * z);
  const double s = std::sin(t);
  const double rhs =
      4.0 * to_double(coefficient_C(n)) * bracket_chebyshev(static_cast<int>(n) + 2, t) / (s * s);
  return {lhs, rhs};
}

IdentitySides ratio_identity_even(unsigned m, double alpha, double x, double margin) {
  const double t = checked_t(alpha, x, margin, "ratio_identity_even");
  const TerminatingHypergeometric h{2 * m, Rational(2 * m + 4), Rational(5, 2)};
  const double denom = hypergeom_at_midpoint(h, "ratio_identity_even");
  const double z = std::sin(alpha * x);
  const double lhs = f21_eval_real(h, z * z) / denom;
  const double s = std::sin(t);
  const double prefactor = -sign_pow(m) / (2.0 * (m + 1));
  const double rhs = prefactor * bracket_chebyshev(static_cast<int>(2 * m + 2), t) / (s * s);
  return {lhs, rhs};
}

IdentitySides ratio_identity_odd(unsigned m, double alpha, double x, double margin) {
  const double t = checked_t(alpha, x, margin, "ratio_identity_odd");
  const double denom = hypergeom_at_midpoint({2 * m, Rational(2 * m + 6), Rational(7, 2)},
                                             "ratio_identity_odd");
  const double z = std::sin(alpha * x);
  const double lhs =
      f21_eval_real({2 * m + 1, Rational(2 * m + 5), Rational(5, 2)}, z * z) / denom;
  const double s = std::sin(t);
  const double prefactor = -sign_pow(m) / 20.0 * (2.0 * m + 1) * (2.0 * m + 5) /
                           ((m + 1.0) * (m + 2.0));
  const double rhs = prefactor * bracket_chebyshev(static_cast<int>(2 * m + 3), t) / (s * s);
  return {lhs, rhs};
}

}  // namespace ptd
