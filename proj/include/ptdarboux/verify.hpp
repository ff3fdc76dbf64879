#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ptdarboux/quadrature.hpp"
#include "ptdarboux/rational.hpp"

namespace ptd {

struct CheckResult {
  std::string name;
  double computed = 0.0;
  double reference = 0.0;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

// passed <=> rel_dev <= tolerance, or abs_dev <= tolerance when reference == 0.
CheckResult make_check(std::string name, double computed, double reference, double tolerance);

// Named tolerances, overridable from the command line.
class Tolerances {
 public:
  double quadrature = 1e-10;
  double identity = 1e-9;
  double residual = 1e-8;
  double spectrum = 1e-2;

  // Throws ParameterError for an unknown name or a non-positive value.
  void set(const std::string& name, double value);
  [[nodiscard]] static std::vector<std::string> names();
};

// Composite Gauss-Legendre integrator with a rule built once.
class Integrator {
 public:
  Integrator(unsigned order, unsigned panels);

  double operator()(const Profile& f, double a, double b) const {
    return integrate(f, a, b, rule_, panels_);
  }
  [[nodiscard]] unsigned order() const { return rule_.order(); }
  [[nodiscard]] unsigned panels() const { return panels_; }

 private:
  QuadratureRule rule_;
  unsigned panels_;
};

using CoefficientSource = std::function<Rational(unsigned)>;

// Integral checks on the stabilized integrands.
CheckResult check_trig_norm(int k, const Integrator& quad, double tol);
// {x-form over (0, pi/2), z-form over (0, 1)}
std::array<CheckResult, 2> check_hypergeom_norm(unsigned n, const Integrator& quad, double tol,
                                                const CoefficientSource& coefficient);
// n = 0 z-form against Beta(5/2, 5/2) = Gamma(5/2)^2 / Gamma(5); no C_n involved.
CheckResult check_beta_reference(const Integrator& quad, double tol);
CheckResult check_expectation_x(int k, double alpha, const Integrator& quad, double tol);
CheckResult check_first_moment_trig(int k, const Integrator& quad, double tol);
CheckResult check_first_moment_hypergeom(unsigned n, const Integrator& quad, double tol,
                                         const CoefficientSource& coefficient);

// Gram entries (chi~_i, chi~_j) for 2 <= i <= j <= k_max.
std::vector<CheckResult> check_orthonormality(int k_max, double alpha, const Integrator& quad,
                                              double tol);

// max |-chi'' + V1 chi - eps_k chi| / eps_k over `points` uniform abscissae
// of [margin, pi/(2 alpha) - margin].
CheckResult check_residual(int k, double alpha, double margin, double tol,
                           unsigned points = 1000);
// Same protocol for phi_k against -d^2/dx^2.
CheckResult check_box_residual(int k, double alpha, double margin, double tol,
                               unsigned points = 1000);

// Pointwise two-sided checks: max |lhs - rhs| / max |lhs| over `points`
// abscissae with t = 2 alpha x uniform in [margin, pi - margin].
CheckResult check_identity_base(unsigned n, double alpha, double tol, unsigned points = 1000,
                                double margin = 1e-3);
CheckResult check_identity_even(unsigned m, double alpha, double tol, unsigned points = 1000,
                                double margin = 1e-3);
CheckResult check_identity_odd(unsigned m, double alpha, double tol, unsigned points = 1000,
                               double margin = 1e-3);
// A_n psi-form against chi~_{n+2}, scaled by max |chi~_{n+2}|, on the open
// interval (no margin needed: both forms are endpoint-safe).
CheckResult check_correspondence(unsigned n, double alpha, double tol, unsigned points = 1000);

// Exact zero of 2F1(-(2m+1), 2m+5; 5/2; 1/2) and, for m >= 1, of
// 2F1(-(2m-1), 2m+5; 7/2; 1/2). Tolerance 0.
std::vector<CheckResult> check_midpoint_vanishing(unsigned m);

// Finite-difference Hamiltonian -d^2/dx^2 + 8 alpha^2 / sin^2(2 alpha x) on the
// half-step grid x_i = (i + 1/2) h, h = pi/(2 alpha N), with zero Dirichlet
// values beyond the grid.
class FdHamiltonian {
 public:
  FdHamiltonian(double alpha, unsigned grid_points);

  [[nodiscard]] unsigned size() const { return static_cast<unsigned>(diag_.size()); }
  // Number of eigenvalues strictly below lambda (Sturm sequence).
  [[nodiscard]] unsigned count_below(double lambda) const;
  // The `count` lowest eigenvalues, ascending, by bisection.
  [[nodiscard]] std::vector<double> lowest(unsigned count) const;

 private:
  std::vector<double> diag_;
  double off_;
};

// Lowest `count` eigenvalues. Throws ParameterError when grid_points < 100,
// count > 10 or count > grid_points / 10.
std::vector<double> fd_spectrum(double alpha, unsigned grid_points, unsigned count);

// fd eigenvalues against 4 alpha^2 (n+2)^2, relative tolerance.
std::vector<CheckResult> check_spectrum(double alpha, unsigned grid_points, unsigned count,
                                        double tol);

struct SuiteConfig {
  double alpha = 1.0;
  unsigned n_max = 10;
  unsigned quad_order = 64;
  unsigned panels = 32;
  unsigned grid_points = 4000;
  Tolerances tolerances;
  // Replaceable to confirm that a wrong C_n is caught.
  CoefficientSource coefficient;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  std::map<std::string, double> parameters;
  bool overall = false;
};

VerificationReport make_report(std::vector<CheckResult> checks,
                               std::map<std::string, double> parameters);

// Every check over n = 0..n_max and k = n + 2, in a fixed order. Individual
// failures are recorded, never thrown.
VerificationReport run_full_suite(const SuiteConfig& config);

}  // namespace ptd
