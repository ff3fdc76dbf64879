#include "ptdarboux/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <type_traits>
#include <utility>

#include "ptdarboux/closed_form.hpp"
#include "ptdarboux/darboux.hpp"
#include "ptdarboux/errors.hpp"
#include "ptdarboux/hypergeom.hpp"
#include "ptdarboux/quantum_models.hpp"

namespace ptd {

namespace {

constexpr double kPi = std::numbers::pi;

std::string indexed(const std::string& base, long long i) {
  return base + "[" + std::to_string(i) + "]";
}

HypergeomPolynomial base_polynomial(unsigned n) {
  return HypergeomPolynomial({n, Rational(n + 4), Rational(5, 2)});
}

double energy_factor(unsigned n) {
  const double k = n + 2.0;
  return k * k - 1.0;
}

CheckResult failed_check(std::string name, const std::exception& e) {
  CheckResult r;
  r.name = std::move(name) + " (" + e.what() + ")";
  r.computed = std::numeric_limits<double>::quiet_NaN();
  r.reference = std::numeric_limits<double>::quiet_NaN();
  r.abs_dev = std::numeric_limits<double>::infinity();
  r.rel_dev = std::numeric_limits<double>::infinity();
  r.passed = false;
  return r;
}

template <class Fn>
void guarded(std::vector<CheckResult>& out, const std::string& name, Fn&& fn) {
  try {
    auto result = fn();
    if constexpr (std::is_same_v<std::decay_t<decltype(result)>, CheckResult>) {
      out.push_back(std::move(result));
    } else {
      for (auto& r : result) out.push_back(std::move(r));
    }
  } catch (const std::exception& e) {
    out.push_back(failed_check(name, e));
  }
}

// Max |lhs - rhs| / max |lhs| over the given evaluation.
template <class SidesFn>
double scaled_deviation(unsigned points, SidesFn&& sides) {
  double max_dev = 0.0;
  double max_lhs = 0.0;
  for (unsigned i = 0; i < points; ++i) {
    const auto [lhs, rhs] = sides(i);
    max_dev = std::max(max_dev, std::abs(lhs - rhs));
    max_lhs = std::max(max_lhs, std::abs(lhs));
  }
  return max_lhs > 0.0 ? max_dev / max_lhs : max_dev;
}

// Integral of z^{3/2} (1-z)^{3/2} g(z) over (0, 1). Split at 1/2 and substitute
// z = u^2 on the left, 1 - z = v^2 on the right so both halves are smooth.
double z_form_integral(const std::function<double(double)>& g, const Integrator& quad) {
  const double edge = std::sqrt(0.5);
  const double left = quad([&g](double u) {
    const double z = u * u;
    return 2.0 * u * u * u * u * std::pow(1.0 - z, 1.5) * g(z);
  }, 0.0, edge);
  const double right = quad([&g](double v) {
    const double w = v * v;
    return 2.0 * v * v * v * v * std::pow(1.0 - w, 1.5) * g(1.0 - w);
  }, 0.0, edge);
  return left + right;
}

// t = 2 alpha x at cell midpoints of [margin, pi - margin].
double identity_x(unsigned i, unsigned points, double alpha, double margin) {
  const double t = margin + (kPi - 2.0 * margin) * (i + 0.5) / points;
  return t / (2.0 * alpha);
}

}  // namespace

CheckResult make_check(std::string name, double computed, double reference, double tolerance) {
  CheckResult r;
  r.name = std::move(name);
  r.computed = computed;
  r.reference = reference;
  r.abs_dev = std::abs(computed - reference);
  r.rel_dev = reference != 0.0 ? r.abs_dev / std::abs(reference) : r.abs_dev;
  r.tolerance = tolerance;
  r.passed = reference != 0.0 ? r.rel_dev <= tolerance : r.abs_dev <= tolerance;
  return r;
}

void Tolerances::set(const std::string& name, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ParameterError("tolerance '" + name + "' must be a positive finite number");
  }
  if (name == "quadrature") {
    quadrature = value;
  } else if (name == "identity") {
    identity = value;
  } else if (name == "residual") {
    residual = value;
  } else if (name == "spectrum") {
    spectrum = value;
  } else {
    throw ParameterError("unknown tolerance name '" + name + "'");
  }
}

std::vector<std::string> Tolerances::names() {
  return {"quadrature", "identity", "residual", "spectrum"};
}

Integrator::Integrator(unsigned order, unsigned panels)
    : rule_(gauss_legendre(order)), panels_(panels) {
  if (panels == 0) throw ParameterError("Integrator: panels must be >= 1");
}

CheckResult check_trig_norm(int k, const Integrator& quad, double tol) {
  const double value = quad([k](double t) {
    const double b = bracket_stable(k, t);
    return b * b;
  }, 0.0, kPi);
  return make_check(indexed("trig_norm", k), value, kPi / 2.0 * (k * k - 1.0), tol);
}

std::array<CheckResult, 2> check_hypergeom_norm(unsigned n, const Integrator& quad, double tol,
                                                const CoefficientSource& coefficient) {
  const auto poly = base_polynomial(n);
  const double c = to_double(coefficient(n));
  const double x_form = quad([&poly](double x) {
    const double s = std::sin(x);
    const double co = std::cos(x);
    const double f = poly(s * s);
    const double w = s * s * co * co;
    return w * w * f * f;
  }, 0.0, kPi / 2.0);
  const double z_form = z_form_integral([&poly](double z) {
    const double f = poly(z);
    return f * f;
  }, quad);
  const double base = energy_factor(n) * c * c;
  return {make_check(indexed("hypergeom_norm_x", n), x_form, kPi / 4.0 * base, tol),
          make_check(indexed("hypergeom_norm_z", n), z_form, kPi / 2.0 * base, tol)};
}

CheckResult check_beta_reference(const Integrator& quad, double tol) {
  const double value = z_form_integral([](double) { return 1.0; }, quad);
  const double beta = std::tgamma(2.5) * std::tgamma(2.5) / std::tgamma(5.0);
  return make_check("beta_5/2_5/2", value, beta, tol);
}

CheckResult check_expectation_x(int k, double alpha, const Integrator& quad, double tol) {
  const TrigEigenfunction chi(k, alpha);
  const WellConfig cfg(alpha);
  const double value = quad([&chi](double x) {
    const double v = chi(x);
    return x * v * v;
  }, 0.0, cfg.length());
  std::ostringstream name;
  name << "expectation_x[k=" << k << ",alpha=" << alpha << "]";
  return make_check(name.str(), value, cfg.midpoint(), tol);
}

CheckResult check_first_moment_trig(int k, const Integrator& quad, double tol) {
  const double value = quad([k](double t) {
    const double b = bracket_stable(k, t);
    return t * b * b;
  }, 0.0, kPi);
  return make_check(indexed("first_moment_trig", k), value, kPi * kPi / 4.0 * (k * k - 1.0), tol);
}

CheckResult check_first_moment_hypergeom(unsigned n, const Integrator& quad, double tol,
                                         const CoefficientSource& coefficient) {
  const auto poly = base_polynomial(n);
  const double c = to_double(coefficient(n));
  const double value = quad([&poly](double x) {
    const double s = std::sin(x);
    const double co = std::cos(x);
    const double f = poly(s * s);
    const double w = s * s * co * co;
    return x * w * w * f * f;
  }, 0.0, kPi / 2.0);
  return make_check(indexed("first_moment_hypergeom", n), value,
                    kPi * kPi / 16.0 * energy_factor(n) * c * c, tol);
}

std::vector<CheckResult> check_orthonormality(int k_max, double alpha, const Integrator& quad,
                                              double tol) {
  if (k_max < 2) throw ParameterError("check_orthonormality: k_max must be >= 2");
  const double len = WellConfig(alpha).length();
  std::vector<TrigEigenfunction> chis;
  for (int k = 2; k <= k_max; ++k) chis.emplace_back(k, alpha);
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < chis.size(); ++i) {
    for (std::size_t j = i; j < chis.size(); ++j) {
      const auto& a = chis[i];
      const auto& b = chis[j];
      const double value = quad([&a, &b](double x) { return a(x) * b(x); }, 0.0, len);
      std::ostringstream name;
      name << "gram[" << a.k() << "," << b.k() << "]";
      out.push_back(make_check(name.str(), value, i == j ? 1.0 : 0.0, tol));
    }
  }
  return out;
}

CheckResult check_residual(int k, double alpha, double margin, double tol, unsigned points) {
  const WellConfig cfg(alpha);
  const DarbouxContext ctx(cfg);
  const TrigEigenfunction chi(k, alpha);
  const double eps = chi.energy();
  const double a = margin;
  const double b = cfg.length() - margin;
  if (!(margin > 0.0) || !(a < b) || points < 2) {
    throw ParameterError("check_residual: need 0 < margin < pi/(4 alpha) and points >= 2");
  }
  double worst = 0.0;
  for (unsigned i = 0; i < points; ++i) {
    const double x = a + (b - a) * i / (points - 1);
    const auto d = chi.derivatives(x);
    const double r = -d.second + partner_potential(ctx, x) * d.value - eps * d.value;
    worst = std::max(worst, std::abs(r) / eps);
  }
  return make_check(indexed("residual", k), worst, 0.0, tol);
}

CheckResult check_box_residual(int k, double alpha, double margin, double tol, unsigned points) {
  const WellConfig cfg(alpha);
  const double eps = box_energy(cfg, k);
  const double a = margin;
  const double b = cfg.length() - margin;
  if (!(margin > 0.0) || !(a < b) || points < 2) {
    throw ParameterError("check_box_residual: need 0 < margin < pi/(4 alpha) and points >= 2");
  }
  const double wave = 2.0 * alpha * k;
  double worst = 0.0;
  for (unsigned i = 0; i < points; ++i) {
    const double x = a + (b - a) * i / (points - 1);
    const double phi = box_eigenfunction(cfg, k, x);
    const double second = -wave * wave * phi;
    worst = std::max(worst, std::abs(-second - eps * phi) / eps);
  }
  return make_check(indexed("box_residual", k), worst, 0.0, tol);
}

CheckResult check_identity_base(unsigned n, double alpha, double tol, unsigned points,
                                double margin) {
  const double dev = scaled_deviation(points, [&](unsigned i) {
    return identity_sides(n, alpha, identity_x(i, points, alpha, margin), margin);
  });
  return make_check(indexed("identity_base", n), dev, 0.0, tol);
}

CheckResult check_identity_even(unsigned m, double alpha, double tol, unsigned points,
                                double margin) {
  const double dev = scaled_deviation(points, [&](unsigned i) {
    return ratio_identity_even(m, alpha, identity_x(i, points, alpha, margin), margin);
  });
  return make_check(indexed("identity_even", m), dev, 0.0, tol);
}

CheckResult check_identity_odd(unsigned m, double alpha, double tol, unsigned points,
                               double margin) {
  const double dev = scaled_deviation(points, [&](unsigned i) {
    return ratio_identity_odd(m, alpha, identity_x(i, points, alpha, margin), margin);
  });
  return make_check(indexed("identity_odd", m), dev, 0.0, tol);
}

CheckResult check_correspondence(unsigned n, double alpha, double tol, unsigned points) {
  const WellConfig cfg(alpha);
  const PTParams pt(2.0, 2.0);
  const TrigEigenfunction chi(static_cast<int>(n) + 2, alpha);
  const double amplitude = normalization_A(n, alpha);
  const double dev = scaled_deviation(points, [&](unsigned i) {
    const double x = cfg.length() * (i + 0.5) / points;
    return std::pair{chi(x), pt_eigen_hypergeom(cfg, pt, static_cast<int>(n), amplitude, x)};
  });
  return make_check(indexed("correspondence", n), dev, 0.0, tol);
}

std::vector<CheckResult> check_midpoint_vanishing(unsigned m) {
  const auto mv = midpoint_vanishing(m);
  std::vector<CheckResult> out;
  out.push_back(make_check(indexed("midpoint_zero_odd", m), to_double(mv.odd_value), 0.0, 0.0));
  if (mv.shifted_value) {
    out.push_back(
        make_check(indexed("midpoint_zero_shifted", m), to_double(*mv.shifted_value), 0.0, 0.0));
  }
  return out;
}

FdHamiltonian::FdHamiltonian(double alpha, unsigned grid_points) {
  if (grid_points < 2) throw ParameterError("FdHamiltonian: grid_points must be >= 2");
  const WellConfig cfg(alpha);
  const double h = cfg.length() / grid_points;
  const double inv_h2 = 1.0 / (h * h);
  diag_.resize(grid_points);
  for (unsigned i = 0; i < grid_points; ++i) {
    const double x = (i + 0.5) * h;
    const double s = std::sin(2.0 * alpha * x);
    diag_[i] = 2.0 * inv_h2 + 8.0 * alpha * alpha / (s * s);
  }
  off_ = -inv_h2;
}

unsigned FdHamiltonian::count_below(double lambda) const {
  const double off_sq = off_ * off_;
  const double tiny = std::numeric_limits<double>::min() * 1e10;
  unsigned negatives = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    q = diag_[i] - lambda - (i == 0 ? 0.0 : off_sq / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++negatives;
  }
  return negatives;
}

std::vector<double> FdHamiltonian::lowest(unsigned count) const {
  const auto [min_it, max_it] = std::minmax_element(diag_.begin(), diag_.end());
  const double radius = 2.0 * std::abs(off_);
  std::vector<double> values;
  values.reserve(count);
  for (unsigned idx = 0; idx < count; ++idx) {
    double lo = values.empty() ? *min_it - radius : values.back();
    double hi = *max_it + radius;
    for (int iter = 0; iter < 300; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (count_below(mid) > idx) {
        hi = mid;
      } else {
        lo = mid;
      }
      if (hi - lo <= 1e-13 * std::max(1.0, std::abs(hi))) break;
    }
    values.push_back(0.5 * (lo + hi));
  }
  return values;
}

std::vector<double> fd_spectrum(double alpha, unsigned grid_points, unsigned count) {
  if (grid_points < 100) throw ParameterError("fd_spectrum: grid_points must be >= 100");
  if (count > 10 || count > grid_points / 10) {
    throw ParameterError("fd_spectrum: count " + std::to_string(count) +
                         " exceeds resolvable modes (max 10 and grid_points/10)");
  }
  return FdHamiltonian(alpha, grid_points).lowest(count);
}

std::vector<CheckResult> check_spectrum(double alpha, unsigned grid_points, unsigned count,
                                        double tol) {
  const auto values = fd_spectrum(alpha, grid_points, count);
  const PTParams pt(2.0, 2.0);
  const WellConfig cfg(alpha);
  std::vector<CheckResult> out;
  for (unsigned n = 0; n < values.size(); ++n) {
    out.push_back(make_check(indexed("fd_spectrum", n), values[n],
                             pt_energy(cfg, pt, static_cast<int>(n)), tol));
  }
  return out;
}

VerificationReport make_report(std::vector<CheckResult> checks,
                               std::map<std::string, double> parameters) {
  VerificationReport report{std::move(checks), std::move(parameters), true};
  report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const CheckResult& r) { return r.passed; });
  return report;
}

VerificationReport run_full_suite(const SuiteConfig& config) {
  const double alpha = config.alpha;
  const auto& tol = config.tolerances;
  const CoefficientSource coefficient =
      config.coefficient ? config.coefficient : CoefficientSource(coefficient_C);
  const Integrator quad(config.quad_order, config.panels);
  const int k_max = static_cast<int>(config.n_max) + 2;
  const double margin = 1e-3;

  std::vector<CheckResult> out;
  for (unsigned m = 0; m <= config.n_max; ++m) {
    guarded(out, indexed("midpoint_zero", m), [&] { return check_midpoint_vanishing(m); });
  }
  for (int k = 2; k <= k_max; ++k) {
    guarded(out, indexed("trig_norm", k), [&] { return check_trig_norm(k, quad, tol.quadrature); });
  }
  guarded(out, "beta_5/2_5/2", [&] { return check_beta_reference(quad, tol.quadrature); });
  for (unsigned n = 0; n <= config.n_max; ++n) {
    guarded(out, indexed("hypergeom_norm", n),
            [&] { return check_hypergeom_norm(n, quad, tol.quadrature, coefficient); });
  }
  for (int k = 2; k <= k_max; ++k) {
    guarded(out, indexed("expectation_x", k),
            [&] { return check_expectation_x(k, alpha, quad, tol.quadrature); });
  }
  for (int k = 2; k <= k_max; ++k) {
    guarded(out, indexed("first_moment_trig", k),
            [&] { return check_first_moment_trig(k, quad, tol.quadrature); });
  }
  for (unsigned n = 0; n <= config.n_max; ++n) {
    guarded(out, indexed("first_moment_hypergeom", n),
            [&] { return check_first_moment_hypergeom(n, quad, tol.quadrature, coefficient); });
  }
  guarded(out, "gram", [&] { return check_orthonormality(k_max, alpha, quad, tol.quadrature); });
  for (int k = 2; k <= k_max; ++k) {
    guarded(out, indexed("residual", k),
            [&] { return check_residual(k, alpha, margin, tol.residual); });
  }
  for (int k = 1; k <= k_max; ++k) {
    guarded(out, indexed("box_residual", k),
            [&] { return check_box_residual(k, alpha, margin, tol.residual); });
  }
  for (unsigned n = 0; n <= config.n_max; ++n) {
    guarded(out, indexed("identity_base", n),
            [&] { return check_identity_base(n, alpha, tol.identity); });
    guarded(out, indexed("correspondence", n),
            [&] { return check_correspondence(n, alpha, tol.identity); });
  }
  for (unsigned m = 0; 2 * m <= config.n_max; ++m) {
    guarded(out, indexed("identity_even", m),
            [&] { return check_identity_even(m, alpha, tol.identity); });
  }
  for (unsigned m = 0; 2 * m + 1 <= config.n_max; ++m) {
    guarded(out, indexed("identity_odd", m),
            [&] { return check_identity_odd(m, alpha, tol.identity); });
  }
  guarded(out, "fd_spectrum",
          [&] { return check_spectrum(alpha, config.grid_points, 3, tol.spectrum); });

  return make_report(std::move(out), {{"alpha", alpha},
                                      {"n_max", static_cast<double>(config.n_max)},
                                      {"quad_order", static_cast<double>(config.quad_order)},
                                      {"panels", static_cast<double>(config.panels)},
                                      {"grid_points", static_cast<double>(config.grid_points)}});
}

}  // namespace ptd
