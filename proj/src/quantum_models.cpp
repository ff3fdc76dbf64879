#include "ptdarboux/quantum_models.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ptdarboux/errors.hpp"
#include "ptdarboux/hypergeom.hpp"

namespace ptd {

namespace {

void require_closed(const WellConfig& cfg, double x, const char* who) {
  if (!(x >= 0.0 && x <= cfg.length())) {
    std::ostringstream msg;
    msg << who << ": x = " << x << " outside [0, " << cfg.length() << "]";
    throw DomainError(msg.str());
  }
}

void require_open(const WellConfig& cfg, double x, const char* who) {
  if (!(x > 0.0 && x < cfg.length())) {
    std::ostringstream msg;
    msg << who << ": x = " << x << " outside (0, " << cfg.length() << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

WellConfig::WellConfig(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ParameterError("WellConfig: alpha must be > 0");
}

double WellConfig::length() const { return std::numbers::pi / (2.0 * alpha_); }
double WellConfig::midpoint() const { return std::numbers::pi / (4.0 * alpha_); }

PTParams::PTParams(double kappa, double lambda) : kappa_(kappa), lambda_(lambda) {
  if (!(kappa > 1.0) || !(lambda > 1.0) || !std::isfinite(kappa) || !std::isfinite(lambda)) {
    throw ParameterError("PTParams: require kappa > 1 and lambda > 1");
  }
}

double box_eigenfunction(const WellConfig& cfg, int k, double x) {
  if (k < 1) throw ParameterError("box_eigenfunction: k must be >= 1");
  require_closed(cfg, x, "box_eigenfunction");
  const double a = cfg.alpha();
  return std::sqrt(4.0 * a / std::numbers::pi) * std::sin(2.0 * a * k * x);
}

double box_energy(const WellConfig& cfg, int k) {
  if (k < 1) throw ParameterError("box_energy: k must be >= 1");
  const double a = cfg.alpha();
  return 4.0 * a * a * k * k;
}

double pt_potential(const WellConfig& cfg, const PTParams& p, double x) {
  require_open(cfg, x, "pt_potential");
  const double a = cfg.alpha();
  const double s = std::sin(a * x);
  const double c = std::cos(a * x);
  const double kap = p.kappa();
  const double lam = p.lambda();
  return a * a * (kap * (kap - 1.0) / (s * s) + lam * (lam - 1.0) / (c * c));
}

double pt_energy(const WellConfig& cfg, const PTParams& p, int n) {
  if (n < 0) throw ParameterError("pt_energy: n must be >= 0");
  const double a = cfg.alpha();
  const double q = 2.0 * n + p.kappa() + p.lambda();
  return a * a * q * q;
}

double pt_eigen_hypergeom(const WellConfig& cfg, const PTParams& p, int n, double amplitude,
                          double x) {
  if (n < 0) throw ParameterError("pt_eigen_hypergeom: n must be >= 0");
  require_closed(cfg, x, "pt_eigen_hypergeom");
  const double a = cfg.alpha();
  const double s = std::sin(a * x);
  const double c = std::cos(a * x);
  const TerminatingHypergeometric h{static_cast<unsigned>(n),
                                    Rational(n) + from_double(p.kappa()) + from_double(p.lambda()),
                                    from_double(p.kappa()) + Rational(1, 2)};
  return amplitude * std::pow(s, p.kappa()) * std::pow(c, p.lambda()) * f21_eval_real(h, s * s);
}

}  // namespace ptd
