#include "ptdarboux/darboux.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "ptdarboux/errors.hpp"

namespace ptd {

namespace {

void require_open(const DarbouxContext& ctx, double x, const char* who) {
  const double len = ctx.config().length();
  if (!(x > 0.0 && x < len)) {
    std::ostringstream msg;
    msg << who << ": x = " << x << " outside (0, " << len << ")";
    throw DomainError(msg.str());
  }
}

}  // namespace

DarbouxContext::DarbouxContext(WellConfig cfg, int seed_index)
    : cfg_(cfg), omega_sq_(box_energy(cfg, 1)) {
  if (seed_index != 1) {
    throw ParameterError("DarbouxContext: seed " + std::to_string(seed_index) +
                         " has interior nodes; only the ground state (1) is supported");
  }
}

double superpotential(const DarbouxContext& ctx, double x) {
  require_open(ctx, x, "superpotential");
  const double a = ctx.config().alpha();
  const double t = 2.0 * a * x;
  return -2.0 * a * std::cos(t) / std::sin(t);
}

double partner_potential(const DarbouxContext& ctx, double x) {
  require_open(ctx, x, "partner_potential");
  const double a = ctx.config().alpha();
  const double s = std::sin(2.0 * a * x);
  const double w = superpotential(ctx, x);
  const double dw = 4.0 * a * a / (s * s);
  return dw + w * w + ctx.omega_sq();
}

double intertwine(const DarbouxContext& ctx, int k, double x) {
  if (k < 1) throw ParameterError("intertwine: k must be >= 1");
  require_open(ctx, x, "intertwine");
  const double a = ctx.config().alpha();
  const double t = 2.0 * a * x;
  const double cot = std::cos(t) / std::sin(t);
  return std::sqrt(4.0 * a / std::numbers::pi) * 2.0 * a *
         (k * std::cos(k * t) - cot * std::sin(k * t));
}

double transform_normalization(const DarbouxContext& ctx, int k) {
  if (k == 1) throw DegenerateError("transform_normalization: k = 1 is annihilated by L");
  if (k < 2) throw ParameterError("transform_normalization: k must be >= 2");
  const double a = ctx.config().alpha();
  return 1.0 / (2.0 * a * std::sqrt(static_cast<double>(k) * k - 1.0));
}

Eigenpair transformed_eigenpair(const DarbouxContext& ctx, int k) {
  if (k < 2) throw ParameterError("transformed_eigenpair: k must be >= 2");
  const double norm = transform_normalization(ctx, k);
  return {box_energy(ctx.config(), k),
          [ctx, k, norm](double x) { return norm * intertwine(ctx, k, x); }};
}

}  // namespace ptd
