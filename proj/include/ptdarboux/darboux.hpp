#pragma once

#include <functional>

#include "ptdarboux/quantum_models.hpp"

namespace ptd {

// One-step Darboux transformation of the infinite well, seeded with its
// ground state phi_1 and factorization constant omega^2 = eps_1.
class DarbouxContext {
 public:
  // Only the nodeless seed (index 1) gives a regular partner potential;
  // any other seed_index throws ParameterError.
  explicit DarbouxContext(WellConfig cfg, int seed_index = 1);

  [[nodiscard]] const WellConfig& config() const { return cfg_; }
  [[nodiscard]] int seed_index() const { return 1; }
  [[nodiscard]] double omega_sq() const { return omega_sq_; }

 private:
  WellConfig cfg_;
  double omega_sq_;
};

// W(x) = -phi_1'/phi_1 = -2 alpha cot(2 alpha x)
double superpotential(const DarbouxContext& ctx, double x);

// W' + W^2 + omega^2 with W' = 4 alpha^2 / sin^2(2 alpha x) taken analytically.
double partner_potential(const DarbouxContext& ctx, double x);

// chi_k = L phi_k = phi_k' + W phi_k
//       = sqrt(4 alpha/pi) 2 alpha [k cos(2 alpha k x) - cot(2 alpha x) sin(2 alpha k x)].
// Uses the literal cotangent form; see closed_form for the endpoint-safe one.
double intertwine(const DarbouxContext& ctx, int k, double x);

// 1 / sqrt(eps_k - omega^2) = 1 / (2 alpha sqrt(k^2 - 1)); k = 1 is the
// annihilated seed and throws DegenerateError.
double transform_normalization(const DarbouxContext& ctx, int k);

struct Eigenpair {
  double energy;
  std::function<double(double)> profile;
};

Eigenpair transformed_eigenpair(const DarbouxContext& ctx, int k);

}  // namespace ptd
