#pragma once

namespace ptd {

// Box (0, pi/(2 alpha)) shared by the infinite well and the Poschl-Teller
// potential.
class WellConfig {
 public:
  explicit WellConfig(double alpha);

  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double length() const;    // pi / (2 alpha)
  [[nodiscard]] double midpoint() const;  // pi / (4 alpha)

 private:
  double alpha_;
};

class PTParams {
 public:
  // Throws ParameterError unless kappa > 1 and lambda > 1.
  PTParams(double kappa, double lambda);

  [[nodiscard]] double kappa() const { return kappa_; }
  [[nodiscard]] double lambda() const { return lambda_; }

 private:
  double kappa_;
  double lambda_;
};

// Infinite rectangular well: sqrt(4 alpha / pi) sin(2 alpha k x), 4 alpha^2 k^2.
double box_eigenfunction(const WellConfig& cfg, int k, double x);
double box_energy(const WellConfig& cfg, int k);

// alpha^2 [kappa(kappa-1)/sin^2(alpha x) + lambda(lambda-1)/cos^2(alpha x)],
// open interval only.
double pt_potential(const WellConfig& cfg, const PTParams& p, double x);

// alpha^2 (2n + kappa + lambda)^2
double pt_energy(const WellConfig& cfg, const PTParams& p, int n);

// amplitude sin^kappa cos^lambda 2F1(-n, n+kappa+lambda; kappa+1/2; sin^2(alpha x)).
// Normalized only when amplitude is the matching A_n, which exists in closed
// form for kappa = lambda = 2 (see normalization_A).
double pt_eigen_hypergeom(const WellConfig& cfg, const PTParams& p, int n, double amplitude,
                          double x);

}  // namespace ptd
