#pragma once

#include <functional>
#include <vector>

namespace ptd {

// Gauss-Legendre rule on [-1, 1]. Immutable once built; share freely.
class QuadratureRule {
 public:
  QuadratureRule(std::vector<double> nodes, std::vector<double> weights);

  [[nodiscard]] unsigned order() const { return static_cast<unsigned>(nodes_.size()); }
  [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

// Roots of P_order by Newton iteration from Chebyshev-type initial guesses,
// weights 2 / ((1 - x^2) P'(x)^2). Throws EvaluationError if a root fails to
// converge within 100 iterations.
QuadratureRule gauss_legendre(unsigned order);

using Profile = std::function<double(double)>;

// Composite rule: [a, b] split into `panels` equal pieces with `rule` on each.
// Throws EvaluationError naming the abscissa if the profile is not finite.
double integrate(const Profile& profile, double a, double b, const QuadratureRule& rule,
                 unsigned panels);

double integrate(const Profile& profile, double a, double b, unsigned order, unsigned panels);

}  // namespace ptd
