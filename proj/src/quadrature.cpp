#include "ptdarboux/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ptdarboux/errors.hpp"

namespace ptd {

namespace {

struct LegendreValue {
  double p;
  double dp;
};

LegendreValue legendre(unsigned order, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (unsigned j = 2; j <= order; ++j) {
    const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  // order >= 1 here; p1 = P_order, p0 = P_{order-1}
  const double dp = order * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

}  // namespace

QuadratureRule::QuadratureRule(std::vector<double> nodes, std::vector<double> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {
  if (nodes_.empty() || nodes_.size() != weights_.size()) {
    throw ParameterError("QuadratureRule: nodes and weights must be non-empty and equal length");
  }
}

QuadratureRule gauss_legendre(unsigned order) {
  if (order == 0) throw ParameterError("gauss_legendre: order must be >= 1");
  if (order == 1) return QuadratureRule({0.0}, {2.0});

  std::vector<double> nodes(order);
  std::vector<double> weights(order);
  const unsigned half = (order + 1) / 2;
  for (unsigned i = 0; i < half; ++i) {
    // i-th largest root
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    LegendreValue v{};
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      v = legendre(order, x);
      const double step = v.p / v.dp;
      x -= step;
      if (std::abs(step) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      std::ostringstream msg;
      msg << "gauss_legendre: root " << i << " of order " << order << " did not converge";
      throw EvaluationError(msg.str());
    }
    v = legendre(order, x);
    const double w = 2.0 / ((1.0 - x * x) * v.dp * v.dp);
    nodes[order - 1 - i] = x;
    weights[order - 1 - i] = w;
    nodes[i] = -x;
    weights[i] = w;
  }
  if (order % 2 == 1) nodes[order / 2] = 0.0;
  return QuadratureRule(std::move(nodes), std::move(weights));
}

double integrate(const Profile& profile, double a, double b, const QuadratureRule& rule,
                 unsigned panels) {
  if (!(a < b)) throw ParameterError("integrate: require a < b");
  if (panels == 0) throw ParameterError("integrate: panels must be >= 1");
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  const auto& nodes = rule.nodes();
  const auto& weights = rule.weights();
  double total = 0.0;
  for (unsigned p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    double panel_sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const double x = mid + half * nodes[i];
      const double fx = profile(x);
      if (!std::isfinite(fx)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "integrate: non-finite integrand at x = " << x;
        throw EvaluationError(msg.str());
      }
      panel_sum += weights[i] * fx;
    }
    total += half * panel_sum;
  }
  return total;
}

double integrate(const Profile& profile, double a, double b, unsigned order, unsigned panels) {
  return integrate(profile, a, b, gauss_legendre(order), panels);
}

}  // namespace ptd
