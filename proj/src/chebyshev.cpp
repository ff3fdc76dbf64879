#include "ptdarboux/chebyshev.hpp"

namespace ptd {

double chebyshev_u(unsigned k, double c) {
  double prev = 1.0;
  if (k == 0) return prev;
  double curr = 2.0 * c;
  for (unsigned j = 1; j < k; ++j) {
    const double next = 2.0 * c * curr - prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

std::array<double, 4> chebyshev_u_derivatives(unsigned k, double c) {
  std::array<double, 4> prev{1.0, 0.0, 0.0, 0.0};
  if (k == 0) return prev;
  std::array<double, 4> curr{2.0 * c, 2.0, 0.0, 0.0};
  for (unsigned j = 1; j < k; ++j) {
    std::array<double, 4> next{};
    next[0] = 2.0 * c * curr[0] - prev[0];
    for (int d = 1; d < 4; ++d) {
      next[d] = 2.0 * c * curr[d] + 2.0 * d * curr[d - 1] - prev[d];
    }
    prev = curr;
    curr = next;
  }
  return curr;
}

}  // namespace ptd
