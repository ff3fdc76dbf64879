#pragma once

#include <array>

namespace ptd {

// U_k(c), Chebyshev polynomial of the second kind, by forward three-term
// recurrence. For c = cos t: U_k(c) sin t = sin((k+1) t).
double chebyshev_u(unsigned k, double c);

// U_k and its first three derivatives with respect to c, {U, U', U'', U'''},
// from the differentiated recurrence
//   U_{j+1}^{(d)} = 2c U_j^{(d)} + 2d U_j^{(d-1)} - U_{j-1}^{(d)}.
std::array<double, 4> chebyshev_u_derivatives(unsigned k, double c);

}  // namespace ptd
