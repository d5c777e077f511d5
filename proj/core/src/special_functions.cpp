#include "anirabi/special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace anirabi {

double laguerre(int n, int k, double x) {
  if (n < 0 || k < 0) throw std::domain_error("laguerre: negative degree or order");
  if (n == 0) return 1.0;
  double lm1 = 1.0;            // L_0^k
  double lm0 = 1.0 + k - x;    // L_1^k
  for (int m = 1; m < n; ++m) {
    const double next = ((2.0 * m + k + 1.0 - x) * lm0 - (m + k) * lm1) / (m + 1.0);
    lm1 = lm0;
    lm0 = next;
  }
  return lm0;
}

double displaced_fock_element(int n_row, int m_col, double lam) {
  if (n_row < 0 || m_col < 0) throw std::domain_error("displaced_fock_element: negative Fock index");
  if (m_col > n_row) {
    const int d = m_col - n_row;
    const double sign = (d % 2 == 0) ? 1.0 : -1.0;
    return sign * displaced_fock_element(m_col, n_row, lam);
  }
  const int d = n_row - m_col;
  // lam^d and sqrt(M!/N!) = prod_{j=M+1..N} 1/sqrt(j), accumulated jointly.
  double factor = 1.0;
  for (int j = 1; j <= d; ++j) factor *= lam / std::sqrt(double(m_col + j));
  return std::exp(-0.5 * lam * lam) * factor * laguerre(m_col, d, lam * lam);
}

}  // namespace anirabi
