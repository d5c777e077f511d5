#pragma once

namespace anirabi {

// Generalized Laguerre polynomial L_n^k(x), n >= 0, k >= 0.
// Evaluated by the upward three-term recurrence
//   (m+1) L_{m+1}^k = (2m+k+1-x) L_m^k - (m+k) L_{m-1}^k,
// which is stable for the x <= O(10), n <= O(100) range used here.
// Throws std::domain_error on negative n or k.
double laguerre(int n, int k, double x);

struct LaguerreArgs {
  int n = 0;
  int k = 0;
  double x = 0.0;
};

inline double laguerre(const LaguerreArgs& a) { return laguerre(a.n, a.k, a.x); }

// Matrix element <N| exp[lam (a+ - a)] |M> of the real displacement operator
// in the Fock basis.  For M <= N this is
//   exp(-lam^2/2) lam^(N-M) sqrt(M!/N!) L_M^(N-M)(lam^2);
// M > N follows from the adjoint relation (sign (-1)^(M-N)).  The factorial
// ratio is accumulated as a product of reciprocal square roots, so elements
// stay finite for any N, M instead of overflowing in the factorials.
// Throws std::domain_error on negative N or M.
double displaced_fock_element(int n_row, int m_col, double lam);

}  // namespace anirabi
