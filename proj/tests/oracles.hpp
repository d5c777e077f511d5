#pragma once

// Test-only reference routes, deliberately different from the library's
// algorithms: explicit series, matrix exponentials, brute-force operator sums.

#include <cmath>
#include <cstddef>
#include <vector>

#include "anirabi/model.hpp"
#include "anirabi/special_functions.hpp"

namespace testoracle {

// L_n^k(x) as the explicit alternating series sum_j (-1)^j C(n+k, n-j) x^j / j!
// (binomials via lgamma, no recurrence).
inline double laguerre_series(int n, int k, double x) {
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double logc = std::lgamma(n + k + 1.0) - std::lgamma(double(n - j) + 1.0) - std::lgamma(double(k + j) + 1.0);
    const double term = std::exp(logc) * std::pow(x, j) / std::tgamma(j + 1.0);
    sum += (j % 2 == 0) ? term : -term;
  }
  return sum;
}

struct Dense {
  int n = 0;
  std::vector<double> a;
  explicit Dense(int n_) : n(n_), a(std::size_t(n_) * n_, 0.0) {}
  double& at(int i, int j) { return a[std::size_t(i) * n + j]; }
  double at(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

inline Dense matmul(const Dense& x, const Dense& y) {
  Dense z(x.n);
  for (int i = 0; i < x.n; ++i) {
    for (int k = 0; k < x.n; ++k) {
      const double xik = x.at(i, k);
      if (xik == 0.0) continue;
      for (int j = 0; j < x.n; ++j) z.at(i, j) += xik * y.at(k, j);
    }
  }
  return z;
}

// exp(A) by scaling-and-squaring with a Taylor core.
inline Dense expm(Dense a) {
  double norm1 = 0.0;
  for (int j = 0; j < a.n; ++j) {
    double col = 0.0;
    for (int i = 0; i < a.n; ++i) col += std::abs(a.at(i, j));
    norm1 = std::max(norm1, col);
  }
  int squarings = 0;
  while (norm1 > 0.5) {
    norm1 *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);
  for (double& v : a.a) v *= scale;

  Dense result(a.n), term(a.n);
  for (int i = 0; i < a.n; ++i) {
    result.at(i, i) = 1.0;
    term.at(i, i) = 1.0;
  }
  for (int k = 1; k <= 24; ++k) {
    term = matmul(term, a);
    for (double& v : term.a) v /= k;
    for (std::size_t idx = 0; idx < result.a.size(); ++idx) result.a[idx] += term.a[idx];
  }
  for (int s = 0; s < squarings; ++s) result = matmul(result, result);
  return result;
}

// (a+ - a) on Fock states 0..trunc.
inline Dense ladder_antisym(int trunc) {
  Dense a(trunc + 1);
  for (int n = 0; n < trunc; ++n) {
    a.at(n + 1, n) = std::sqrt(n + 1.0);   // a+
    a.at(n, n + 1) = -std::sqrt(n + 1.0);  // -a
  }
  return a;
}

// Full displacement matrix <N| exp[lam (a+ - a)] |M> by exponentiation.
inline Dense displacement_matrix_expm(double lam, int trunc) {
  Dense a = ladder_antisym(trunc);
  for (double& v : a.a) v *= lam;
  return expm(a);
}

// Displacement matrix built from the library primitive (for operator sums).
inline Dense displacement_matrix_elements(double lam, int trunc) {
  Dense d(trunc + 1);
  for (int i = 0; i <= trunc; ++i) {
    for (int j = 0; j <= trunc; ++j) d.at(i, j) = anirabi::displaced_fock_element(i, j, lam);
  }
  return d;
}

struct HyperbolicPair {
  Dense ch, sh;  // cosh/sinh of 2 lam (a+ - a)
};

inline HyperbolicPair hyperbolic_pair(double lam, int trunc) {
  const Dense dp = displacement_matrix_elements(2.0 * lam, trunc);
  const Dense dm = displacement_matrix_elements(-2.0 * lam, trunc);
  HyperbolicPair hp{Dense(trunc + 1), Dense(trunc + 1)};
  for (std::size_t i = 0; i < dp.a.size(); ++i) {
    hp.ch.a[i] = 0.5 * (dp.a[i] + dm.a[i]);
    hp.sh.a[i] = 0.5 * (dp.a[i] - dm.a[i]);
  }
  return hp;
}

// Brute-force dressing coefficients from their operator definitions,
//   G_n = Omega <n|cosh(2 lam (a+-a))|n>   - g2 <n|(a+-a) sinh(2 lam (a+-a))|n>,
//   R_n = Omega <n|sinh(2 lam (a+-a))|n-1> - g2 <n|(a+-a) cosh(2 lam (a+-a))|n-1>.
inline double coeff_G_bruteforce(const anirabi::ModelParams& p, double lam, int n, int trunc = 60) {
  const HyperbolicPair hp = hyperbolic_pair(lam, trunc);
  const Dense a_sh = matmul(ladder_antisym(trunc), hp.sh);
  return p.Omega * hp.ch.at(n, n) - p.g2() * a_sh.at(n, n);
}

inline double coeff_R_bruteforce(const anirabi::ModelParams& p, double lam, int n, int trunc = 60) {
  const HyperbolicPair hp = hyperbolic_pair(lam, trunc);
  const Dense a_ch = matmul(ladder_antisym(trunc), hp.ch);
  return p.Omega * hp.sh.at(n, n - 1) - p.g2() * a_ch.at(n, n - 1);
}

}  // namespace testoracle
