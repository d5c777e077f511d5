#include "anirabi/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "anirabi/errors.hpp"
#include "anirabi/special_functions.hpp"

namespace anirabi {

ModelParams::ModelParams(double omega_, double Omega_, double g_, double gprime_)
    : omega(omega_), Omega(Omega_), g(g_), gprime(gprime_) {
  if (!(omega > 0.0)) throw std::invalid_argument("ModelParams: omega must be > 0");
  if (!(Omega >= 0.0)) throw std::invalid_argument("ModelParams: Omega must be >= 0");
  if (!(g >= 0.0)) throw std::invalid_argument("ModelParams: g must be >= 0");
  if (!(gprime >= 0.0)) throw std::invalid_argument("ModelParams: gprime must be >= 0");
}

double coeff_R(const ModelParams& p, double lam, int n) {
  if (n < 1) throw std::domain_error("coeff_R: n must be >= 1");
  const double x = 4.0 * lam * lam;
  const double e = std::exp(-2.0 * lam * lam);
  const double rn = std::sqrt(double(n));
  return (2.0 * p.Omega / rn) * lam * e * laguerre(n - 1, 1, x)
       - p.g2() * rn * e * laguerre(n - 1, 0, x)
       + (4.0 * p.g2() / rn) * e * lam * lam * laguerre(n - 1, 2, x);
}

double coeff_G(const ModelParams& p, double lam, int n) {
  if (n < 0) throw std::domain_error("coeff_G: n must be >= 0");
  const double x = 4.0 * lam * lam;
  const double e = std::exp(-2.0 * lam * lam);
  if (n == 0) return p.Omega * e + 2.0 * p.g2() * lam * e;
  return p.Omega * e * laguerre(n, 0, x)
       + 2.0 * p.g2() * lam * e * (laguerre(n - 1, 1, x) + laguerre(n, 1, x));
}

double lambda_tolerance(const ModelParams& p) {
  return 1e-12 * std::max(1.0, std::abs(p.g1()));
}

namespace {

double displacement_equation(const ModelParams& p, int n, double lam) {
  return (p.g1() - lam * p.omega) * std::sqrt(double(n)) - coeff_R(p, lam, n);
}

}  // namespace

LambdaSolution solve_lambda(const ModelParams& p, int n) {
  if (n < 1) throw std::domain_error("solve_lambda: n must be >= 1");
  const double tol = lambda_tolerance(p);
  const double seed = p.gprime / (p.omega + 2.0 * p.Omega);

  constexpr int kSteps = 256;
  const double h = 1.0 / kSteps;

  double f_prev = displacement_equation(p, n, 0.0);
  if (f_prev == 0.0) return {n, 0.0, 0.0};

  // Collect every bracket on the 1/256 grid, resolve each, keep the root
  // closest to the weak-coupling seed.
  std::vector<double> roots;
  for (int k = 1; k <= kSteps; ++k) {
    const double lam_k = std::min(k * h, 1.0 - 1e-12);
    const double f_k = displacement_equation(p, n, lam_k);
    if (f_k == 0.0) {
      roots.push_back(lam_k);
    } else if (f_prev * f_k < 0.0) {
      double lo = (k - 1) * h, hi = lam_k;
      double f_lo = f_prev;
      double mid = 0.5 * (lo + hi);
      for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double f_mid = displacement_equation(p, n, mid);
        if (std::abs(f_mid) <= tol) break;
        if (f_lo * f_mid <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          f_lo = f_mid;
        }
      }
      roots.push_back(mid);
    }
    f_prev = f_k;
  }

  if (roots.empty()) {
    throw NoRootInUnitInterval("solve_lambda: no sign change on [0, 1) for doublet n=" + std::to_string(n));
  }
  double best = roots.front();
  for (double r : roots) {
    if (std::abs(r - seed) < std::abs(best - seed)) best = r;
  }
  return {n, best, displacement_equation(p, n, best)};
}

}  // namespace anirabi
