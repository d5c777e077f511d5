#include "anirabi/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "anirabi/special_functions.hpp"

namespace anirabi {

double bloch_siegert_shift(const ModelParams& p) {
  const double lam = solve_lambda(p, 1).lam;
  const double l2 = lam * lam;
  const double e2 = std::exp(-2.0 * l2);
  const double g2 = p.g2();

  const double dressed = p.Omega * e2 * (1.0 + 2.0 * l2) - p.Omega + 4.0 * g2 * lam * l2 * e2;
  const double half_det = p.Omega - 0.5 * p.omega;
  const double jc_rad = std::sqrt(half_det * half_det + p.g * p.g);
  const double bracket = -0.5 * p.omega + p.Omega * e2 * (1.0 - 2.0 * l2) + 4.0 * g2 * lam * e2 * (1.0 - l2);
  const double dg = p.g1() - p.omega * lam;
  const double full_rad = std::sqrt(bracket * bracket + 4.0 * dg * dg);
  return dressed + jc_rad - full_rad;
}

ObservableSet ground_observables_for_lambda(double lam) {
  const double l2 = lam * lam;
  const double e2 = std::exp(-2.0 * l2);
  const double e4 = std::exp(-4.0 * l2);
  ObservableSet o;
  o.mean_photons = l2;
  o.sigma_z = -e2;
  o.polariton_mean = l2 - 0.5 * e2 + 0.5;
  o.polariton_var = 1.5 * l2 * e2 + 0.5 * l2 - 0.25 * e4 + 0.25;
  return o;
}

ObservableSet ground_observables(const ModelParams& p) {
  return ground_observables_for_lambda(solve_lambda(p, 1).lam);
}

ObservableSet excited_observables(const ModelParams& p, int n, LevelKind branch) {
  if (n < 1) throw std::domain_error("excited_observables: n must be >= 1");
  if (branch == LevelKind::ground) throw std::domain_error("excited_observables: branch must be a doublet kind");
  const double lam = solve_lambda(p, n).lam;
  const MixingAngle mix = mixing_angle(p, n);
  const double ct = std::cos(mix.theta);
  const double st = std::sin(mix.theta);
  const double l2 = lam * lam;
  const double x = 4.0 * l2;
  const double e2 = std::exp(-2.0 * l2);
  const double rn = std::sqrt(double(n));
  const double sign = (branch == LevelKind::doublet_plus) ? +1.0 : -1.0;

  ObservableSet o;
  o.mean_photons = n - 0.5 + l2 + sign * (0.5 * (ct * ct - st * st) + 2.0 * lam * rn * st * ct);

  const double diag_lower = e2 * laguerre(n - 1, 0, x);
  const double diag_upper = e2 * laguerre(n, 0, x);
  const double cross = (4.0 / rn) * lam * e2 * laguerre(n - 1, 1, x);
  if (branch == LevelKind::doublet_minus) {
    o.sigma_z = ct * ct * diag_lower - st * st * diag_upper + ct * st * cross;
  } else {
    o.sigma_z = st * st * diag_lower - ct * ct * diag_upper - ct * st * cross;
  }
  return o;
}

ObservableSet observables_on_expansion(const WavefunctionExpansion& wf) {
  double norm2 = 0.0, photons = 0.0, sz = 0.0, pol = 0.0, pol2 = 0.0;
  for (int m = 0; m <= wf.cutoff; ++m) {
    const double u2 = wf.up[m] * wf.up[m];
    const double d2 = wf.down[m] * wf.down[m];
    norm2 += u2 + d2;
    photons += m * (u2 + d2);
    sz += u2 - d2;
    pol += (m + 1.0) * u2 + m * d2;
    pol2 += (m + 1.0) * (m + 1.0) * u2 + double(m) * m * d2;
  }
  ObservableSet o;
  o.mean_photons = photons / norm2;
  o.sigma_z = sz / norm2;
  const double mean = pol / norm2;
  o.polariton_mean = mean;
  o.polariton_var = pol2 / norm2 - mean * mean;
  return o;
}

}  // namespace anirabi
