#include "anirabi/weak_coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace anirabi {

double lambda_weak(const ModelParams& p) { return p.gprime / (p.omega + 2.0 * p.Omega); }

ModifiedJCParams modified_jc(const ModelParams& p) {
  ModifiedJCParams m;
  m.lam = lambda_weak(p);
  m.d_omega = 4.0 * p.g2() * m.lam;
  m.d_Omega = 2.0 * p.g2() * m.lam;
  m.d_g = p.gprime * (2.0 * p.Omega - p.omega) / (p.omega + 2.0 * p.Omega);
  m.d_E = -2.0 * p.g1() * m.lam;
  return m;
}

std::vector<AnalyticLevel> modified_jc_spectrum(const ModelParams& p, int n_doublets) {
  if (n_doublets < 1) throw std::domain_error("modified_jc_spectrum: n_doublets must be >= 1");
  const ModifiedJCParams m = modified_jc(p);

  std::vector<AnalyticLevel> out;
  out.reserve(2 * n_doublets + 1);

  AnalyticLevel ground;
  ground.kind = LevelKind::ground;
  ground.n = 0;
  ground.lam = m.lam;
  ground.energy = -(p.Omega + m.d_Omega) + m.d_E;
  ground.label = level_label(LevelKind::ground, 0);
  out.push_back(ground);

  for (int n = 1; n <= n_doublets; ++n) {
    const double h11 = (p.omega + m.d_omega) * (n - 1) + (p.Omega + m.d_Omega) + m.d_E;
    const double h22 = (p.omega - m.d_omega) * n - (p.Omega + m.d_Omega) + m.d_E;
    const double off = (p.g + m.d_g) * std::sqrt(double(n));
    const double mean = 0.5 * (h11 + h22);
    const double rad = std::hypot(0.5 * (h11 - h22), off);
    const MixingAngle mix = two_level_mixing(h11, h22, off);

    AnalyticLevel lo, hi;
    lo.kind = LevelKind::doublet_minus;
    hi.kind = LevelKind::doublet_plus;
    lo.n = hi.n = n;
    lo.lam = hi.lam = m.lam;
    lo.theta = hi.theta = mix.theta;
    lo.degenerate = hi.degenerate = mix.degenerate;
    lo.energy = mean - rad;
    hi.energy = mean + rad;
    lo.label = level_label(LevelKind::doublet_minus, n);
    hi.label = level_label(LevelKind::doublet_plus, n);
    out.push_back(lo);
    out.push_back(hi);
  }

  std::stable_sort(out.begin(), out.end(), [](const AnalyticLevel& a, const AnalyticLevel& b) {
    if (a.label.parity != b.label.parity) return a.label.parity < b.label.parity;
    return a.label.index < b.label.index;
  });
  return out;
}

}  // namespace anirabi
