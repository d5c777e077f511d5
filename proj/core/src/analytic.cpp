#include "anirabi/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anirabi/errors.hpp"
#include "anirabi/special_functions.hpp"

namespace anirabi {

LevelLabel level_label(LevelKind kind, int n) {
  if (kind == LevelKind::ground) return {-1, 0};
  const int parity = (n % 2 == 0) ? -1 : +1;
  return {parity, kind == LevelKind::doublet_minus ? n - 1 : n};
}

MixingAngle two_level_mixing(double h11, double h22, double off) {
  if (h11 == h22 && off == 0.0) return {std::atan(1.0), true};  // pi/4
  const double mean = 0.5 * (h11 + h22);
  const double half = 0.5 * (h11 - h22);
  const double rad = std::hypot(half, off);
  const double lower = mean - rad;
  // Eigenvector of the lower eigenvalue; pick the better-conditioned form.
  double x, y;
  if (h11 - lower >= h22 - lower) {
    x = off;
    y = lower - h11;
  } else {
    x = lower - h22;
    y = off;
  }
  if (x == 0.0 && y == 0.0) {  // off == 0: block already diagonal
    if (h11 <= h22) {
      x = 1.0;
      y = 0.0;
    } else {
      x = 0.0;
      y = 1.0;
    }
  }
  // Normalize the sign so theta lands in (-pi/2, pi/2].
  if (x < 0.0 || (x == 0.0 && y < 0.0)) {
    x = -x;
    y = -y;
  }
  if (x == 0.0) return {std::atan(1.0) * 2.0, false};  // pi/2
  return {std::atan2(y, x), false};
}

namespace {

struct DoubletBlock {
  double h11, h22, off;
  double lam;
};

DoubletBlock doublet_block(const ModelParams& p, int n) {
  const LambdaSolution sol = solve_lambda(p, n);
  const double lam = sol.lam;
  const double shift = p.omega * lam * lam - 2.0 * p.g1() * lam;
  DoubletBlock b;
  b.lam = lam;
  b.h11 = (n - 1) * p.omega + shift + coeff_G(p, lam, n - 1);
  b.h22 = n * p.omega + shift - coeff_G(p, lam, n);
  b.off = 2.0 * coeff_R(p, lam, n);
  return b;
}

}  // namespace

AnalyticLevel ground_energy(const ModelParams& p) {
  const double lam = solve_lambda(p, 1).lam;
  const double e2 = std::exp(-2.0 * lam * lam);
  AnalyticLevel level;
  level.kind = LevelKind::ground;
  level.n = 0;
  level.lam = lam;
  level.energy = p.omega * lam * lam - 2.0 * p.g1() * lam - p.Omega * e2 - 2.0 * p.g2() * lam * e2;
  level.label = level_label(LevelKind::ground, 0);
  return level;
}

std::pair<AnalyticLevel, AnalyticLevel> doublet_energies(const ModelParams& p, int n) {
  if (n < 1) throw std::domain_error("doublet_energies: n must be >= 1");
  const DoubletBlock b = doublet_block(p, n);
  const double mean = 0.5 * (b.h11 + b.h22);
  const double rad = std::hypot(0.5 * (b.h11 - b.h22), b.off);
  const MixingAngle mix = two_level_mixing(b.h11, b.h22, b.off);

  AnalyticLevel lo, hi;
  lo.kind = LevelKind::doublet_minus;
  hi.kind = LevelKind::doublet_plus;
  lo.n = hi.n = n;
  lo.lam = hi.lam = b.lam;
  lo.theta = hi.theta = mix.theta;
  lo.degenerate = hi.degenerate = mix.degenerate;
  lo.energy = mean - rad;
  hi.energy = mean + rad;
  lo.label = level_label(LevelKind::doublet_minus, n);
  hi.label = level_label(LevelKind::doublet_plus, n);
  return {lo, hi};
}

MixingAngle mixing_angle(const ModelParams& p, int n) {
  if (n < 1) throw std::domain_error("mixing_angle: n must be >= 1");
  const DoubletBlock b = doublet_block(p, n);
  return two_level_mixing(b.h11, b.h22, b.off);
}

double WavefunctionExpansion::norm_squared() const {
  double s = 0.0;
  for (double v : up) s += v * v;
  for (double v : down) s += v * v;
  return s;
}

WavefunctionExpansion wavefunction([[maybe_unused]] const ModelParams& p, const AnalyticLevel& level, int cutoff) {
  if (cutoff < level.n + 20) throw std::invalid_argument("wavefunction: cutoff must be >= n + 20");

  // Dressed-frame components (spin, fock, amplitude).
  struct Comp {
    int spin;
    int m;
    double c;
  };
  std::vector<Comp> comps;
  if (level.kind == LevelKind::ground) {
    comps.push_back({-1, 0, 1.0});
  } else {
    const double ct = std::cos(level.theta);
    const double st = std::sin(level.theta);
    if (level.kind == LevelKind::doublet_minus) {
      comps.push_back({+1, level.n - 1, ct});
      comps.push_back({-1, level.n, st});
    } else {
      comps.push_back({+1, level.n - 1, -st});
      comps.push_back({-1, level.n, ct});
    }
  }

  // Rotate spin to the sigma_x eigenbasis, displace each branch by ∓lam,
  // rotate back.  |±x> = (|+z> ± |-z>)/sqrt(2).
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  WavefunctionExpansion out;
  out.cutoff = cutoff;
  out.up.assign(cutoff + 1, 0.0);
  out.down.assign(cutoff + 1, 0.0);
  for (int big_n = 0; big_n <= cutoff; ++big_n) {
    double plus_x = 0.0, minus_x = 0.0;
    for (const Comp& c : comps) {
      const double cx_plus = inv_sqrt2 * c.c;
      const double cx_minus = inv_sqrt2 * (c.spin > 0 ? c.c : -c.c);
      plus_x += displaced_fock_element(big_n, c.m, -level.lam) * cx_plus;
      minus_x += displaced_fock_element(big_n, c.m, +level.lam) * cx_minus;
    }
    out.up[big_n] = inv_sqrt2 * (plus_x + minus_x);
    out.down[big_n] = inv_sqrt2 * (plus_x - minus_x);
  }

  const double deficit = std::abs(1.0 - out.norm_squared());
  if (deficit > 1e-8) {
    throw CutoffTooSmall("wavefunction: norm deficit beyond cutoff exceeds 1e-8", deficit);
  }
  return out;
}

std::vector<AnalyticLevel> spectrum(const ModelParams& p, int n_doublets) {
  if (n_doublets < 1) throw std::domain_error("spectrum: n_doublets must be >= 1");
  std::vector<AnalyticLevel> out;
  out.reserve(2 * n_doublets + 1);
  out.push_back(ground_energy(p));
  for (int n = 1; n <= n_doublets; ++n) {
    const auto [lo, hi] = doublet_energies(p, n);
    out.push_back(lo);
    out.push_back(hi);
  }
  std::stable_sort(out.begin(), out.end(), [](const AnalyticLevel& a, const AnalyticLevel& b) {
    if (a.label.parity != b.label.parity) return a.label.parity < b.label.parity;
    return a.label.index < b.label.index;
  });
  return out;
}

double jc_ground_energy(const ModelParams& p) { return -p.Omega; }

std::pair<double, double> jc_doublet_energies(const ModelParams& p, int n) {
  if (n < 1) throw std::domain_error("jc_doublet_energies: n must be >= 1");
  const double mean = (n - 0.5) * p.omega;
  const double half = p.Omega - 0.5 * p.omega;
  const double rad = std::sqrt(half * half + p.g * p.g * n);
  return {mean - rad, mean + rad};
}

}  // namespace anirabi
