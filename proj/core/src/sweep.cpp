#include "anirabi/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "anirabi/analytic.hpp"
#include "anirabi/errors.hpp"
#include "anirabi/observables.hpp"
#include "anirabi/oracle.hpp"
#include "anirabi/version.hpp"

namespace anirabi {

const char* to_string(GPrimeRule rule) {
  switch (rule) {
    case GPrimeRule::ratio: return "ratio";
    case GPrimeRule::fixed: return "fixed";
    case GPrimeRule::independent: return "independent";
  }
  return "?";
}

const char* to_string(SweepMethod method) {
  switch (method) {
    case SweepMethod::analytic: return "analytic";
    case SweepMethod::numeric: return "numeric";
    case SweepMethod::both: return "both";
  }
  return "?";
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_axis(const AxisSpec& ax, const char* name) {
  if (!(ax.min >= 0.0) || !(ax.max >= ax.min)) {
    throw std::invalid_argument(std::string("SweepConfig: bad ") + name + " range");
  }
  if (ax.steps < 1 || (ax.steps == 1 && ax.max != ax.min)) {
    throw std::invalid_argument(std::string("SweepConfig: bad ") + name + " step count");
  }
}

double axis_value(const AxisSpec& ax, int i) {
  if (ax.steps == 1) return ax.min;
  return ax.min + (ax.max - ax.min) * (double(i) / (ax.steps - 1));
}

void write_header(std::ostream& os, const char* op, const SweepConfig& cfg) {
  os << "# anirabi v" << kVersion << "\n";
  os << "# op=" << op << "\n";
  os << "# omega=" << fmt(cfg.omega) << "\n";
  os << "# Omega=" << fmt(cfg.Omega) << "\n";
  os << "# g_min=" << fmt(cfg.g_axis.min) << "\n";
  os << "# g_max=" << fmt(cfg.g_axis.max) << "\n";
  os << "# g_steps=" << cfg.g_axis.steps << "\n";
  os << "# gprime_rule=" << to_string(cfg.rule) << "\n";
  switch (cfg.rule) {
    case GPrimeRule::ratio:
      os << "# gprime_ratio=" << fmt(cfg.gprime_ratio) << "\n";
      break;
    case GPrimeRule::fixed:
      os << "# gprime=" << fmt(cfg.gprime_fixed) << "\n";
      break;
    case GPrimeRule::independent:
      os << "# gprime_min=" << fmt(cfg.gprime_axis.min) << "\n";
      os << "# gprime_max=" << fmt(cfg.gprime_axis.max) << "\n";
      os << "# gprime_steps=" << cfg.gprime_axis.steps << "\n";
      break;
  }
  os << "# n_levels=" << cfg.n_levels << "\n";
  os << "# n_max=" << cfg.n_max << "\n";
  os << "# method=" << to_string(cfg.method) << "\n";
}

// Parameter points of the configured grid, g-major then gprime.
std::vector<ModelParams> grid_points(const SweepConfig& cfg) {
  std::vector<ModelParams> pts;
  for (int i = 0; i < cfg.g_axis.steps; ++i) {
    const double g = axis_value(cfg.g_axis, i);
    switch (cfg.rule) {
      case GPrimeRule::ratio:
        pts.emplace_back(cfg.omega, cfg.Omega, g, cfg.gprime_ratio * g);
        break;
      case GPrimeRule::fixed:
        pts.emplace_back(cfg.omega, cfg.Omega, g, cfg.gprime_fixed);
        break;
      case GPrimeRule::independent:
        for (int j = 0; j < cfg.gprime_axis.steps; ++j) {
          pts.emplace_back(cfg.omega, cfg.Omega, g, axis_value(cfg.gprime_axis, j));
        }
        break;
    }
  }
  return pts;
}

// Structural label set for n_levels: ground plus doublets 1..n_levels/2,
// dropping the top plus-branch when n_levels is even.  Sorted by
// (parity, index) like the analytic spectrum.
struct LabeledKind {
  LevelKind kind;
  int n;
  LevelLabel label;
};

std::vector<LabeledKind> level_set(int n_levels) {
  std::vector<LabeledKind> set;
  set.push_back({LevelKind::ground, 0, level_label(LevelKind::ground, 0)});
  const int n_doublets = n_levels / 2;
  for (int n = 1; n <= n_doublets; ++n) {
    set.push_back({LevelKind::doublet_minus, n, level_label(LevelKind::doublet_minus, n)});
    if (!(n == n_doublets && n_levels % 2 == 0)) {
      set.push_back({LevelKind::doublet_plus, n, level_label(LevelKind::doublet_plus, n)});
    }
  }
  std::stable_sort(set.begin(), set.end(), [](const LabeledKind& a, const LabeledKind& b) {
    if (a.label.parity != b.label.parity) return a.label.parity < b.label.parity;
    return a.label.index < b.label.index;
  });
  return set;
}

double labeled_energy(const ParityEigenvalues& ev, const LevelLabel& label) {
  return label.parity > 0 ? ev.plus[label.index] : ev.minus[label.index];
}

}  // namespace

void validate(const SweepConfig& cfg) {
  if (!(cfg.omega > 0.0)) throw std::invalid_argument("SweepConfig: omega must be > 0");
  if (!(cfg.Omega >= 0.0)) throw std::invalid_argument("SweepConfig: Omega must be >= 0");
  check_axis(cfg.g_axis, "g");
  if (cfg.rule == GPrimeRule::independent) check_axis(cfg.gprime_axis, "gprime");
  if (cfg.rule == GPrimeRule::ratio && !(cfg.gprime_ratio >= 0.0)) {
    throw std::invalid_argument("SweepConfig: gprime_ratio must be >= 0");
  }
  if (cfg.rule == GPrimeRule::fixed && !(cfg.gprime_fixed >= 0.0)) {
    throw std::invalid_argument("SweepConfig: gprime must be >= 0");
  }
  if (cfg.n_levels < 1) throw std::invalid_argument("SweepConfig: n_levels must be >= 1");
  if (cfg.n_max < 8 || cfg.n_max > 511) throw std::invalid_argument("SweepConfig: n_max must be in [8, 511]");
  if (cfg.n_levels > cfg.n_max) throw std::invalid_argument("SweepConfig: n_levels must be <= n_max");
}

SweepStats run_spectrum_sweep(const SweepConfig& cfg, std::ostream& os) {
  validate(cfg);
  if (cfg.rule == GPrimeRule::independent) {
    throw std::invalid_argument("spectrum sweep: gprime rule must be ratio or fixed");
  }
  write_header(os, "spectrum", cfg);
  os << "g,gprime,label_n0,label_n1,E_analytic,E_numeric,abs_error,regime_ok\n";

  const std::vector<LabeledKind> labels = level_set(cfg.n_levels);
  const bool want_analytic = cfg.method != SweepMethod::numeric;
  const bool want_numeric = cfg.method != SweepMethod::analytic;
  const TruncatedSpace space{cfg.n_max};

  SweepStats stats;
  for (const ModelParams& p : grid_points(cfg)) {
    ++stats.points_total;

    std::vector<AnalyticLevel> analytic;
    bool regime_ok = true;
    if (want_analytic) {
      try {
        analytic = spectrum(p, std::max(1, cfg.n_levels / 2));
      } catch (const NoRootInUnitInterval&) {
        regime_ok = false;
        ++stats.points_failed;
      }
    }
    ParityEigenvalues ev;
    if (want_numeric) ev = parity_eigenvalues(p, space);

    for (const LabeledKind& lk : labels) {
      os << fmt(p.g) << ',' << fmt(p.gprime) << ',' << lk.label.parity << ',' << lk.label.index << ',';
      double ea = 0.0;
      bool have_a = false;
      if (want_analytic && regime_ok) {
        for (const AnalyticLevel& lvl : analytic) {
          if (lvl.label.parity == lk.label.parity && lvl.label.index == lk.label.index) {
            ea = lvl.energy;
            have_a = true;
            break;
          }
        }
      }
      if (have_a) os << fmt(ea);
      os << ',';
      double en = 0.0;
      if (want_numeric) {
        en = labeled_energy(ev, lk.label);
        os << fmt(en);
      }
      os << ',';
      if (have_a && want_numeric) os << fmt(std::abs(ea - en));
      os << ',' << (regime_ok ? 1 : 0) << "\n";
    }
  }
  return stats;
}

SweepStats run_lambda_surface(const SweepConfig& cfg, std::ostream& os) {
  validate(cfg);
  if (cfg.rule != GPrimeRule::independent) {
    throw std::invalid_argument("lambda surface: gprime rule must be independent");
  }
  write_header(os, "lambda-surface", cfg);
  os << "g,gprime,lambda1,residual,in_regime\n";

  SweepStats stats;
  for (const ModelParams& p : grid_points(cfg)) {
    ++stats.points_total;
    os << fmt(p.g) << ',' << fmt(p.gprime) << ',';
    try {
      const LambdaSolution sol = solve_lambda(p, 1);
      os << fmt(sol.lam) << ',' << fmt(sol.residual) << ',' << (sol.lam <= 0.5 ? 1 : 0) << "\n";
    } catch (const NoRootInUnitInterval&) {
      ++stats.points_failed;
      os << ",,0\n";
    }
  }
  return stats;
}

SweepStats run_bloch_siegert_surface(const SweepConfig& cfg, std::ostream& os) {
  validate(cfg);
  if (cfg.rule != GPrimeRule::independent) {
    throw std::invalid_argument("bloch-siegert surface: gprime rule must be independent");
  }
  write_header(os, "bloch-siegert", cfg);
  os << "g,gprime,abs_delta_analytic,abs_delta_numeric,abs_error,lambda1,in_regime\n";

  const bool want_analytic = cfg.method != SweepMethod::numeric;
  const bool want_numeric = cfg.method != SweepMethod::analytic;
  const TruncatedSpace space{cfg.n_max};

  SweepStats stats;
  for (const ModelParams& p : grid_points(cfg)) {
    ++stats.points_total;

    double delta_a = 0.0, lam = 0.0;
    bool regime_ok = true;
    try {
      lam = solve_lambda(p, 1).lam;
      if (want_analytic) delta_a = bloch_siegert_shift(p);
    } catch (const NoRootInUnitInterval&) {
      regime_ok = false;
      ++stats.points_failed;
    }

    double delta_n = 0.0;
    if (want_numeric) {
      const ParityEigenvalues ev = parity_eigenvalues(p, space);
      const double jc_gap = jc_doublet_energies(p, 1).first - jc_ground_energy(p);
      delta_n = (ev.plus[0] - ev.minus[0]) - jc_gap;
    }

    os << fmt(p.g) << ',' << fmt(p.gprime) << ',';
    if (want_analytic && regime_ok) os << fmt(std::abs(delta_a));
    os << ',';
    if (want_numeric) os << fmt(std::abs(delta_n));
    os << ',';
    if (want_analytic && want_numeric && regime_ok) os << fmt(std::abs(std::abs(delta_a) - std::abs(delta_n)));
    os << ',';
    if (regime_ok) os << fmt(lam);
    os << ',' << ((regime_ok && lam <= 0.6) ? 1 : 0) << "\n";
  }
  return stats;
}

SweepStats run_observables(const SweepConfig& cfg, std::ostream& os) {
  validate(cfg);
  write_header(os, "observables", cfg);
  os << "g,gprime,lambda1,mean_photons,sigma_z,polariton_mean,polariton_var,"
        "mean_photons_num,sigma_z_num,polariton_mean_num,polariton_var_num\n";

  const bool want_analytic = cfg.method != SweepMethod::numeric;
  const bool want_numeric = cfg.method != SweepMethod::analytic;
  const TruncatedSpace space{cfg.n_max};

  SweepStats stats;
  for (const ModelParams& p : grid_points(cfg)) {
    ++stats.points_total;

    double lam = 0.0;
    bool regime_ok = true;
    ObservableSet a;
    try {
      lam = solve_lambda(p, 1).lam;
      if (want_analytic) a = ground_observables_for_lambda(lam);
    } catch (const NoRootInUnitInterval&) {
      regime_ok = false;
      ++stats.points_failed;
    }

    os << fmt(p.g) << ',' << fmt(p.gprime) << ',';
    if (regime_ok) os << fmt(lam);
    os << ',';
    if (want_analytic && regime_ok) {
      os << fmt(a.mean_photons) << ',' << fmt(a.sigma_z) << ',' << fmt(*a.polariton_mean) << ','
         << fmt(*a.polariton_var);
    } else {
      os << ",,,";
    }
    os << ',';
    if (want_numeric) {
      const GroundState gs = oracle_ground_state(p, space);
      const double mp = expectation(gs.amplitudes, DiagonalObservable::photon_number);
      const double sz = expectation(gs.amplitudes, DiagonalObservable::sigma_z);
      const double pm = expectation(gs.amplitudes, DiagonalObservable::polariton_number);
      const double p2 = expectation(gs.amplitudes, DiagonalObservable::polariton_number_squared);
      os << fmt(mp) << ',' << fmt(sz) << ',' << fmt(pm) << ',' << fmt(p2 - pm * pm);
    } else {
      os << ",,,";
    }
    os << "\n";
  }
  return stats;
}

SweepStats run_compare(const ModelParams& p, int n_levels, int n_max, std::ostream& os) {
  if (n_levels < 1) throw std::invalid_argument("compare: n_levels must be >= 1");
  if (n_max < 8 || n_max > 511) throw std::invalid_argument("compare: n_max must be in [8, 511]");

  os << "# anirabi v" << kVersion << "\n";
  os << "# op=compare\n";
  os << "# omega=" << fmt(p.omega) << "\n";
  os << "# Omega=" << fmt(p.Omega) << "\n";
  os << "# g=" << fmt(p.g) << "\n";
  os << "# gprime=" << fmt(p.gprime) << "\n";
  os << "# n_levels=" << n_levels << "\n";
  os << "# n_max=" << n_max << "\n";

  const TruncatedSpace space{n_max};
  const ParityEigenvalues ev = parity_eigenvalues(p, space);

  bool regime_ok = true;
  std::vector<AnalyticLevel> analytic;
  try {
    analytic = spectrum(p, std::max(1, n_levels / 2));
    os << "# lambda1=" << fmt(solve_lambda(p, 1).lam) << "\n";
    os << "# delta_analytic=" << fmt(bloch_siegert_shift(p)) << "\n";
    const ObservableSet ga = ground_observables(p);
    os << "# ground_mean_photons=" << fmt(ga.mean_photons) << "\n";
    os << "# ground_sigma_z=" << fmt(ga.sigma_z) << "\n";
    os << "# ground_polariton_mean=" << fmt(*ga.polariton_mean) << "\n";
    os << "# ground_polariton_var=" << fmt(*ga.polariton_var) << "\n";
  } catch (const NoRootInUnitInterval&) {
    regime_ok = false;
    os << "# regime=exceeded (no displacement root on [0,1))\n";
  }
  const double jc_gap = jc_doublet_energies(p, 1).first - jc_ground_energy(p);
  os << "# delta_numeric=" << fmt((ev.plus[0] - ev.minus[0]) - jc_gap) << "\n";
  const GroundState gs = oracle_ground_state(p, space);
  os << "# ground_mean_photons_num=" << fmt(expectation(gs.amplitudes, DiagonalObservable::photon_number)) << "\n";
  os << "# ground_sigma_z_num=" << fmt(expectation(gs.amplitudes, DiagonalObservable::sigma_z)) << "\n";

  os << "label_n0,label_n1,E_analytic,E_numeric,abs_error,regime_ok\n";
  for (const LabeledKind& lk : level_set(n_levels)) {
    os << lk.label.parity << ',' << lk.label.index << ',';
    double ea = 0.0;
    bool have_a = false;
    if (regime_ok) {
      for (const AnalyticLevel& lvl : analytic) {
        if (lvl.label.parity == lk.label.parity && lvl.label.index == lk.label.index) {
          ea = lvl.energy;
          have_a = true;
          break;
        }
      }
    }
    if (have_a) os << fmt(ea);
    os << ',';
    const double en = labeled_energy(ev, lk.label);
    os << fmt(en) << ',';
    if (have_a) os << fmt(std::abs(ea - en));
    os << ',' << (regime_ok ? 1 : 0) << "\n";
  }

  SweepStats stats;
  stats.points_total = 1;
  stats.points_failed = regime_ok ? 0 : 1;
  return stats;
}

}  // namespace anirabi
