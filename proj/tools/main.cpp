// Sweep CLI: spectrum | lambda-surface | bloch-siegert | observables | compare.
// Exit codes: 0 success, 2 invalid config, 3 displacement equation failed at
// every grid point, 4 I/O error.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "anirabi/errors.hpp"
#include "anirabi/model.hpp"
#include "anirabi/sweep.hpp"
#include "anirabi/version.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 2;
constexpr int kExitRegimeFailure = 3;
constexpr int kExitIoError = 4;

struct FileConfig {
  nlohmann::json j;

  bool has(const std::string& key) const { return j.contains(key); }
  template <typename T>
  T value(const std::string& key, T fallback) const {
    return j.contains(key) ? j.at(key).get<T>() : fallback;
  }
};

// --config is honored before CLI11 runs so file values become the flag
// defaults; explicit flags then override them.
FileConfig load_file_config(int argc, char** argv) {
  std::string path;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--config" && i + 1 < argc) {
      path = argv[i + 1];
    } else if (arg.rfind("--config=", 0) == 0) {
      path = arg.substr(9);
    }
  }
  FileConfig fc;
  if (path.empty()) return fc;

  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config file unreadable: " + path);
  try {
    in >> fc.j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config file is not valid JSON: ") + e.what());
  }
  if (!fc.j.is_object()) throw std::invalid_argument("config file must hold a JSON object");

  static const std::set<std::string> known = {
      "omega", "big_omega", "g", "g_min", "g_max", "g_steps",
      "gprime", "gprime_ratio", "gprime_min", "gprime_max", "gprime_steps",
      "levels", "n_max", "method", "out"};
  for (const auto& item : fc.j.items()) {
    if (!known.count(item.key())) throw std::invalid_argument("config file: unknown key '" + item.key() + "'");
  }
  return fc;
}

anirabi::SweepMethod parse_method(const std::string& s) {
  if (s == "analytic") return anirabi::SweepMethod::analytic;
  if (s == "numeric") return anirabi::SweepMethod::numeric;
  if (s == "both") return anirabi::SweepMethod::both;
  throw std::invalid_argument("method must be analytic, numeric, or both");
}

int deliver(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    if (!std::cout.flush()) return kExitIoError;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << out_path << "\n";
    return kExitIoError;
  }
  out << body;
  out.flush();
  if (!out) {
    std::cerr << "write failed: " << out_path << "\n";
    return kExitIoError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anisotropic Rabi model solver"};
  app.set_version_flag("--version", std::string("anirabi v") + anirabi::kVersion);
  app.require_subcommand(1);

  FileConfig fc;
  try {
    fc = load_file_config(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitBadConfig;
  }

  // Flag storage, file values as defaults.
  double omega = fc.value("omega", 1.0);
  double big_omega = fc.value("big_omega", 0.3);
  double g_min = fc.value("g_min", 0.0);
  double g_max = fc.value("g_max", 0.5);
  int g_steps = fc.value("g_steps", 101);
  double gprime_ratio = fc.value("gprime_ratio", 2.0);
  double gprime_fixed = fc.value("gprime", 0.0);
  double gprime_min = fc.value("gprime_min", 0.0);
  double gprime_max = fc.value("gprime_max", 0.5);
  int gprime_steps = fc.value("gprime_steps", 101);
  int levels = fc.value("levels", 7);
  int n_max = fc.value("n_max", 120);
  std::string method_name = fc.value<std::string>("method", "both");
  std::string out_path = fc.value<std::string>("out", "");
  double cmp_g = fc.value("g", 0.1);
  std::string config_path;  // consumed by load_file_config; registered so CLI11 accepts it

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file; flags override its values");
    sub->add_option("--omega", omega, "cavity frequency");
    sub->add_option("--big-omega", big_omega, "half the qubit splitting");
    sub->add_option("--n-max", n_max, "oracle Fock cutoff");
    sub->add_option("--out", out_path, "output CSV path (default stdout)");
  };
  auto add_g_axis = [&](CLI::App* sub) {
    sub->add_option("--g-min", g_min, "g axis start");
    sub->add_option("--g-max", g_max, "g axis end");
    sub->add_option("--g-steps", g_steps, "g axis point count");
  };
  auto add_gprime_axis = [&](CLI::App* sub) {
    sub->add_option("--gprime-min", gprime_min, "gprime axis start");
    sub->add_option("--gprime-max", gprime_max, "gprime axis end");
    sub->add_option("--gprime-steps", gprime_steps, "gprime axis point count");
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method_name, "analytic | numeric | both");
  };
  auto add_levels = [&](CLI::App* sub) {
    sub->add_option("--levels", levels, "number of levels");
  };

  CLI::App* spectrum = app.add_subcommand("spectrum", "level energies along a g sweep");
  add_common(spectrum);
  add_g_axis(spectrum);
  add_levels(spectrum);
  add_method(spectrum);
  CLI::Option* sp_ratio = spectrum->add_option("--gprime-ratio", gprime_ratio, "gprime = ratio * g");
  CLI::Option* sp_fixed = spectrum->add_option("--gprime", gprime_fixed, "fixed gprime");
  sp_ratio->excludes(sp_fixed);
  sp_fixed->excludes(sp_ratio);

  CLI::App* lambda_surface = app.add_subcommand("lambda-surface", "doublet-1 displacement over a (g, gprime) grid");
  add_common(lambda_surface);
  add_g_axis(lambda_surface);
  add_gprime_axis(lambda_surface);

  CLI::App* bloch_siegert = app.add_subcommand("bloch-siegert", "counter-rotating transition shift over a (g, gprime) grid");
  add_common(bloch_siegert);
  add_g_axis(bloch_siegert);
  add_gprime_axis(bloch_siegert);
  add_method(bloch_siegert);

  CLI::App* observables = app.add_subcommand("observables", "ground-level observables along a sweep");
  add_common(observables);
  add_g_axis(observables);
  add_method(observables);
  CLI::Option* ob_ratio = observables->add_option("--gprime-ratio", gprime_ratio, "gprime = ratio * g");
  CLI::Option* ob_fixed = observables->add_option("--gprime", gprime_fixed, "fixed gprime");
  CLI::Option* ob_gpmin = observables->add_option("--gprime-min", gprime_min, "gprime axis start");
  CLI::Option* ob_gpmax = observables->add_option("--gprime-max", gprime_max, "gprime axis end");
  CLI::Option* ob_gpsteps = observables->add_option("--gprime-steps", gprime_steps, "gprime axis point count");
  ob_ratio->excludes(ob_fixed, ob_gpmin, ob_gpmax, ob_gpsteps);
  ob_fixed->excludes(ob_ratio, ob_gpmin, ob_gpmax, ob_gpsteps);

  CLI::App* compare = app.add_subcommand("compare", "single-point analytic vs numeric comparison");
  add_common(compare);
  add_levels(compare);
  compare->add_option("--g", cmp_g, "rotating coupling");
  CLI::Option* cmp_gp = compare->add_option("--gprime", gprime_fixed, "counter-rotating coupling");
  (void)cmp_gp;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadConfig;
  }

  anirabi::SweepConfig cfg;
  cfg.omega = omega;
  cfg.Omega = big_omega;
  cfg.g_axis = {g_min, g_max, g_steps};
  cfg.gprime_axis = {gprime_min, gprime_max, gprime_steps};
  cfg.gprime_ratio = gprime_ratio;
  cfg.gprime_fixed = gprime_fixed;
  cfg.n_levels = levels;
  cfg.n_max = n_max;

  std::ostringstream body;
  anirabi::SweepStats stats;
  try {
    cfg.method = parse_method(method_name);

    if (spectrum->parsed()) {
      const bool flag_fixed = sp_fixed->count() > 0;
      const bool flag_ratio = sp_ratio->count() > 0;
      if (flag_fixed) {
        cfg.rule = anirabi::GPrimeRule::fixed;
      } else if (flag_ratio) {
        cfg.rule = anirabi::GPrimeRule::ratio;
      } else if (fc.has("gprime")) {
        cfg.rule = anirabi::GPrimeRule::fixed;
      } else {
        cfg.rule = anirabi::GPrimeRule::ratio;
      }
      stats = anirabi::run_spectrum_sweep(cfg, body);
    } else if (lambda_surface->parsed()) {
      cfg.rule = anirabi::GPrimeRule::independent;
      stats = anirabi::run_lambda_surface(cfg, body);
    } else if (bloch_siegert->parsed()) {
      cfg.rule = anirabi::GPrimeRule::independent;
      stats = anirabi::run_bloch_siegert_surface(cfg, body);
    } else if (observables->parsed()) {
      const bool flag_indep = ob_gpmin->count() || ob_gpmax->count() || ob_gpsteps->count();
      if (ob_fixed->count() > 0) {
        cfg.rule = anirabi::GPrimeRule::fixed;
      } else if (ob_ratio->count() > 0) {
        cfg.rule = anirabi::GPrimeRule::ratio;
      } else if (flag_indep || fc.has("gprime_min") || fc.has("gprime_max") || fc.has("gprime_steps")) {
        cfg.rule = anirabi::GPrimeRule::independent;
      } else if (fc.has("gprime")) {
        cfg.rule = anirabi::GPrimeRule::fixed;
      } else {
        cfg.rule = anirabi::GPrimeRule::ratio;
      }
      stats = anirabi::run_observables(cfg, body);
    } else if (compare->parsed()) {
      const anirabi::ModelParams p(omega, big_omega, cmp_g, gprime_fixed);
      stats = anirabi::run_compare(p, levels, n_max, body);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const int io_status = deliver(body.str(), out_path);
  if (io_status != kExitOk) return io_status;

  if (stats.points_total > 0 && stats.points_failed == stats.points_total) return kExitRegimeFailure;
  return kExitOk;
}
