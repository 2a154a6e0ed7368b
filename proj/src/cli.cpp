#include "dunkl/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dunkl/errors.hpp"
#include "dunkl/solution_builder.hpp"
#include "dunkl/verification.hpp"

namespace dunkl::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  OscillatorConfig oscillator;
  DunklParams params;
  std::string sector = "all";
  std::string n = "0..2";
  std::string branch = "both";
  int k = 0;
  std::optional<int> k_max;
  std::string format = "csv";
  int precision = 17;
  std::optional<int> threads;
  std::optional<double> tol;
  double h = kDefaultStep;
  bool negative_energies = false;
  std::string grid = "32x32";
  std::optional<double> rho_max;
  std::optional<double> energy;
  std::string suite = "all";
};

std::string number(double value, int precision) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
  return buffer;
}

std::vector<SectorLabel> parse_sectors(const std::string& text) {
  if (text == "all") return {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  int sx = 0;
  int sy = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%d,%d%c", &sx, &sy, &tail) != 2) {
    throw DomainError("--sector expects SX,SY with entries +1 or -1, or 'all'");
  }
  const SectorLabel label{sx, sy};
  label.validate();
  return {label};
}

std::pair<double, double> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const double value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {value, value};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const double a = std::stod(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const double b = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw DomainError("--n expects N or A..B");
  }
}

std::vector<Branch> parse_branches(const std::string& text) {
  if (text == "+") return {Branch::Plus};
  if (text == "-") return {Branch::Minus};
  if (text == "both") return {Branch::Plus, Branch::Minus};
  throw DomainError("--branch expects +, - or both");
}

std::vector<AngularMode> select_modes(const RunConfig& run) {
  run.params.validate();
  const auto [lo, hi] = parse_n_range(run.n);
  const int twice_lo = static_cast<int>(std::ceil(2.0 * lo - 1e-9));
  const int twice_hi = static_cast<int>(std::floor(2.0 * hi + 1e-9));
  std::vector<AngularMode> modes;
  for (SectorLabel sector : parse_sectors(run.sector)) {
    const int parity = sector.epsilon() == 1 ? 0 : 1;
    for (int twice = std::max(twice_lo, parity); twice <= twice_hi; ++twice) {
      if (twice % 2 != parity) continue;
      for (Branch branch : parse_branches(run.branch)) {
        if (twice == 0 && branch == Branch::Minus) continue;
        modes.push_back({sector, AngularIndex::from_twice(twice), branch, run.params});
      }
    }
  }
  if (modes.empty()) throw DomainError("no angular modes match --sector/--n/--branch");
  return modes;
}

int resolve_threads(const RunConfig& run) {
  if (run.threads) return std::max(1, *run.threads);
  if (const char* env = std::getenv("DUNKL_THREADS")) {
    const int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 1;
}

int k_upper(const RunConfig& run, int fallback) { return run.k_max.value_or(std::max(run.k, fallback)); }

std::string sector_text(SectorLabel s) {
  return std::string(s.sx > 0 ? "+1" : "-1") + (s.sy > 0 ? "+1" : "-1");
}

int cmd_spectrum(const RunConfig& run, std::ostream& out) {
  run.oscillator.validate();
  const auto modes = select_modes(run);
  const Regime regime = classify_regime(run.oscillator);
  if (regime == Regime::Critical) {
    out << "regime: critical (omega = omega_c / 2); no bound spectrum. "
           "Use 'wavefunction --energy E' for free-particle states.\n";
    return kExitOk;
  }
  if (!run.params.allows_spinor_pairing()) {
    throw DomainError(
        "spinor pairing needs mu_x, mu_y both in {0, 1, ...} or both in {1/2, 3/2, ...}");
  }

  struct Row {
    AngularMode mode;
    int k;
    std::optional<int> k_prime;
    std::optional<double> energy;
  };
  std::vector<Row> rows;
  std::vector<EnergySign> signs{EnergySign::Positive};
  if (run.negative_energies) signs.push_back(EnergySign::Negative);
  for (EnergySign sign : signs) {
    for (const auto& mode : modes) {
      for (int k = run.k; k <= k_upper(run, 3); ++k) {
        std::optional<int> k_prime;
        try {
          k_prime = pair_radial_indices(mode.sector, regime, k, mode.params);
        } catch (const InvalidPairError&) {
        }
        std::optional<double> e;
        try {
          e = energy(Component::Upper, mode, k, run.oscillator, sign);
        } catch (const NegativeRadicandError&) {
          if (k_prime) throw;
        }
        rows.push_back({mode, k, k_prime, e});
      }
    }
  }

  const int p = run.precision;
  if (run.format == "json") {
    json list = json::array();
    for (const auto& row : rows) {
      list.push_back({{"sector", {row.mode.sector.sx, row.mode.sector.sy}},
                      {"n", row.mode.n.value()},
                      {"branch", row.mode.branch == Branch::Plus ? "+" : "-"},
                      {"k", row.k},
                      {"k_prime", row.k_prime ? json(*row.k_prime) : json(nullptr)},
                      {"energy", row.energy ? json(round_significant(*row.energy, p)) : json(nullptr)},
                      {"regime", to_string(regime)},
                      {"status", row.k_prime ? "ok" : "invalid_pair"}});
    }
    out << json{{"regime", to_string(regime)}, {"rows", std::move(list)}}.dump(2) << '\n';
    return kExitOk;
  }
  out << "sector,n,branch,k,k_prime,energy,regime,status\n";
  for (const auto& row : rows) {
    out << sector_text(row.mode.sector) << ',' << number(row.mode.n.value(), p) << ','
        << (row.mode.branch == Branch::Plus ? '+' : '-') << ',' << row.k << ','
        << (row.k_prime ? std::to_string(*row.k_prime) : std::string()) << ','
        << (row.energy ? number(*row.energy, p) : std::string()) << ',' << to_string(regime) << ','
        << (row.k_prime ? "ok" : "invalid_pair") << '\n';
  }
  return kExitOk;
}

SpinorSolution build_state(const AngularMode& mode, int k, const RunConfig& run) {
  if (classify_regime(run.oscillator) == Regime::Critical) {
    const double rest = run.oscillator.rest_energy();
    return free_particle(mode, run.energy.value_or(2.0 * rest), run.oscillator);
  }
  return build_spinor(mode, k, run.oscillator);
}

int cmd_wavefunction(const RunConfig& run, std::ostream& out) {
  run.oscillator.validate();
  const auto modes = select_modes(run);
  if (modes.size() != 1) {
    throw DomainError("wavefunction needs a single mode: set --sector, --n and --branch");
  }
  int n_rho = 0;
  int n_phi = 0;
  char tail = 0;
  if (std::sscanf(run.grid.c_str(), "%dx%d%c", &n_rho, &n_phi, &tail) != 2 || n_rho < 1 ||
      n_phi < 1) {
    throw DomainError("--grid expects NRxNPHI with positive counts");
  }
  const Regime regime = classify_regime(run.oscillator);
  if (regime == Regime::Critical && !run.energy) {
    throw RegimeError("critical regime: free-particle states need --energy");
  }
  const SpinorSolution state = build_state(modes.front(), run.k, run);
  const double rho_max = run.rho_max.value_or(4.0 * characteristic_length(state));
  if (!(rho_max > 0.0)) throw DomainError("--rho-max must be positive");

  const int p = run.precision;
  out << "rho,phi,re_upper,im_upper,re_lower,im_lower\n";
  for (int i = 0; i < n_rho; ++i) {
    const double rho = rho_max * (i + 1) / n_rho;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      const Complex u = state.upper.at({rho, phi});
      const Complex l = state.lower.at({rho, phi});
      out << number(rho, p) << ',' << number(phi, p) << ',' << number(u.real(), p) << ','
          << number(u.imag(), p) << ',' << number(l.real(), p) << ',' << number(l.imag(), p)
          << '\n';
    }
  }
  return kExitOk;
}

VerificationReport verify_states(const RunConfig& run, const std::vector<AngularMode>& modes,
                                 bool dirac, double tol) {
  const Regime regime = classify_regime(run.oscillator);
  struct Job {
    AngularMode mode;
    int k;
  };
  std::vector<Job> jobs;
  for (const auto& mode : modes) {
    if (regime == Regime::Critical) {
      jobs.push_back({mode, 0});
      continue;
    }
    for (int k = run.k; k <= k_upper(run, 2); ++k) {
      try {
        (void)pair_radial_indices(mode.sector, regime, k, mode.params);
      } catch (const InvalidPairError&) {
        continue;
      }
      jobs.push_back({mode, k});
    }
  }
  const auto reports = parallel_map(jobs.size(), resolve_threads(run), [&](std::size_t i) {
    const SpinorSolution state = build_state(jobs[i].mode, jobs[i].k, run);
    const GridSpec grid = GridSpec::standard(characteristic_length(state), run.h);
    return dirac ? check_dirac_system(state, grid, tol) : check_kg_eigen(state, grid, tol);
  });
  VerificationReport report{dirac ? "dirac" : "kg", {}};
  for (const auto& r : reports) report.append(r);
  return report;
}

VerificationReport run_suite(const std::string& suite, const RunConfig& run) {
  const auto modes = select_modes(run);
  const Regime regime = classify_regime(run.oscillator);
  auto tol_or = [&run](double fallback) { return run.tol.value_or(fallback); };

  if (suite == "kg") return verify_states(run, modes, false, tol_or(1e-5));
  if (suite == "dirac") return verify_states(run, modes, true, tol_or(1e-4));
  if (suite == "angular") {
    const auto reports = parallel_map(modes.size(), resolve_threads(run), [&](std::size_t i) {
      return check_angular_eigen(modes[i], GridSpec::circle(run.h), tol_or(1e-6));
    });
    VerificationReport report{"angular", {}};
    for (const auto& r : reports) report.append(r);
    return report;
  }
  if (suite == "ortho") {
    VerificationReport report{"ortho", {}};
    for (SectorLabel sector : parse_sectors(run.sector)) {
      std::vector<AngularMode> group;
      for (const auto& mode : modes) {
        if (mode.sector == sector) group.push_back(mode);
      }
      if (!group.empty()) {
        report.append(check_orthonormality(group, angular_quadrature(64), tol_or(1e-8)));
      }
    }
    return report;
  }
  if (suite == "nrlimit") {
    if (regime == Regime::Critical) {
      throw RegimeError("nrlimit needs a bound-state regime (omega != omega_c / 2)");
    }
    VerificationReport report{"nrlimit", {}};
    const double c = run.oscillator.c;
    for (const auto& mode : modes) {
      for (int k = run.k; k <= k_upper(run, 2); ++k) {
        report.append(check_nonrelativistic_limit(mode, k, run.oscillator,
                                                  {10.0 * c, 100.0 * c, 1000.0 * c}, tol_or(1e-8)));
      }
    }
    return report;
  }
  if (suite == "all") {
    VerificationReport report{"all", {}};
    for (const char* part : {"angular", "ortho", "kg", "dirac", "nrlimit"}) {
      if (regime == Regime::Critical && std::string(part) == "nrlimit") continue;
      report.append(run_suite(part, run));
    }
    return report;
  }
  throw DomainError("unknown suite '" + suite + "' (kg, angular, ortho, dirac, nrlimit, all)");
}

int cmd_verify(const RunConfig& run, std::ostream& out) {
  run.oscillator.validate();
  VerificationReport report = run_suite(run.suite, run);
  report.suite = run.suite;
  out << report.to_json(run.precision).dump(2) << '\n';
  return report.pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Spectra, eigenstates and numerical verification for the Dirac-Dunkl oscillator "
               "in a uniform magnetic field",
               "dunkl_oscillator"};
  app.set_help_flag("--help", "print this help message and exit");
  app.require_subcommand(1);

  app.add_option("--mu-x", cfg.params.mu_x, "Dunkl parameter mu_x (>= -1/2)");
  app.add_option("--mu-y", cfg.params.mu_y, "Dunkl parameter mu_y (>= -1/2)");
  app.add_option("--omega", cfg.oscillator.omega, "oscillator frequency");
  app.add_option("--omega-c", cfg.oscillator.omega_c, "cyclotron frequency");
  app.add_option("--m", cfg.oscillator.m, "mass");
  app.add_option("--hbar", cfg.oscillator.hbar, "reduced Planck constant");
  app.add_option("--c", cfg.oscillator.c, "speed of light");
  app.add_option("--sector", cfg.sector, "reflection sector SX,SY or 'all'");
  app.add_option("--n", cfg.n, "angular index N or range A..B");
  app.add_option("--branch", cfg.branch, "sign of lambda: +, - or both");
  app.add_option("--k", cfg.k, "radial index (first index of ranges)")->check(CLI::NonNegativeNumber);
  app.add_option("--k-max", cfg.k_max, "last radial index of ranges")->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "spectrum output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--precision", cfg.precision, "significant digits of printed floats")
      ->check(CLI::Range(6, 17));
  app.add_option("--threads", cfg.threads, "worker threads (default: $DUNKL_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "residual tolerance for verify");
  app.add_option("--h", cfg.h, "finite-difference step")->check(CLI::PositiveNumber);
  app.add_flag("--negative-energies", cfg.negative_energies, "include the E < 0 branch");

  auto* spectrum = app.add_subcommand("spectrum", "tabulate bound-state energies");
  spectrum->fallthrough();
  auto* wavefunction = app.add_subcommand("wavefunction", "sample a spinor on a polar grid (CSV)");
  wavefunction->fallthrough();
  wavefunction->add_option("--grid", cfg.grid, "NRxNPHI sample counts");
  wavefunction->add_option("--rho-max", cfg.rho_max, "largest sampled radius");
  wavefunction->add_option("--energy", cfg.energy, "free-particle energy (critical regime)");
  auto* verify = app.add_subcommand("verify", "run a verification suite (JSON report)");
  verify->fallthrough();
  verify->add_option("suite", cfg.suite, "kg, angular, ortho, dirac, nrlimit or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(cfg, out);
    if (wavefunction->parsed()) return cmd_wavefunction(cfg, out);
    return cmd_verify(cfg, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const RegimeError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InvalidPairError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const NegativeRadicandError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitConfigError;
}

}  // namespace dunkl::cli
