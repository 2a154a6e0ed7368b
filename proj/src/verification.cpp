#include "dunkl/verification.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>

#include <Eigen/Dense>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

using nlohmann::json;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

json rounded(const json& value, int precision) {
  if (value.is_number_float()) return round_significant(value.get<double>(), precision);
  if (value.is_object()) {
    json out = json::object();
    for (auto it = value.begin(); it != value.end(); ++it) out[it.key()] = rounded(*it, precision);
    return out;
  }
  if (value.is_array()) {
    json out = json::array();
    for (const auto& item : value) out.push_back(rounded(item, precision));
    return out;
  }
  return value;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  }
  return out;
}

std::vector<double> midpoint_angles(int count) {
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) out[static_cast<std::size_t>(j)] = (j + 0.5) * kTwoPi / count;
  return out;
}

double max_modulus(const ScalarField2D& field, const GridSpec& grid) {
  double peak = 0.0;
  for (double rho : grid.radii) {
    for (double phi : grid.angles) peak = std::max(peak, std::abs(field.at({rho, phi})));
  }
  return peak;
}

const char* branch_name(Branch branch) { return branch == Branch::Plus ? "+" : "-"; }

}  // namespace

double round_significant(double value, int precision) {
  if (!std::isfinite(value)) return value;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
  return std::strtod(buffer, nullptr);
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& r) { return r.pass; });
}

void VerificationReport::add(std::string name, json inputs, double residual, double tolerance) {
  checks.push_back({std::move(name), std::move(inputs), residual, tolerance, residual <= tolerance});
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

json VerificationReport::to_json(int precision) const {
  json list = json::array();
  for (const auto& record : checks) {
    list.push_back({{"name", record.name},
                    {"inputs", rounded(record.inputs, precision)},
                    {"residual", round_significant(record.residual, precision)},
                    {"tol", round_significant(record.tolerance, precision)},
                    {"pass", record.pass}});
  }
  return {{"suite", suite}, {"checks", std::move(list)}, {"pass", pass()}};
}

GridSpec GridSpec::standard(double length, double h) {
  return {log_spaced(0.1 * length, 4.0 * length, 12), midpoint_angles(16), h};
}

GridSpec GridSpec::circle(double h) { return {{1.0}, midpoint_angles(64), h}; }

double characteristic_length(const SpinorSolution& solution) {
  const auto& config = solution.config;
  if (solution.regime != Regime::Critical) {
    return std::sqrt(config.hbar / (config.m * std::fabs(config.omega_tilde())));
  }
  const double reduced = reduced_energy(solution.energy, config);
  return reduced > 0.0 ? 1.0 / std::sqrt(2.0 * reduced) : 1.0;
}

json describe(const AngularMode& mode) {
  return {{"sector", {mode.sector.sx, mode.sector.sy}},
          {"n", mode.n.value()},
          {"branch", branch_name(mode.branch)},
          {"mu_x", mode.params.mu_x},
          {"mu_y", mode.params.mu_y}};
}

json describe(const SpinorSolution& solution) {
  json out = describe(solution.mode);
  out["k"] = solution.quantum.k;
  out["k_prime"] = solution.quantum.k_prime;
  out["regime"] = to_string(solution.regime);
  out["omega"] = solution.config.omega;
  out["omega_c"] = solution.config.omega_c;
  out["energy"] = solution.energy;
  return out;
}

VerificationReport check_kg_eigen(const SpinorSolution& solution, const GridSpec& grid, double tol) {
  VerificationReport report{"kg", {}};
  const double reduced = reduced_energy(solution.energy, solution.config);
  const struct {
    Component component;
    const ScalarField2D* field;
    const char* name;
  } parts[] = {{Component::Upper, &solution.upper, "kg_upper"},
               {Component::Lower, &solution.lower, "kg_lower"}};
  for (const auto& part : parts) {
    const double peak = max_modulus(*part.field, grid);
    double worst = 0.0;
    if (peak > 0.0) {
      for (double rho : grid.radii) {
        for (double phi : grid.angles) {
          const PolarPoint p{rho, phi};
          const Complex applied =
              kg_apply(part.component, *part.field, solution.mode.params, solution.config, p, grid.h);
          worst = std::max(worst, std::abs(applied - reduced * part.field->at(p)));
        }
      }
      worst /= peak;
    }
    json inputs = describe(solution);
    inputs["h"] = grid.h;
    report.add(part.name, std::move(inputs), worst, tol);
  }
  return report;
}

VerificationReport check_angular_eigen(const AngularMode& mode, const GridSpec& grid, double tol) {
  VerificationReport report{"angular", {}};
  const ScalarField2D f = f_eigenfunction(mode);
  const double lambda = lambda_eigenvalue(mode);
  const double peak = max_modulus(f, grid);
  double worst = 0.0;
  for (double rho : grid.radii) {
    for (double phi : grid.angles) {
      const PolarPoint p{rho, phi};
      worst = std::max(worst, std::abs(angular_j(f, p, mode.params, grid.h) - lambda * f.at(p)));
    }
  }
  if (peak > 0.0) worst /= peak;
  json inputs = describe(mode);
  inputs["lambda"] = lambda;
  inputs["h"] = grid.h;
  report.add("angular_eigen", std::move(inputs), worst, tol);
  return report;
}

VerificationReport check_orthonormality(const std::vector<AngularMode>& modes,
                                        const QuadratureRule& rule, double tol) {
  VerificationReport report{"ortho", {}};
  if (modes.empty()) return report;
  const DunklParams params = modes.front().params;
  for (const auto& mode : modes) {
    if (mode.params.mu_x != params.mu_x || mode.params.mu_y != params.mu_y) {
      throw DomainError("check_orthonormality: all modes must share Dunkl parameters");
    }
  }
  std::vector<ScalarField2D> fields;
  fields.reserve(modes.size());
  for (const auto& mode : modes) fields.push_back(f_eigenfunction(mode));

  double worst = 0.0;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    for (std::size_t j = i; j < fields.size(); ++j) {
      const Complex g = weighted_inner_product(fields[i], fields[j], params, rule);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  }
  json mode_list = json::array();
  for (const auto& mode : modes) {
    mode_list.push_back({{"sector", {mode.sector.sx, mode.sector.sy}},
                         {"n", mode.n.value()},
                         {"branch", branch_name(mode.branch)}});
  }
  report.add("gram_identity",
             {{"mu_x", params.mu_x}, {"mu_y", params.mu_y}, {"modes", std::move(mode_list)},
              {"nodes", rule.nodes.size()}},
             worst, tol);
  return report;
}

VerificationReport check_dirac_system(const SpinorSolution& solution, const GridSpec& grid,
                                      double tol) {
  VerificationReport report{"dirac", {}};
  const auto& config = solution.config;
  const double peak = std::max(max_modulus(solution.upper, grid), max_modulus(solution.lower, grid));
  const double scale = (std::fabs(solution.energy) + config.rest_energy()) * peak;
  double first = 0.0;
  double second = 0.0;
  if (scale > 0.0) {
    for (double rho : grid.radii) {
      for (double phi : grid.angles) {
        const DiracResidual r =
            dirac_apply(solution.upper, solution.lower, solution.energy, solution.mode.params,
                        config, PolarPoint{rho, phi}.cartesian(), grid.h);
        first = std::max(first, std::abs(r.first));
        second = std::max(second, std::abs(r.second));
      }
    }
    first /= scale;
    second /= scale;
  }
  json inputs = describe(solution);
  inputs["h"] = grid.h;
  inputs["phase"] = solution.phase;
  inputs["phase_overlap"] = solution.phase_overlap;
  report.add("dirac_first", inputs, first, tol);
  report.add("dirac_second", std::move(inputs), second, tol);
  return report;
}

std::vector<double> matrix_oracle_lambda(SectorLabel sector, const DunklParams& params,
                                         int basis_size) {
  sector.validate();
  params.validate();
  if (basis_size < 1 || basis_size > 64) {
    throw DomainError("matrix_oracle_lambda: basis size must lie in [1, 64]");
  }
  struct Trig {
    int j;
    bool is_sin;
  };
  std::vector<Trig> basis;
  const int offset = sector.epsilon() == 1 ? 0 : 1;
  if (offset == 0) basis.push_back({0, false});
  for (int m = offset == 0 ? 1 : 0; static_cast<int>(basis.size()) < basis_size; ++m) {
    const int j = 2 * m + offset;
    basis.push_back({j, false});
    if (static_cast<int>(basis.size()) < basis_size) basis.push_back({j, true});
  }

  const auto size = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(size, size);
  Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(size, size);
  const QuadratureRule rule = angular_quadrature(128);
  std::vector<double> values(basis.size());
  std::vector<Complex> images(basis.size());
  for (const auto& node : rule.nodes) {
    const double phi = node.point;
    const double c = std::cos(phi);
    const double sn = std::sin(phi);
    const double w = node.weight * std::pow(std::fabs(c), 2.0 * params.mu_x) *
                     std::pow(std::fabs(sn), 2.0 * params.mu_y);
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const auto [j, is_sin] = basis[b];
      const double value = is_sin ? std::sin(j * phi) : std::cos(j * phi);
      const double slope = is_sin ? j * std::cos(j * phi) : -j * std::sin(j * phi);
      // phi -> -phi flips sin; phi -> pi - phi multiplies cos j phi by (-1)^j
      // and sin j phi by -(-1)^j.
      const double minus_ry = is_sin ? 2.0 * value : 0.0;
      const double parity_x = (j % 2 == 0 ? 1.0 : -1.0) * (is_sin ? -1.0 : 1.0);
      const double minus_rx = (1.0 - parity_x) * value;
      values[b] = value;
      images[b] = Complex{0.0, 1.0} *
                  (slope + params.mu_y * (c / sn) * minus_ry - params.mu_x * (sn / c) * minus_rx);
    }
    for (std::size_t a = 0; a < basis.size(); ++a) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const auto ia = static_cast<Eigen::Index>(a);
        const auto ib = static_cast<Eigen::Index>(b);
        h(ia, ib) += w * values[a] * images[b];
        s(ia, ib) += w * values[a] * values[b];
      }
    }
  }
  const Eigen::MatrixXcd hermitian = 0.5 * (h + h.adjoint());
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, s,
                                                                    Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw DomainError("matrix_oracle_lambda: generalized eigensolver failed");
  }
  std::vector<double> out(basis.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

double nonrelativistic_target(const AngularMode& mode, int k, const OscillatorConfig& config) {
  const Regime regime = classify_regime(config);
  if (regime == Regime::Critical) {
    throw RegimeError("non-relativistic target needs omega != omega_c / 2");
  }
  const double a = radial_order(mode);
  const double lambda = lambda_eigenvalue(mode);
  const double mu_s = mode.sector.reflection_shift(mode.params);
  if (regime == Regime::Positive) {
    return config.hbar * config.omega_tilde() * (2.0 * k + a + lambda - mu_s);
  }
  return config.hbar * config.omega_bar() * (2.0 * k + a - lambda + 2.0 + mu_s);
}

VerificationReport check_nonrelativistic_limit(const AngularMode& mode, int k,
                                               const OscillatorConfig& base_config,
                                               const std::vector<double>& c_values, double tol) {
  if (c_values.size() < 3) throw DomainError("non-relativistic limit needs at least 3 c values");
  for (std::size_t i = 1; i < c_values.size(); ++i) {
    if (!(c_values[i] > c_values[i - 1])) throw DomainError("c values must be increasing");
  }
  VerificationReport report{"nrlimit", {}};
  const double target = nonrelativistic_target(mode, k, base_config);

  std::vector<double> shifts;
  std::vector<double> log_c;
  std::vector<double> log_dev;
  for (double c : c_values) {
    OscillatorConfig config = base_config;
    config.c = c;
    const double shift = energy(Component::Upper, mode, k, config) - config.rest_energy();
    shifts.push_back(shift);
    const double deviation = std::fabs(shift - target);
    if (deviation > 0.0) {
      log_c.push_back(std::log(c));
      log_dev.push_back(std::log(deviation));
    }
  }

  json inputs = describe(mode);
  inputs["k"] = k;
  inputs["c_values"] = c_values;
  inputs["delta_e"] = shifts;
  inputs["target"] = target;

  // Least-squares slope of log |dE - target| against log c.
  double rate = 2.0;
  if (log_c.size() >= 2) {
    const double n = static_cast<double>(log_c.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < log_c.size(); ++i) {
      sx += log_c[i];
      sy += log_dev[i];
      sxx += log_c[i] * log_c[i];
      sxy += log_c[i] * log_dev[i];
    }
    rate = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  json rate_inputs = inputs;
  rate_inputs["rate"] = rate;
  report.add("nr_rate", std::move(rate_inputs), std::fabs(rate - 2.0), 0.2);

  const std::size_t last = c_values.size() - 1;
  const double c1 = c_values[last - 1] * c_values[last - 1];
  const double c2 = c_values[last] * c_values[last];
  const double limit = (c2 * shifts[last] - c1 * shifts[last - 1]) / (c2 - c1);
  const double unit = base_config.hbar * std::fabs(base_config.omega_tilde());
  inputs["limit"] = limit;
  report.add("nr_limit", std::move(inputs), std::fabs(limit - target) / std::max(std::fabs(target), unit),
             tol);
  return report;
}

std::vector<SweepEntry> bound_state_sweep(const std::vector<DunklParams>& params,
                                          const std::vector<OscillatorConfig>& configs,
                                          int n_max, int k_max) {
  static constexpr SectorLabel kSectors[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  std::vector<SweepEntry> out;
  for (const auto& config : configs) {
    const Regime regime = classify_regime(config);
    for (const auto& mu : params) {
      for (SectorLabel sector : kSectors) {
        const int first = sector.epsilon() == 1 ? 0 : 1;
        for (int twice = first; twice <= 2 * n_max; twice += 2) {
          for (Branch branch : {Branch::Plus, Branch::Minus}) {
            if (twice == 0 && branch == Branch::Minus) continue;
            const AngularMode mode{sector, AngularIndex::from_twice(twice), branch, mu};
            for (int k = 0; k <= k_max; ++k) {
              try {
                (void)pair_radial_indices(sector, regime, k, mu);
              } catch (const InvalidPairError&) {
                continue;
              }
              out.push_back({mode, k, config});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace dunkl
