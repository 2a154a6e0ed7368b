#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "dunkl/angular_sector.hpp"
#include "dunkl/dunkl_calculus.hpp"
#include "dunkl/oscillator.hpp"
#include "dunkl/quadrature.hpp"
#include "dunkl/solution_builder.hpp"

namespace dunkl {

/// value printed with `precision` significant digits and parsed back.
double round_significant(double value, int precision);

struct CheckRecord {
  std::string name;
  nlohmann::json inputs = nlohmann::json::object();
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckRecord> checks;

  /// True iff every record passes (vacuously true when empty).
  bool pass() const;
  void add(std::string name, nlohmann::json inputs, double residual, double tolerance);
  void append(const VerificationReport& other);
  /// {suite, checks: [{name, inputs, residual, tol, pass}], pass}; floating
  /// values rounded to `precision` significant digits.
  nlohmann::json to_json(int precision = 17) const;
};

/// Sample points for residual checks: every (radius, angle) pair.
struct GridSpec {
  std::vector<double> radii;
  std::vector<double> angles;
  double h = kDefaultStep;

  /// 12 radii log-spaced in [0.1, 4] * length, 16 angles (j + 1/2) 2pi / 16.
  static GridSpec standard(double length, double h = kDefaultStep);
  /// Unit circle, 64 angles (j + 1/2) 2pi / 64.
  static GridSpec circle(double h = kDefaultStep);
};

/// Oscillator length sqrt(hbar / (m |w~|)) for bound states, 1 / sqrt(2 E~)
/// for free states.
double characteristic_length(const SpinorSolution& solution);

nlohmann::json describe(const AngularMode& mode);
nlohmann::json describe(const SpinorSolution& solution);

/// max |KG[psi] - E~ psi| / max |psi| per component.
VerificationReport check_kg_eigen(const SpinorSolution& solution, const GridSpec& grid, double tol);

/// max |J F - lambda F| / max |F| over the grid.
VerificationReport check_angular_eigen(const AngularMode& mode, const GridSpec& grid, double tol);

/// max |G - I| for the angular Gram matrix. All modes must share Dunkl
/// parameters.
VerificationReport check_orthonormality(const std::vector<AngularMode>& modes,
                                        const QuadratureRule& rule, double tol);

/// Both first-order equations, each as max |r| / ((|E| + mc^2) max |psi|).
VerificationReport check_dirac_system(const SpinorSolution& solution, const GridSpec& grid,
                                      double tol);

/// Sorted eigenvalues of J in the first `basis_size` functions of
/// {1, cos 2phi, sin 2phi, ...} (eps = +1) or {cos phi, sin phi, cos 3phi, ...}
/// (eps = -1), from the generalized problem H c = lambda S c.
std::vector<double> matrix_oracle_lambda(SectorLabel sector, const DunklParams& params,
                                         int basis_size);

/// Leading term of E - mc^2 as c -> infinity for the upper component.
double nonrelativistic_target(const AngularMode& mode, int k, const OscillatorConfig& config);

/// Records the fitted convergence rate of E(c) - mc^2 - target against 2
/// (tolerance 0.2) and the relative error of the Richardson limit from the two
/// largest c values against the target (tolerance `tol`).
VerificationReport check_nonrelativistic_limit(const AngularMode& mode, int k,
                                               const OscillatorConfig& base_config,
                                               const std::vector<double>& c_values, double tol);

struct SweepEntry {
  AngularMode mode;
  int k = 0;
  OscillatorConfig config;
};

/// Every valid bound state over 4 sectors x the given configs x n <= n_max
/// x k <= k_max x both branches, skipping invalid pairs, in a fixed order.
std::vector<SweepEntry> bound_state_sweep(const std::vector<DunklParams>& params,
                                          const std::vector<OscillatorConfig>& configs,
                                          int n_max, int k_max);

/// Applies fn to 0..count-1 on up to `threads` threads; results keep index
/// order. The first exception (by index) is rethrown.
template <class Fn>
auto parallel_map(std::size_t count, int threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using Result = decltype(fn(std::size_t{}));
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(threads > 0 ? threads : 1, count));
  auto run = [&](std::size_t first) {
    for (std::size_t i = first; i < count; i += workers) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run, w);
  run(0);
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace dunkl
