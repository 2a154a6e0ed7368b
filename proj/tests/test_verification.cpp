#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/verification.hpp"

using namespace dunkl;

namespace {

AngularMode make_mode(SectorLabel sector, int twice_n, Branch branch, DunklParams params) {
  return {sector, AngularIndex::from_twice(twice_n), branch, params};
}

OscillatorConfig positive_config() { return {1.0, 1.0, 1.0, 1.0, 0.0}; }
OscillatorConfig negative_config() { return {1.0, 1.0, 1.0, 0.0, 2.0}; }

bool contains(const std::vector<double>& values, double target, double tol) {
  return std::any_of(values.begin(), values.end(),
                     [&](double v) { return std::fabs(v - target) <= tol; });
}

}  // namespace

TEST_CASE("report pass flag is the conjunction of its records") {
  VerificationReport report{"demo", {}};
  CHECK(report.pass());
  report.add("a", {{"x", 1}}, 1e-7, 1e-6);
  CHECK(report.pass());
  report.add("b", {}, 2e-6, 1e-6);
  CHECK_FALSE(report.pass());
  CHECK(report.checks[0].pass);
  CHECK_FALSE(report.checks[1].pass);

  VerificationReport other{"other", {}};
  other.add("c", {}, 0.0, 0.0);
  other.append(report);
  CHECK(other.checks.size() == 3);
  CHECK_FALSE(other.pass());
}

TEST_CASE("report JSON schema and rounding") {
  VerificationReport report{"kg", {}};
  report.add("kg_upper", {{"energy", 1.0 / 3.0}, {"k", 2}}, 1.0 / 7.0, 1e-5);
  const auto j = report.to_json(6);
  CHECK(j.at("suite") == "kg");
  CHECK(j.at("pass") == false);
  const auto& c = j.at("checks").at(0);
  CHECK(c.at("name") == "kg_upper");
  CHECK(c.at("residual").get<double>() == 0.142857);
  CHECK(c.at("tol").get<double>() == 1e-5);
  CHECK(c.at("inputs").at("energy").get<double>() == 0.333333);
  CHECK(c.at("inputs").at("k") == 2);
  CHECK(c.at("pass") == false);
  CHECK(round_significant(1.0 / 3.0, 17) == 1.0 / 3.0);
}

TEST_CASE("check_kg_eigen passes exact states and fails perturbed energies") {
  const SpinorSolution s =
      build_spinor(make_mode({1, 1}, 2, Branch::Plus, {0.0, 0.0}), 1, positive_config());
  const GridSpec grid = GridSpec::standard(characteristic_length(s));
  const auto exact = check_kg_eigen(s, grid, 1e-6);
  CHECK_MESSAGE(exact.pass(), exact.to_json().dump());
  CHECK(exact.checks.size() == 2);

  SpinorSolution perturbed = s;
  perturbed.energy += 0.1;
  const auto bad = check_kg_eigen(perturbed, grid, 1e-6);
  CHECK_FALSE(bad.pass());
  // Linear response: the residual is the shift of E~, about E * 0.1.
  const double shift = reduced_energy(perturbed.energy, s.config) - reduced_energy(s.energy, s.config);
  CHECK(bad.checks[0].residual == doctest::Approx(shift).epsilon(1e-3));

  SpinorSolution zero;
  zero.energy = 2.0;
  const auto empty = check_kg_eigen(zero, grid, 1e-12);
  CHECK(empty.pass());
  CHECK(empty.checks[0].residual == 0.0);
}

TEST_CASE("Klein-Gordon residual with reflections equals the reflection mismatch term") {
  // For mu != 0 and lambda != 0, F is not an eigenfunction of R_x and R_y
  // separately, so the decoupled equation keeps a residual proportional to
  // Omega mu_x (R_x - s_x) + Omega mu_y (R_y - s_y) acting on psi.
  const SpinorSolution s =
      build_spinor(make_mode({1, 1}, 2, Branch::Plus, {1.0, 1.0}), 3, positive_config());
  const auto report = check_kg_eigen(s, GridSpec::standard(characteristic_length(s)), 1e-5);
  CHECK_FALSE(report.pass());
  CHECK(report.checks[0].residual > 1e-2);

  const SpinorSolution ground =
      build_spinor(make_mode({1, 1}, 0, Branch::Plus, {1.0, 1.0}), 3, positive_config());
  CHECK(check_kg_eigen(ground, GridSpec::standard(characteristic_length(ground)), 1e-5).pass());
}

TEST_CASE("check_angular_eigen reference cases") {
  const auto constant = check_angular_eigen(make_mode({1, 1}, 0, Branch::Plus, {1.0, 1.0}),
                                            GridSpec::circle(), 1e-12);
  CHECK(constant.pass());
  CHECK(constant.checks[0].residual == 0.0);

  const AngularMode mode = make_mode({1, 1}, 4, Branch::Plus, {1.0, 1.0});
  const auto report = check_angular_eigen(mode, GridSpec::circle(), 1e-6);
  CHECK(report.pass());
  CHECK(report.checks[0].inputs.at("lambda").get<double>() ==
        doctest::Approx(2.0 * std::sqrt(8.0)).epsilon(1e-15));

  // Pairing F of one branch with lambda of the other.
  const ScalarField2D f = f_eigenfunction(mode);
  const double wrong = lambda_eigenvalue(make_mode({1, 1}, 4, Branch::Minus, {1.0, 1.0}));
  double worst = 0.0;
  for (double phi : GridSpec::circle().angles) {
    const PolarPoint p{1.0, phi};
    worst = std::max(worst, std::abs(angular_j(f, p, mode.params) - wrong * f.at(p)));
  }
  CHECK(worst > 1.0);
}

TEST_CASE("check_orthonormality reference cases") {
  const DunklParams one{1.0, 1.0};
  std::vector<AngularMode> even;
  for (int twice = 0; twice <= 8; twice += 2) {
    for (Branch b : {Branch::Plus, Branch::Minus}) {
      if (twice == 0 && b == Branch::Minus) continue;
      even.push_back(make_mode({1, 1}, twice, b, one));
    }
  }
  const QuadratureRule rule = angular_quadrature(64);
  CHECK(check_orthonormality(even, rule, 1e-8).pass());

  std::vector<AngularMode> mixed = even;
  for (int twice = 1; twice <= 7; twice += 2) {
    mixed.push_back(make_mode({1, -1}, twice, Branch::Plus, one));
    mixed.push_back(make_mode({-1, 1}, twice, Branch::Minus, one));
  }
  const auto cross = check_orthonormality(mixed, rule, 1e-8);
  CHECK_MESSAGE(cross.pass(), cross.checks[0].residual);

  const AngularMode single = make_mode({-1, 1}, 3, Branch::Plus, {0.5, 2.0});
  const ScalarField2D f = f_eigenfunction(single);
  const double self = std::abs(weighted_inner_product(f, f, single.params, rule) - 1.0);
  CHECK(check_orthonormality({single}, rule, 1e-8).checks[0].residual == self);

  CHECK_THROWS_AS(check_orthonormality({single, even.front()}, rule, 1e-8), DomainError);
  CHECK(check_orthonormality({}, rule, 1e-8).checks.empty());
}

TEST_CASE("matrix oracle reproduces the classical Fourier spectrum") {
  const auto values = matrix_oracle_lambda({1, 1}, {0.0, 0.0}, 9);
  const std::vector<double> expected = {-8.0, -6.0, -4.0, -2.0, 0.0, 2.0, 4.0, 6.0, 8.0};
  REQUIRE(values.size() == expected.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    CHECK(values[i] == doctest::Approx(expected[i]).scale(1.0).epsilon(1e-12));
  }
  const auto odd = matrix_oracle_lambda({1, -1}, {0.0, 0.0}, 4);
  CHECK(contains(odd, 1.0, 1e-12));
  CHECK(contains(odd, -3.0, 1e-12));

  const auto single = matrix_oracle_lambda({1, 1}, {1.0, 1.0}, 1);
  REQUIRE(single.size() == 1);
  CHECK(std::fabs(single[0]) <= 1e-14);
  CHECK_THROWS_AS(matrix_oracle_lambda({1, 1}, {1.0, 1.0}, 65), DomainError);
}

TEST_CASE("matrix oracle contains the analytic eigenvalues with reflections") {
  const auto values = matrix_oracle_lambda({1, 1}, {1.0, 1.0}, 48);
  for (double target : {2.0 * std::sqrt(3.0), 2.0 * std::sqrt(8.0)}) {
    CHECK(contains(values, target, 1e-8));
    CHECK(contains(values, -target, 1e-8));
  }
  const auto odd = matrix_oracle_lambda({-1, 1}, {0.5, 2.0}, 48);
  for (int twice = 1; twice <= 7; twice += 2) {
    const double n = 0.5 * twice;
    CHECK(contains(odd, 2.0 * std::sqrt((n + 0.5) * (n + 2.0)), 1e-8));
  }
}

TEST_CASE("non-relativistic targets are the first-order coefficient of the spectrum") {
  // (E^2 - m^2 c^4) / (2 mc^2) is exactly the leading term of E - mc^2.
  for (const OscillatorConfig& config :
       {positive_config(), negative_config(), OscillatorConfig{1.3, 0.8, 2.0, 0.9, 0.6}}) {
    for (const DunklParams& params : {DunklParams{0.0, 0.0}, DunklParams{1.0, 1.0},
                                      DunklParams{0.5, 1.5}}) {
      for (SectorLabel sector : {SectorLabel{1, 1}, SectorLabel{1, -1}, SectorLabel{-1, 1},
                                 SectorLabel{-1, -1}}) {
        const int first = sector.epsilon() == 1 ? 0 : 1;
        for (int twice = first; twice <= 4; twice += 2) {
          const AngularMode mode = make_mode(sector, twice, Branch::Plus, params);
          for (int k = 0; k <= 3; ++k) {
            double e = 0.0;
            try {
              e = energy(Component::Upper, mode, k, config);
            } catch (const NegativeRadicandError&) {
              continue;
            }
            const double rest = config.rest_energy();
            const double coefficient = (e * e - rest * rest) / (2.0 * rest);
            CHECK(nonrelativistic_target(mode, k, config) ==
                  doctest::Approx(coefficient).epsilon(1e-12).scale(1.0));
          }
        }
      }
    }
  }
}

TEST_CASE("check_nonrelativistic_limit reference cases") {
  const auto trivial = check_nonrelativistic_limit(make_mode({1, 1}, 0, Branch::Plus, {0.0, 0.0}),
                                                   0, positive_config(), {10.0, 100.0, 1000.0}, 1e-8);
  CHECK(trivial.pass());
  CHECK(trivial.checks[1].residual == 0.0);

  const auto report = check_nonrelativistic_limit(make_mode({1, 1}, 2, Branch::Plus, {1.0, 1.0}), 2,
                                                  positive_config(), {10.0, 100.0, 1000.0}, 1e-8);
  CHECK_MESSAGE(report.pass(), report.to_json().dump());
  const double rate = report.checks[0].inputs.at("rate").get<double>();
  CHECK(rate >= 1.8);
  CHECK(rate <= 2.2);

  CHECK_THROWS_AS(check_nonrelativistic_limit(make_mode({1, 1}, 0, Branch::Plus, {0.0, 0.0}), 0,
                                              positive_config(), {10.0, 100.0}, 1e-8),
                  DomainError);
  CHECK_THROWS_AS(check_nonrelativistic_limit(make_mode({1, 1}, 0, Branch::Plus, {0.0, 0.0}), 0,
                                              positive_config(), {10.0, 5.0, 100.0}, 1e-8),
                  DomainError);
}

TEST_CASE("check_dirac_system on the builder output") {
  // The exact rest state (lower component zero) of the even sector satisfies
  // both equations; it has no bound partner, so it is assembled by hand.
  const AngularMode ground_mode = make_mode({1, 1}, 0, Branch::Plus, {0.0, 0.0});
  SpinorSolution rest;
  rest.mode = ground_mode;
  rest.config = positive_config();
  rest.energy = 1.0;
  rest.upper = ScalarField2D([](double x, double y) { return Complex(std::exp(-0.5 * (x * x + y * y))); });
  const auto exact = check_dirac_system(rest, GridSpec::standard(1.0), 1e-5);
  CHECK_MESSAGE(exact.pass(), exact.to_json().dump());

  // The lowering operator maps R_x R_y = eps to -eps, while both built
  // components carry the same F. On the sample grid, which is symmetric under
  // phi -> phi + pi, the fitted overlap therefore vanishes.
  for (const DunklParams& params : {DunklParams{0.0, 0.0}, DunklParams{1.0, 1.0}}) {
    for (const OscillatorConfig& config : {positive_config(), negative_config()}) {
      const SpinorSolution s = build_spinor(make_mode({1, 1}, 2, Branch::Plus, params), 3, config);
      CHECK(s.phase_overlap <= 1e-10);
      CHECK_FALSE(check_dirac_system(s, GridSpec::standard(characteristic_length(s)), 1e-4).pass());
    }
  }

  // Off-by-one lower index.
  SpinorSolution shifted =
      build_spinor(make_mode({1, 1}, 2, Branch::Plus, {0.0, 0.0}), 1, positive_config());
  RadialProfile wrong = build_radial(Component::Lower, shifted.mode, 1, shifted.config);
  wrong.k += 1;
  const ScalarField2D f = f_eigenfunction(shifted.mode);
  shifted.lower = ScalarField2D(
      [wrong, f](double x, double y) { return wrong(std::hypot(x, y)) * f(x, y); });
  CHECK_FALSE(check_dirac_system(shifted, GridSpec::standard(1.0), 1e-4).pass());
}

TEST_CASE("bound_state_sweep enumerates valid pairs in a fixed order") {
  const std::vector<DunklParams> params = {{0.0, 0.0}, {1.0, 1.0}};
  const std::vector<OscillatorConfig> configs = {positive_config(), negative_config()};
  const auto sweep = bound_state_sweep(params, configs, 2, 2);
  CHECK_FALSE(sweep.empty());
  for (const auto& entry : sweep) {
    CHECK_NOTHROW(pair_radial_indices(entry.mode.sector, classify_regime(entry.config), entry.k,
                                      entry.mode.params));
  }
  const auto again = bound_state_sweep(params, configs, 2, 2);
  REQUIRE(again.size() == sweep.size());
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    CHECK(again[i].k == sweep[i].k);
    CHECK(again[i].mode.n == sweep[i].mode.n);
    CHECK(again[i].mode.sector == sweep[i].mode.sector);
  }
}

TEST_CASE("parallel_map keeps index order and rethrows the first error") {
  auto square = [](std::size_t i) { return static_cast<double>(i * i); };
  const auto serial = parallel_map(50, 1, square);
  const auto threaded = parallel_map(50, 4, square);
  CHECK(serial == threaded);
  CHECK(serial[7] == 49.0);
  CHECK(parallel_map(0, 4, square).empty());

  auto failing = [](std::size_t i) -> int {
    if (i == 3) throw std::runtime_error("three");
    if (i == 8) throw std::logic_error("eight");
    return static_cast<int>(i);
  };
  CHECK_THROWS_WITH(parallel_map(10, 3, failing), "three");
}
