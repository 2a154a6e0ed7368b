#include "dunkl/solution_builder.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

namespace {

constexpr double kPairTolerance = 1e-9;

void require_bound_regime(Regime regime) {
  if (regime == Regime::Critical) {
    throw RegimeError("bound states do not exist at omega = omega_c / 2; use free_particle");
  }
}

// Q = 2k + shift + constant + lambda_sign * lambda + A, the bracket under the
// square root in units of 2 hbar |w~| / mc^2. The exact (half-)integer part
// is summed first so that paired upper/lower energies agree bit for bit.
struct Bracket {
  double shift;
  double constant;
  double lambda_sign;
};

Bracket energy_bracket(SectorLabel sector, Regime regime, Component component,
                       const DunklParams& params) {
  const double mu_s = sector.reflection_shift(params);
  if (regime == Regime::Positive) {
    return component == Component::Upper ? Bracket{-mu_s, 0.0, 1.0} : Bracket{mu_s, 2.0, 1.0};
  }
  return component == Component::Upper ? Bracket{mu_s, 2.0, -1.0} : Bracket{-mu_s, 0.0, -1.0};
}

double effective_scale(const OscillatorConfig& config) {
  return config.m * std::fabs(config.omega_tilde()) / config.hbar;
}

}  // namespace

void OscillatorConfig::validate() const {
  if (!(m > 0.0) || !(hbar > 0.0) || !(c > 0.0)) {
    throw DomainError("m, hbar and c must be positive");
  }
  if (!(omega >= 0.0) || !(omega_c >= 0.0)) {
    throw DomainError("omega and omega_c must be non-negative");
  }
}

Regime classify_regime(const OscillatorConfig& config) {
  const double tilde = config.omega_tilde();
  const double reference = std::max(config.omega, config.omega_c / 2.0);
  if (std::fabs(tilde) <= 1e-14 * reference) return Regime::Critical;
  return tilde > 0.0 ? Regime::Positive : Regime::Negative;
}

const char* to_string(Regime regime) {
  switch (regime) {
    case Regime::Positive: return "positive";
    case Regime::Critical: return "critical";
    case Regime::Negative: return "negative";
  }
  return "unknown";
}

int pair_radial_indices(SectorLabel sector, Regime regime, int k, const DunklParams& params) {
  sector.validate();
  require_bound_regime(regime);
  if (k < 0) throw DomainError("radial index must be non-negative");
  if (!params.allows_spinor_pairing()) {
    throw DomainError(
        "spinor pairing needs mu_x, mu_y both in {0, 1, ...} or both in {1/2, 3/2, ...}");
  }
  const double mu_s = sector.reflection_shift(params);
  const double paired = regime == Regime::Positive ? k - mu_s - 1.0 : k + mu_s + 1.0;
  const double rounded = std::round(paired);
  if (std::fabs(paired - rounded) > kPairTolerance || rounded < 0.0) {
    throw InvalidPairError("no bound lower component for k = " + std::to_string(k) +
                           " (paired index " + std::to_string(paired) + ")");
  }
  return static_cast<int>(rounded);
}

double energy(Component component, const AngularMode& mode, int k, const OscillatorConfig& config,
              EnergySign sign) {
  mode.validate();
  config.validate();
  if (k < 0) throw DomainError("radial index must be non-negative");
  const Regime regime = classify_regime(config);
  require_bound_regime(regime);

  const Bracket b = energy_bracket(mode.sector, regime, component, mode.params);
  const double q = ((2.0 * k + b.shift) + b.constant) + b.lambda_sign * lambda_eigenvalue(mode) +
                   radial_order(mode);
  const double rest = config.rest_energy();
  const double coupling = 2.0 * config.hbar * std::fabs(config.omega_tilde()) / rest;
  const double radicand = 1.0 + coupling * q;
  if (radicand < 0.0) {
    throw NegativeRadicandError("energy radicand is negative for k = " + std::to_string(k));
  }
  const double magnitude = rest * std::sqrt(radicand);
  return sign == EnergySign::Positive ? magnitude : -magnitude;
}

double reduced_energy(double energy, const OscillatorConfig& config) {
  const double rest = config.rest_energy();
  const double hbar_c = config.hbar * config.c;
  return (energy * energy - rest * rest) / (2.0 * hbar_c * hbar_c);
}

double RadialProfile::operator()(double rho) const {
  const double t = scale * rho * rho;
  return std::pow(rho, exponent) * std::exp(-0.5 * t) * special::laguerre_l(k, order, t);
}

double RadialProfile::weighted_norm_squared() const {
  return std::exp(special::log_gamma(k + order + 1.0) - special::log_gamma(k + 1.0) -
                  std::log(2.0) - (order + 1.0) * std::log(scale));
}

RadialProfile build_radial(Component component, const AngularMode& mode, int k,
                           const OscillatorConfig& config) {
  mode.validate();
  config.validate();
  const Regime regime = classify_regime(config);
  require_bound_regime(regime);
  const int index =
      component == Component::Upper ? k : pair_radial_indices(mode.sector, regime, k, mode.params);
  if (index < 0) throw DomainError("radial index must be non-negative");
  const double order = radial_order(mode);
  return {order, order - mode.params.mu_plus(), effective_scale(config), index};
}

SpinorSolution build_spinor(const AngularMode& mode, int k, const OscillatorConfig& config,
                            EnergySign sign) {
  mode.validate();
  config.validate();
  const Regime regime = classify_regime(config);
  require_bound_regime(regime);

  const int k_prime = pair_radial_indices(mode.sector, regime, k, mode.params);
  const double e = energy(Component::Upper, mode, k, config, sign);
  const double rest = config.rest_energy();
  const double upper_norm = (e + rest) / (2.0 * e);
  const double lower_norm = (e - rest) / (2.0 * e);

  const RadialProfile radial_upper = build_radial(Component::Upper, mode, k, config);
  const RadialProfile radial_lower = build_radial(Component::Lower, mode, k, config);
  const ScalarField2D angular = f_eigenfunction(mode);

  const double amp_upper = std::sqrt(upper_norm / radial_upper.weighted_norm_squared());
  const double amp_lower = std::sqrt(lower_norm / radial_lower.weighted_norm_squared());

  auto component_field = [&angular](RadialProfile radial, double amplitude) {
    return ScalarField2D([angular, radial, amplitude](double x, double y) {
      return amplitude * radial(std::hypot(x, y)) * angular(x, y);
    });
  };

  SpinorSolution solution{
      .upper = component_field(radial_upper, amp_upper),
      .lower = component_field(radial_lower, amp_lower),
      .energy = e,
      .quantum = {k, k_prime},
      .mode = mode,
      .config = config,
      .regime = regime,
      .upper_norm = upper_norm,
      .lower_norm = lower_norm,
  };

  if (amp_lower == 0.0) return solution;

  // Phase of the lower component from a least-squares fit of the first
  // coupled equation over a 10 x 10 off-axis grid.
  const double length = 1.0 / std::sqrt(radial_upper.scale);
  Complex cross{};
  double norm_u = 0.0;
  double norm_v = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double rho = length * 0.2 * std::pow(15.0, i / 9.0);
    for (int j = 0; j < 10; ++j) {
      const double phi = (j + 0.25) * 2.0 * std::acos(-1.0) / 10.0;
      const Point p = PolarPoint{rho, phi}.cartesian();
      const Complex u = dirac_lowering(solution.lower, mode.params, config, p);
      const Complex v = (e - rest) * solution.upper(p);
      cross += std::conj(u) * v;
      norm_u += std::norm(u);
      norm_v += std::norm(v);
    }
  }
  const double denominator = std::sqrt(norm_u * norm_v);
  solution.phase_overlap = denominator > 0.0 ? std::abs(cross) / denominator : 0.0;
  if (solution.phase_overlap > 1e-12) {
    solution.phase = std::arg(cross);
    solution.lower = solution.lower.scaled(std::polar(1.0, solution.phase));
  }
  return solution;
}

SpinorSolution free_particle(const AngularMode& mode, double e, const OscillatorConfig& config) {
  mode.validate();
  config.validate();
  const Regime regime = classify_regime(config);
  if (regime != Regime::Critical) {
    throw RegimeError("free-particle states exist only at omega = omega_c / 2");
  }
  const double rest = config.rest_energy();
  if (!(e >= rest)) throw DomainError("free-particle energy must satisfy E >= mc^2");

  const double wave_number = std::sqrt(2.0 * reduced_energy(e, config));
  const double order = radial_order(mode);
  const double mu_plus = mode.params.mu_plus();
  const ScalarField2D angular = f_eigenfunction(mode);
  // Value at the origin: limit of rho^{-mu+} J_A(kappa rho), finite since A >= mu+.
  const double origin =
      order > mu_plus ? 0.0
                      : std::exp(order * std::log(wave_number / 2.0) - special::log_gamma(order + 1.0));

  auto radial = [=](double rho) {
    if (rho == 0.0) return wave_number == 0.0 && order == 0.0 ? 1.0 : origin;
    return std::pow(rho, -mu_plus) * special::bessel_j(order, wave_number * rho);
  };
  const double ratio = std::sqrt((e - rest) / (e + rest));
  ScalarField2D upper([angular, radial](double x, double y) {
    return radial(std::hypot(x, y)) * angular(x, y);
  });

  return SpinorSolution{
      .upper = upper,
      .lower = upper.scaled(ratio),
      .energy = e,
      .quantum = {0, 0},
      .mode = mode,
      .config = config,
      .regime = regime,
      .upper_norm = std::nullopt,
      .lower_norm = std::nullopt,
  };
}

}  // namespace dunkl
