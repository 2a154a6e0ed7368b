#pragma once

// Closed-form spinor eigenstates and energies of the Dirac-Dunkl oscillator
// in a uniform magnetic field, for the three frequency regimes.
//
// With w~ = omega - omega_c/2, Omega = m |w~| / hbar, A = radial_order(mode)
// and mu_s = mu_x s_x + mu_y s_y, the radial profiles are
//
//   g_k(rho) = rho^{A - mu_x - mu_y} exp(-Omega rho^2 / 2) L_k^{A}(Omega rho^2)
//
// and the energies E = +-mc^2 sqrt(1 + (2 hbar |w~| / mc^2) Q) use
//
//   Positive regime:  Q_upper = 2k + A + lambda - mu_s,   Q_lower = 2k' + A + lambda + mu_s + 2
//   Negative regime:  Q_upper = 2k + A - lambda + mu_s + 2, Q_lower = 2k' + A - lambda - mu_s
//
// Equal upper and lower energies pair the radial indices:
//   Positive: k' = k - mu_s - 1,   Negative: k' = k + mu_s + 1.
//
// In the critical regime (w~ = 0) the states are free waves
// rho^{-mu_x - mu_y} J_A(sqrt(2 E~) rho) F(phi).

#include <optional>

#include "dunkl/angular_sector.hpp"
#include "dunkl/dunkl_calculus.hpp"
#include "dunkl/field.hpp"
#include "dunkl/oscillator.hpp"

namespace dunkl {

enum class EnergySign { Positive, Negative };

struct QuantumNumbers {
  int k = 0;        // upper radial index
  int k_prime = 0;  // lower radial index
};

/// k' for the active sector and regime. Throws DomainError if the Dunkl
/// parameters violate the pairing integrality restriction, InvalidPairError
/// if k' < 0, RegimeError in the critical regime.
int pair_radial_indices(SectorLabel sector, Regime regime, int k, const DunklParams& params);

/// Energy of the given spinor component with radial index k (k is the upper
/// index for Upper and the lower index for Lower).
double energy(Component component, const AngularMode& mode, int k, const OscillatorConfig& config,
              EnergySign sign = EnergySign::Positive);

/// E~ = (E^2 - m^2 c^4) / (2 hbar^2 c^2)
double reduced_energy(double energy, const OscillatorConfig& config);

/// rho^{exponent} exp(-scale rho^2 / 2) L_k^{order}(scale rho^2)
struct RadialProfile {
  double order = 0.0;
  double exponent = 0.0;
  double scale = 1.0;
  int k = 0;

  double operator()(double rho) const;
  /// Closed form of the integral of profile^2 rho^{2(mu_x+mu_y)+1} over [0, inf):
  /// Gamma(k + A + 1) / (k! 2 scale^{A+1}).
  double weighted_norm_squared() const;
};

/// Radial profile of the component. For Lower, k is the upper index and the
/// paired k' is used.
RadialProfile build_radial(Component component, const AngularMode& mode, int k,
                           const OscillatorConfig& config);

struct SpinorSolution {
  ScalarField2D upper;
  ScalarField2D lower;
  double energy = 0.0;
  QuantumNumbers quantum;
  AngularMode mode;
  OscillatorConfig config;
  Regime regime = Regime::Positive;
  /// Target component norms (E + mc^2)/(2E) and (E - mc^2)/(2E); unset for
  /// non-normalizable free-particle states.
  std::optional<double> upper_norm;
  std::optional<double> lower_norm;
  /// Relative phase applied to the lower component by the least-squares fit,
  /// and the normalized overlap |sum conj(u) v| / (|u| |v|) the fit saw.
  double phase = 0.0;
  double phase_overlap = 0.0;
};

/// Bound spinor for the Positive or Negative regime.
SpinorSolution build_spinor(const AngularMode& mode, int k, const OscillatorConfig& config,
                            EnergySign sign = EnergySign::Positive);

/// Free-particle state of energy E in the critical regime.
SpinorSolution free_particle(const AngularMode& mode, double energy, const OscillatorConfig& config);

}  // namespace dunkl
