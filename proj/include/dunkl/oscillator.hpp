#pragma once

namespace dunkl {

/// Frequency regime, fixed by the sign of omega - omega_c / 2.
enum class Regime { Positive, Critical, Negative };

/// Physical constants and frequencies. Natural units by default.
struct OscillatorConfig {
  double m = 1.0;
  double hbar = 1.0;
  double c = 1.0;
  double omega = 1.0;    // oscillator frequency
  double omega_c = 0.0;  // cyclotron frequency |e| B / m

  double omega_tilde() const { return omega - omega_c / 2.0; }
  double omega_bar() const { return omega_c / 2.0 - omega; }
  double rest_energy() const { return m * c * c; }

  /// Throws DomainError unless m, hbar, c > 0 and omega, omega_c >= 0.
  void validate() const;
};

/// Positive when omega > omega_c / 2, Critical when equal to within 1e-14
/// relative, Negative otherwise.
Regime classify_regime(const OscillatorConfig& config);

const char* to_string(Regime regime);

}  // namespace dunkl
