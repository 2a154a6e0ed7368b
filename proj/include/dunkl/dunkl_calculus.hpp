#pragma once

// Dunkl derivatives and the operators built from them, applied to fields
// carried as exact evaluation rules. Only genuine derivatives are
// discretized (second-order central differences); every reflection is
// evaluated exactly.

#include "dunkl/field.hpp"
#include "dunkl/oscillator.hpp"

namespace dunkl {

/// Reflection-deformation parameters of the Dunkl derivatives.
struct DunklParams {
  double mu_x = 0.0;
  double mu_y = 0.0;

  double mu_plus() const { return mu_x + mu_y; }
  double mu_minus() const { return mu_x - mu_y; }

  /// Throws DomainError unless mu_x, mu_y >= -1/2.
  void validate() const;

  /// Both in {0, 1, 2, ...} or both in {1/2, 3/2, ...}; needed for bound
  /// spinor pairs with square-integrable radial parts.
  bool allows_spinor_pairing() const;
};

inline constexpr double kDefaultStep = 1e-4;

/// Reflection differences below this are treated as vanishing near an axis.
inline constexpr double kVanishingReflection = 1e-10;

/// Default residual tolerance for a step h: 100 h^2.
constexpr double default_tolerance(double h) { return 100.0 * h * h; }

/// D f = df/d(axis) + (mu / coordinate) (f - R f) at p.
Complex dunkl_derivative(const ScalarField2D& field, Axis axis, Point p, const DunklParams& params,
                         double h = kDefaultStep);

/// Dunkl Laplacian D_x^2 + D_y^2 in its expanded form.
Complex dunkl_laplacian(const ScalarField2D& field, Point p, const DunklParams& params,
                        double h = kDefaultStep);

/// Angular operator J = i (x D_y - y D_x) in polar form:
///   i (d/dphi + mu_y cot(phi) (1 - R_y) - mu_x tan(phi) (1 - R_x)).
Complex angular_j(const ScalarField2D& field, PolarPoint p, const DunklParams& params,
                  double h = kDefaultStep);

/// Angular part B_phi of the polar Dunkl Laplacian; J^2 = 2 B_phi + 2 mu_x mu_y (1 - R_x R_y).
Complex angular_b(const ScalarField2D& field, PolarPoint p, const DunklParams& params,
                  double h = kDefaultStep);

/// Upper or lower spinor component.
enum class Component { Upper, Lower };

/// Left-hand side of the decoupled Dunkl-Klein-Gordon equation for the given
/// component (polar form, scaled by 1/(hbar^2 c^2)). Eigenstates satisfy
/// kg_apply = E~ f with E~ = (E^2 - m^2 c^4) / (2 hbar^2 c^2).
Complex kg_apply(Component component, const ScalarField2D& field, const DunklParams& params,
                 const OscillatorConfig& config, PolarPoint p, double h = kDefaultStep);

/// [-i hbar c (D_x - i D_y) + i m c w~ (x - i y)] f
Complex dirac_lowering(const ScalarField2D& field, const DunklParams& params,
                       const OscillatorConfig& config, Point p, double h = kDefaultStep);

/// [-i hbar c (D_x + i D_y) - i m c w~ (x + i y)] f
Complex dirac_raising(const ScalarField2D& field, const DunklParams& params,
                      const OscillatorConfig& config, Point p, double h = kDefaultStep);

struct DiracResidual {
  Complex first;   // lowering(lower) - (E - mc^2) upper
  Complex second;  // raising(upper) - (E + mc^2) lower
};

/// Residuals of the coupled first-order Dirac-Dunkl system at p.
DiracResidual dirac_apply(const ScalarField2D& upper, const ScalarField2D& lower, double energy,
                          const DunklParams& params, const OscillatorConfig& config, Point p,
                          double h = kDefaultStep);

}  // namespace dunkl
