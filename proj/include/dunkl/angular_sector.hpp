#pragma once

// Eigenbasis of the Dunkl angular operator J = i (x D_y - y D_x).
//
// The eigenfunctions are built from normalized Jacobi-polynomial functions
// Phi^{sx,sy}_n, each even or odd under R_x and R_y as its label says, with
// x = -cos(2 phi) as the Jacobi argument:
//
//   eps = +1 (n = 0, 1, 2, ...):      F = (Phi++ + b i Phi--) / sqrt(2),  lambda = b 2 sqrt(n (n + mu_x + mu_y))
//   eps = -1 (n = 1/2, 3/2, ...):     F = (Phi-+ - b i Phi+-) / sqrt(2),  lambda = b 2 sqrt((n + mu_x)(n + mu_y))
//
// with b = +1 for Branch::Plus and -1 for Branch::Minus. This pairing is
// the one that satisfies J F = lambda F (checked in the tests). For n = 0
// Phi-- vanishes and F = Phi++ alone, with lambda = 0.
//
// J anticommutes with R_x and R_y separately, so for lambda != 0 the
// combination F is an eigenfunction of R_x R_y (eigenvalue eps) but not of
// R_x or R_y individually.

#include "dunkl/dunkl_calculus.hpp"
#include "dunkl/field.hpp"

namespace dunkl {

/// Reflection eigenvalues (s_x, s_y), each +1 or -1.
struct SectorLabel {
  int sx = 1;
  int sy = 1;

  int epsilon() const { return sx * sy; }
  /// mu_x s_x + mu_y s_y
  double reflection_shift(const DunklParams& params) const {
    return params.mu_x * sx + params.mu_y * sy;
  }
  void validate() const;

  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
};

/// Non-negative integer or half-odd-integer angular index, stored doubled.
class AngularIndex {
 public:
  static AngularIndex from_twice(int twice);
  /// Accepts values within 1e-12 of a multiple of 1/2.
  static AngularIndex from_value(double value);

  int twice() const { return twice_; }
  double value() const { return 0.5 * twice_; }
  bool is_integer() const { return twice_ % 2 == 0; }

  friend bool operator==(const AngularIndex&, const AngularIndex&) = default;

 private:
  explicit AngularIndex(int twice) : twice_(twice) {}
  int twice_ = 0;
};

enum class Branch { Plus, Minus };

inline int branch_sign(Branch b) { return b == Branch::Plus ? 1 : -1; }

struct AngularMode {
  SectorLabel sector;
  AngularIndex n = AngularIndex::from_twice(0);
  Branch branch = Branch::Plus;
  DunklParams params;

  /// eps = +1 needs integer n, eps = -1 needs n in {1/2, 3/2, ...}; n = 0 has
  /// only the Plus branch. Throws DomainError otherwise.
  void validate() const;
};

double phi_pp(int n, const DunklParams& params, double phi);
double phi_mm(int n, const DunklParams& params, double phi);
/// n is a half-odd integer, passed as the AngularIndex.
double phi_mp(AngularIndex n, const DunklParams& params, double phi);
double phi_pm(AngularIndex n, const DunklParams& params, double phi);

/// Same functions evaluated from (cos phi, sin phi) directly, so that sign
/// flips of either argument are exact reflections.
double phi_pp_cs(int n, const DunklParams& params, double c, double s);
double phi_mm_cs(int n, const DunklParams& params, double c, double s);
double phi_mp_cs(AngularIndex n, const DunklParams& params, double c, double s);
double phi_pm_cs(AngularIndex n, const DunklParams& params, double c, double s);

/// Angular eigenfunction F of the mode, as a field depending only on the
/// polar angle. Normalized to 1 under the angular weight.
ScalarField2D f_eigenfunction(const AngularMode& mode);

/// Signed eigenvalue lambda of J on f_eigenfunction(mode).
double lambda_eigenvalue(const AngularMode& mode);

/// sqrt(lambda^2 + mu_eps^2), mu_eps = mu_x + eps mu_y. Laguerre/Bessel order.
double radial_order(const AngularMode& mode);

}  // namespace dunkl
