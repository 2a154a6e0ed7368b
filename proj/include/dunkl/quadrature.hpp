#pragma once

#include <vector>

#include "dunkl/dunkl_calculus.hpp"
#include "dunkl/field.hpp"

namespace dunkl {

enum class QuadratureDomain { Angular, Radial, Line };

struct QuadratureNode {
  double point = 0.0;
  double weight = 0.0;
};

/// One-dimensional rule with positive weights. Angular rules cover [0, 2pi),
/// radial rules [0, R] standing in for [0, inf).
struct QuadratureRule {
  QuadratureDomain domain = QuadratureDomain::Line;
  std::vector<QuadratureNode> nodes;

  double total_weight() const;
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

/// `panels` equal Gauss-Legendre panels of `nodes` points each on [a, b].
QuadratureRule composite_gauss_legendre(int panels, int nodes, double a, double b,
                                        QuadratureDomain domain = QuadratureDomain::Line);

/// Composite rule on [0, 2pi) with panel breaks at the four axis angles.
QuadratureRule angular_quadrature(int nodes_per_quadrant = 64);

/// Rule on [0, R] where R makes the Gaussian envelope exp(-scale R^2 / 2)
/// equal 1e-18; `scale` is m w_eff / hbar.
QuadratureRule radial_quadrature(double scale, int panels = 16, int nodes = 32);

/// Tensor rule for the polar form of the weighted scalar product.
struct PolarQuadrature {
  QuadratureRule radial;
  QuadratureRule angular;
};

/// Tensor rule on [-L, L]^2 split at the axes.
struct CartesianQuadrature {
  QuadratureRule x;
  QuadratureRule y;
};

CartesianQuadrature cartesian_quadrature(double half_width, int panels_per_half = 4,
                                         int nodes = 24);

/// Angular part of <f|g>: integral of f* g |cos|^{2mu_x} |sin|^{2mu_y} dphi,
/// with f and g evaluated on the unit circle.
Complex weighted_inner_product(const ScalarField2D& f, const ScalarField2D& g,
                               const DunklParams& params, const QuadratureRule& angular);

/// <f|g> in polar form.
Complex weighted_inner_product(const ScalarField2D& f, const ScalarField2D& g,
                               const DunklParams& params, const PolarQuadrature& rule);

/// <f|g> in Cartesian form, weight |x|^{2mu_x} |y|^{2mu_y}.
Complex weighted_inner_product(const ScalarField2D& f, const ScalarField2D& g,
                               const DunklParams& params, const CartesianQuadrature& rule);

}  // namespace dunkl
