#include "dunkl/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

constexpr double kPi = std::numbers::pi;

double angular_weight(const DunklParams& params, double c, double s) {
  return std::pow(std::fabs(c), 2.0 * params.mu_x) * std::pow(std::fabs(s), 2.0 * params.mu_y);
}

}  // namespace

double QuadratureRule::total_weight() const {
  double sum = 0.0;
  for (const auto& node : nodes) sum += node.weight;
  return sum;
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double derivative = 1.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      derivative = n * (z * p0 - p1) / (z * z - 1.0);
      const double step = p0 / derivative;
      z -= step;
      if (std::fabs(step) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - z * z) * derivative * derivative);
    rule.nodes[static_cast<std::size_t>(i)] = {mid - half * z, half * w};
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = {mid + half * z, half * w};
  }
  return rule;
}

QuadratureRule composite_gauss_legendre(int panels, int nodes, double a, double b,
                                        QuadratureDomain domain) {
  if (panels < 1) throw DomainError("composite_gauss_legendre: need at least one panel");
  QuadratureRule rule;
  rule.domain = domain;
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const auto panel = gauss_legendre(nodes, a + p * width, a + (p + 1) * width);
    rule.nodes.insert(rule.nodes.end(), panel.nodes.begin(), panel.nodes.end());
  }
  return rule;
}

QuadratureRule angular_quadrature(int nodes_per_quadrant) {
  return composite_gauss_legendre(4, nodes_per_quadrant, 0.0, 2.0 * kPi, QuadratureDomain::Angular);
}

QuadratureRule radial_quadrature(double scale, int panels, int nodes) {
  if (!(scale > 0.0)) throw DomainError("radial_quadrature: scale must be positive");
  const double cutoff = std::sqrt(2.0 * 18.0 * std::log(10.0) / scale);
  return composite_gauss_legendre(panels, nodes, 0.0, cutoff, QuadratureDomain::Radial);
}

CartesianQuadrature cartesian_quadrature(double half_width, int panels_per_half, int nodes) {
  if (!(half_width > 0.0)) throw DomainError("cartesian_quadrature: half width must be positive");
  auto line = composite_gauss_legendre(2 * panels_per_half, nodes, -half_width, half_width);
  return {line, line};
}

Complex weighted_inner_product(const ScalarField2D& f, const ScalarField2D& g,
                               const DunklParams& params, const QuadratureRule& angular) {
  Complex sum{};
  for (const auto& node : angular.nodes) {
    const double c = std::cos(node.point);
    const double s = std::sin(node.point);
    sum += node.weight * angular_weight(params, c, s) * std::conj(f(c, s)) * g(c, s);
  }
  return sum;
}

Complex weighted_inner_product(const ScalarField2D& f, const ScalarField2D& g,
                               const DunklParams& params, const PolarQuadrature& rule) {
  Complex sum{};
  const double radial_power = 2.0 * params.mu_plus() + 1.0;
  for (const auto& radial : rule.radial.nodes) {
    const double rho = radial.point;
    const double radial_weight = radial.weight * std::pow(rho, radial_power);
    for (const auto& angular : rule.angular.nodes) {
      const double c = std::cos(angular.point);
      const double s = std::sin(angular.point);
      const double x = rho * c;
      const double y = rho * s;
      sum += radial_weight * angular.weight * angular_weight(params, c, s) * std::conj(f(x, y)) *
             g(x, y);
    }
  }
  return sum;
}

Complex weighted_inner_product(const ScalarField2D& f, const ScalarField2D& g,
                               const DunklParams& params, const CartesianQuadrature& rule) {
  Complex sum{};
  for (const auto& nx : rule.x.nodes) {
    const double wx = nx.weight * std::pow(std::fabs(nx.point), 2.0 * params.mu_x);
    for (const auto& ny : rule.y.nodes) {
      const double w = wx * ny.weight * std::pow(std::fabs(ny.point), 2.0 * params.mu_y);
      sum += w * std::conj(f(nx.point, ny.point)) * g(nx.point, ny.point);
    }
  }
  return sum;
}

}  // namespace dunkl
