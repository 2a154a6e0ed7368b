#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <memory>

namespace dunkl {

using Complex = std::complex<double>;

enum class Axis { X, Y };

/// Advisory symmetry tag of a field under a single-axis reflection.
enum class Parity { None, Even, Odd };

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct PolarPoint {
  double rho = 0.0;
  double phi = 0.0;

  Point cartesian() const { return {rho * std::cos(phi), rho * std::sin(phi)}; }
};

/// An immutable complex-valued function on the plane, carried as an exact
/// evaluation rule. Copies share the rule.
class ScalarField2D {
 public:
  using Rule = std::function<Complex(double, double)>;

  /// The zero field.
  ScalarField2D();
  explicit ScalarField2D(Rule rule, Parity parity_x = Parity::None,
                         Parity parity_y = Parity::None);

  Complex operator()(double x, double y) const { return (*rule_)(x, y); }
  Complex operator()(Point p) const { return (*rule_)(p.x, p.y); }
  Complex at(PolarPoint p) const { return (*this)(p.cartesian()); }

  Parity parity(Axis axis) const { return axis == Axis::X ? parity_x_ : parity_y_; }

  ScalarField2D scaled(Complex factor) const;

 private:
  std::shared_ptr<const Rule> rule_;
  Parity parity_x_ = Parity::None;
  Parity parity_y_ = Parity::None;
};

/// Field composed with the sign flip of one coordinate; exact.
ScalarField2D reflect(const ScalarField2D& field, Axis axis);

/// Evaluate f at the mirror image of p.
inline Complex reflected_value(const ScalarField2D& field, Axis axis, Point p) {
  return axis == Axis::X ? field(-p.x, p.y) : field(p.x, -p.y);
}

}  // namespace dunkl
