#include "dunkl/field.hpp"

#include <utility>

namespace dunkl {

ScalarField2D::ScalarField2D()
    : rule_(std::make_shared<const Rule>([](double, double) { return Complex{}; })),
      parity_x_(Parity::Even),
      parity_y_(Parity::Even) {}

ScalarField2D::ScalarField2D(Rule rule, Parity parity_x, Parity parity_y)
    : rule_(std::make_shared<const Rule>(std::move(rule))), parity_x_(parity_x), parity_y_(parity_y) {}

ScalarField2D ScalarField2D::scaled(Complex factor) const {
  auto inner = rule_;
  return ScalarField2D([inner, factor](double x, double y) { return factor * (*inner)(x, y); },
                       parity_x_, parity_y_);
}

ScalarField2D reflect(const ScalarField2D& field, Axis axis) {
  if (axis == Axis::X) {
    return ScalarField2D([field](double x, double y) { return field(-x, y); }, field.parity(Axis::X),
                         field.parity(Axis::Y));
  }
  return ScalarField2D([field](double x, double y) { return field(x, -y); }, field.parity(Axis::X),
                       field.parity(Axis::Y));
}

}  // namespace dunkl
