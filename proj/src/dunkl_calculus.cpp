#include "dunkl/dunkl_calculus.hpp"

#include <cmath>
#include <string>

#include "dunkl/errors.hpp"

namespace dunkl {

namespace {

constexpr Complex kI{0.0, 1.0};

double coordinate(Point p, Axis axis) { return axis == Axis::X ? p.x : p.y; }

Point with_coordinate(Point p, Axis axis, double value) {
  if (axis == Axis::X) p.x = value;
  else p.y = value;
  return p;
}

const char* axis_name(Axis axis) { return axis == Axis::X ? "x" : "y"; }

// Odd part of f across the axis, probed at distance `offset` from it.
Complex odd_part_at(const ScalarField2D& f, Axis axis, Point p, double offset) {
  const Point probe = with_coordinate(p, axis, offset);
  return 0.5 * (f(probe) - reflected_value(f, axis, probe));
}

bool near_axis(Point p, Axis axis, double threshold) {
  return std::fabs(coordinate(p, axis)) < threshold;
}

// Throws unless f is locally even across the axis (odd part < 1e-10).
void require_locally_even(const ScalarField2D& f, Axis axis, Point p, double threshold) {
  if (std::abs(odd_part_at(f, axis, p, threshold)) >= kVanishingReflection) {
    throw SingularPointError(std::string("operator applied within 10h of the ") + axis_name(axis) +
                             "-reflection singular locus to a field that is not even there");
  }
}

// (f(p) - f(R p)) / coordinate. Within `threshold` of the axis the quotient
// is replaced by its limit 2 o'(0), estimated as 2 o(s) / s from the odd
// part o, provided o is negligible.
Complex reflection_quotient(const ScalarField2D& f, Axis axis, Point p, double threshold) {
  const double t = coordinate(p, axis);
  if (std::fabs(t) >= threshold) return (f(p) - reflected_value(f, axis, p)) / t;
  const Complex odd = odd_part_at(f, axis, p, threshold);
  if (std::abs(odd) >= kVanishingReflection) {
    throw SingularPointError(std::string("reflection term singular: |") + axis_name(axis) +
                             "| < 10h with non-vanishing reflection difference");
  }
  return 2.0 * odd / threshold;
}

Complex partial(const ScalarField2D& f, Axis axis, Point p, double h) {
  const double t = coordinate(p, axis);
  return (f(with_coordinate(p, axis, t + h)) - f(with_coordinate(p, axis, t - h))) / (2.0 * h);
}

Complex second_partial(const ScalarField2D& f, Axis axis, Point p, double h) {
  const double t = coordinate(p, axis);
  return (f(with_coordinate(p, axis, t + h)) - 2.0 * f(p) + f(with_coordinate(p, axis, t - h))) /
         (h * h);
}

Complex d_phi(const ScalarField2D& f, PolarPoint p, double h) {
  return (f.at({p.rho, p.phi + h}) - f.at({p.rho, p.phi - h})) / (2.0 * h);
}

Complex d2_phi(const ScalarField2D& f, PolarPoint p, double h) {
  return (f.at({p.rho, p.phi + h}) - 2.0 * f.at(p) + f.at({p.rho, p.phi - h})) / (h * h);
}

void require_step(double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
}

void require_radius(PolarPoint p, double h) {
  if (!(p.rho > h)) throw DomainError("polar operators need rho > h");
}

}  // namespace

void DunklParams::validate() const {
  if (!(mu_x >= -0.5) || !(mu_y >= -0.5)) {
    throw DomainError("Dunkl parameters must satisfy mu_x, mu_y >= -1/2");
  }
}

bool DunklParams::allows_spinor_pairing() const {
  auto is_integer = [](double v) { return std::fabs(v - std::round(v)) < 1e-12; };
  if (mu_x < 0.0 || mu_y < 0.0) return false;
  const bool both_integer = is_integer(mu_x) && is_integer(mu_y);
  const bool both_half = is_integer(mu_x - 0.5) && is_integer(mu_y - 0.5);
  return both_integer || both_half;
}

Complex dunkl_derivative(const ScalarField2D& field, Axis axis, Point p, const DunklParams& params,
                         double h) {
  require_step(h);
  const double mu = axis == Axis::X ? params.mu_x : params.mu_y;
  Complex value = partial(field, axis, p, h);
  if (mu != 0.0) value += mu * reflection_quotient(field, axis, p, 10.0 * h);
  return value;
}

Complex dunkl_laplacian(const ScalarField2D& field, Point p, const DunklParams& params, double h) {
  require_step(h);
  Complex value{};
  for (Axis axis : {Axis::X, Axis::Y}) {
    const double mu = axis == Axis::X ? params.mu_x : params.mu_y;
    const Complex second = second_partial(field, axis, p, h);
    value += second;
    if (mu == 0.0) continue;
    const double threshold = 10.0 * h;
    if (near_axis(p, axis, threshold)) {
      // Locally even: 2 mu/t df/dt -> 2 mu d2f/dt2 and the reflection term vanishes.
      require_locally_even(field, axis, p, threshold);
      value += 2.0 * mu * second;
      continue;
    }
    const double t = coordinate(p, axis);
    value += 2.0 * mu / t * partial(field, axis, p, h);
    value += mu / t * reflection_quotient(field, axis, p, threshold);
  }
  return value;
}

Complex angular_j(const ScalarField2D& field, PolarPoint p, const DunklParams& params, double h) {
  require_step(h);
  const Point q = p.cartesian();
  const double threshold = 10.0 * h * p.rho;
  Complex inner = d_phi(field, p, h);
  // cot(phi) (f - R_y f) = x (f - R_y f) / y, and tan(phi) (f - R_x f) = y (f - R_x f) / x.
  if (params.mu_y != 0.0) inner += params.mu_y * q.x * reflection_quotient(field, Axis::Y, q, threshold);
  if (params.mu_x != 0.0) inner -= params.mu_x * q.y * reflection_quotient(field, Axis::X, q, threshold);
  return kI * inner;
}

Complex angular_b(const ScalarField2D& field, PolarPoint p, const DunklParams& params, double h) {
  require_step(h);
  const Point q = p.cartesian();
  const double threshold = 10.0 * h * p.rho;
  const double rho2 = p.rho * p.rho;
  const Complex first = d_phi(field, p, h);
  const Complex second = d2_phi(field, p, h);
  Complex value = -0.5 * second;

  if (params.mu_x != 0.0) {
    if (near_axis(q, Axis::X, threshold)) {
      // tan(phi) df/dphi -> -d2f/dphi2 for a field even across x = 0.
      require_locally_even(field, Axis::X, q, threshold);
      value -= params.mu_x * second;
    } else {
      value += params.mu_x * (q.y / q.x) * first;
      // (1 - R_x) f / (2 cos^2) = rho^2 (f - R_x f) / (2 x^2)
      value += params.mu_x * rho2 / (2.0 * q.x) * reflection_quotient(field, Axis::X, q, threshold);
    }
  }
  if (params.mu_y != 0.0) {
    if (near_axis(q, Axis::Y, threshold)) {
      require_locally_even(field, Axis::Y, q, threshold);
      value -= params.mu_y * second;
    } else {
      value -= params.mu_y * (q.x / q.y) * first;
      value += params.mu_y * rho2 / (2.0 * q.y) * reflection_quotient(field, Axis::Y, q, threshold);
    }
  }
  return value;
}

Complex kg_apply(Component component, const ScalarField2D& field, const DunklParams& params,
                 const OscillatorConfig& config, PolarPoint p, double h) {
  require_step(h);
  require_radius(p, h);
  const double omega_scale = config.m * config.omega_tilde() / config.hbar;
  const double rho = p.rho;

  const Complex f = field.at(p);
  const Complex f_plus = field.at({rho + h, p.phi});
  const Complex f_minus = field.at({rho - h, p.phi});
  const Complex f_rr = (f_plus - 2.0 * f + f_minus) / (h * h);
  const Complex f_r = (f_plus - f_minus) / (2.0 * h);

  Complex value = -0.5 * f_rr - (0.5 + params.mu_plus()) / rho * f_r;
  value += angular_b(field, p, params, h) / (rho * rho);
  if (omega_scale != 0.0) {
    const Point q = p.cartesian();
    const Complex reflections = f + params.mu_x * reflected_value(field, Axis::X, q) +
                                params.mu_y * reflected_value(field, Axis::Y, q);
    const double sign = component == Component::Upper ? -1.0 : 1.0;
    value += omega_scale * angular_j(field, p, params, h);
    value += sign * omega_scale * reflections;
    value += 0.5 * omega_scale * omega_scale * rho * rho * f;
  }
  return value;
}

Complex dirac_lowering(const ScalarField2D& field, const DunklParams& params,
                       const OscillatorConfig& config, Point p, double h) {
  const Complex dx = dunkl_derivative(field, Axis::X, p, params, h);
  const Complex dy = dunkl_derivative(field, Axis::Y, p, params, h);
  const double hbar_c = config.hbar * config.c;
  const double mcw = config.m * config.c * config.omega_tilde();
  return -kI * hbar_c * (dx - kI * dy) + kI * mcw * Complex{p.x, -p.y} * field(p);
}

Complex dirac_raising(const ScalarField2D& field, const DunklParams& params,
                      const OscillatorConfig& config, Point p, double h) {
  const Complex dx = dunkl_derivative(field, Axis::X, p, params, h);
  const Complex dy = dunkl_derivative(field, Axis::Y, p, params, h);
  const double hbar_c = config.hbar * config.c;
  const double mcw = config.m * config.c * config.omega_tilde();
  return -kI * hbar_c * (dx + kI * dy) - kI * mcw * Complex{p.x, p.y} * field(p);
}

DiracResidual dirac_apply(const ScalarField2D& upper, const ScalarField2D& lower, double energy,
                          const DunklParams& params, const OscillatorConfig& config, Point p,
                          double h) {
  const double rest = config.rest_energy();
  return {dirac_lowering(lower, params, config, p, h) - (energy - rest) * upper(p),
          dirac_raising(upper, params, config, p, h) - (energy + rest) * lower(p)};
}

}  // namespace dunkl
