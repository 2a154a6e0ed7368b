#include "dunkl/angular_sector.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/errors.hpp"
#include "dunkl/special_functions.hpp"

namespace dunkl {

namespace {

using special::jacobi_p;
using special::log_gamma;

double lg(double x) {
  if (!(x > 0.0)) throw DomainError("angular normalization: Gamma argument must be positive");
  return log_gamma(x);
}

double jacobi_argument(double c, double s) { return std::clamp(s * s - c * c, -1.0, 1.0); }

double norm_pp(int n, const DunklParams& p) {
  const double tail = std::log(2.0) + lg(n + p.mu_x + 0.5) + lg(n + p.mu_y + 0.5);
  if (n == 0) return std::exp(0.5 * (lg(p.mu_plus() + 1.0) - tail));
  return std::exp(0.5 * (std::log(2.0 * n + p.mu_plus()) + lg(n + p.mu_plus()) + lg(n + 1.0) - tail));
}

double norm_mm(int n, const DunklParams& p) {
  const double tail = std::log(2.0) + lg(n + p.mu_x + 0.5) + lg(n + p.mu_y + 0.5);
  return std::exp(0.5 * (std::log(2.0 * n + p.mu_plus()) + lg(n + p.mu_plus() + 1.0) + lg(n) - tail));
}

// (n - 1/2)! is read as Gamma(n + 1/2).
double norm_half(double n, const DunklParams& p, double gamma_x, double gamma_y) {
  const double head = lg(n + p.mu_plus() + 0.5) + lg(n + 0.5);
  const double tail = std::log(2.0) + lg(gamma_x) + lg(gamma_y);
  const double lead = 2.0 * n + p.mu_plus();
  if (!(lead > 0.0)) throw DomainError("angular normalization: 2n + mu_x + mu_y must be positive");
  return std::exp(0.5 * (std::log(lead) + head - tail));
}

void require_integer_index(int n) {
  if (n < 0) throw DomainError("angular index must be a non-negative integer in this sector");
}

void require_half_index(AngularIndex n) {
  if (n.is_integer() || n.twice() < 1) {
    throw DomainError("angular index must lie in {1/2, 3/2, ...} in this sector");
  }
}

}  // namespace

void SectorLabel::validate() const {
  if ((sx != 1 && sx != -1) || (sy != 1 && sy != -1)) {
    throw DomainError("sector labels must be +1 or -1");
  }
}

AngularIndex AngularIndex::from_twice(int twice) {
  if (twice < 0) throw DomainError("angular index must be non-negative");
  return AngularIndex(twice);
}

AngularIndex AngularIndex::from_value(double value) {
  const double twice = 2.0 * value;
  const double rounded = std::round(twice);
  if (!(std::fabs(twice - rounded) < 2e-12) || rounded < 0.0) {
    throw DomainError("angular index must be a non-negative multiple of 1/2");
  }
  return AngularIndex(static_cast<int>(rounded));
}

void AngularMode::validate() const {
  sector.validate();
  params.validate();
  if (sector.epsilon() == 1) {
    if (!n.is_integer()) throw DomainError("eps = +1 sectors need an integer angular index");
    if (n.twice() == 0 && branch == Branch::Minus) {
      throw DomainError("n = 0 has a single eigenfunction (lambda = 0); use the Plus branch");
    }
  } else {
    require_half_index(n);
  }
}

double phi_pp_cs(int n, const DunklParams& params, double c, double s) {
  require_integer_index(n);
  return norm_pp(n, params) *
         jacobi_p(n, params.mu_x - 0.5, params.mu_y - 0.5, jacobi_argument(c, s));
}

double phi_mm_cs(int n, const DunklParams& params, double c, double s) {
  require_integer_index(n);
  if (n == 0) return 0.0;  // P_{-1} = 0
  return norm_mm(n, params) * s * c *
         jacobi_p(n - 1, params.mu_x + 0.5, params.mu_y + 0.5, jacobi_argument(c, s));
}

double phi_mp_cs(AngularIndex n, const DunklParams& params, double c, double s) {
  require_half_index(n);
  const double nv = n.value();
  const int degree = (n.twice() - 1) / 2;
  return norm_half(nv, params, nv + params.mu_x + 1.0, nv + params.mu_y) * c *
         jacobi_p(degree, params.mu_x + 0.5, params.mu_y - 0.5, jacobi_argument(c, s));
}

double phi_pm_cs(AngularIndex n, const DunklParams& params, double c, double s) {
  require_half_index(n);
  const double nv = n.value();
  const int degree = (n.twice() - 1) / 2;
  return norm_half(nv, params, nv + params.mu_x, nv + params.mu_y + 1.0) * s *
         jacobi_p(degree, params.mu_x - 0.5, params.mu_y + 0.5, jacobi_argument(c, s));
}

double phi_pp(int n, const DunklParams& params, double phi) {
  return phi_pp_cs(n, params, std::cos(phi), std::sin(phi));
}
double phi_mm(int n, const DunklParams& params, double phi) {
  return phi_mm_cs(n, params, std::cos(phi), std::sin(phi));
}
double phi_mp(AngularIndex n, const DunklParams& params, double phi) {
  return phi_mp_cs(n, params, std::cos(phi), std::sin(phi));
}
double phi_pm(AngularIndex n, const DunklParams& params, double phi) {
  return phi_pm_cs(n, params, std::cos(phi), std::sin(phi));
}

ScalarField2D f_eigenfunction(const AngularMode& mode) {
  mode.validate();
  const DunklParams params = mode.params;
  const AngularIndex n = mode.n;
  const double b = branch_sign(mode.branch);
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

  // Direction cosines of (x, y); the origin is mapped to angle 0, where every
  // radial factor multiplying F either vanishes or F is constant.
  auto direction = [](double x, double y) {
    const double rho = std::hypot(x, y);
    if (rho == 0.0) return std::pair{1.0, 0.0};
    return std::pair{x / rho, y / rho};
  };

  if (mode.sector.epsilon() == 1) {
    const int k = n.twice() / 2;
    if (k == 0) {
      const double value = phi_pp_cs(0, params, 1.0, 0.0);
      return ScalarField2D([value](double, double) { return Complex{value, 0.0}; }, Parity::Even,
                           Parity::Even);
    }
    // Evaluate once to surface Gamma-domain errors at construction time.
    (void)phi_pp_cs(k, params, 1.0, 0.0);
    (void)phi_mm_cs(k, params, 1.0, 0.0);
    return ScalarField2D([=](double x, double y) {
      const auto [c, s] = direction(x, y);
      return inv_sqrt2 * Complex{phi_pp_cs(k, params, c, s), b * phi_mm_cs(k, params, c, s)};
    });
  }
  (void)phi_mp_cs(n, params, 1.0, 0.0);
  (void)phi_pm_cs(n, params, 1.0, 0.0);
  return ScalarField2D([=](double x, double y) {
    const auto [c, s] = direction(x, y);
    return inv_sqrt2 * Complex{phi_mp_cs(n, params, c, s), -b * phi_pm_cs(n, params, c, s)};
  });
}

double lambda_eigenvalue(const AngularMode& mode) {
  mode.validate();
  const double n = mode.n.value();
  const auto& p = mode.params;
  const double magnitude = mode.sector.epsilon() == 1
                               ? 2.0 * std::sqrt(n * (n + p.mu_plus()))
                               : 2.0 * std::sqrt((n + p.mu_x) * (n + p.mu_y));
  return branch_sign(mode.branch) * magnitude;
}

double radial_order(const AngularMode& mode) {
  const double lambda = lambda_eigenvalue(mode);
  const double mu = mode.sector.epsilon() == 1 ? mode.params.mu_plus() : mode.params.mu_minus();
  return std::sqrt(lambda * lambda + mu * mu);
}

}  // namespace dunkl
