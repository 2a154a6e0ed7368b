#pragma once

// Classical special functions used by the closed-form eigenstates.
//
// All functions are pure and reentrant. Domain violations throw
// dunkl::DomainError.

namespace dunkl::special {

/// Largest polynomial degree accepted by the forward recurrences.
inline constexpr int kMaxDegree = 200;

/// Bessel J switches from the ascending series to Miller's backward
/// recurrence at this argument.
inline constexpr double kBesselSeriesCutoff = 12.0;

inline constexpr double kBesselMaxOrder = 200.0;
inline constexpr double kBesselMaxArgument = 1.0e4;

/// Jacobi polynomial P_n^{(alpha,beta)}(x) by forward three-term recurrence.
/// n = -1 is accepted and returns 0, so that expressions of the form
/// c * P_{n-1} vanish for n = 0.
double jacobi_p(int n, double alpha, double beta, double x);

/// Generalized Laguerre polynomial L_k^{alpha}(x).
double laguerre_l(int k, double alpha, double x);

/// Bessel function of the first kind J_nu(x) for 0 <= nu <= 200, 0 <= x <= 1e4.
double bessel_j(double nu, double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace dunkl::special
