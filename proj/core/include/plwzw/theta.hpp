#pragma once

#include <complex>

namespace plwzw {

/// Jacobi theta_1(z | tau = i eps) with unit period,
/// theta_1(z) = 2 sum_{m >= 0} (-1)^m q^{(m + 1/2)^2} sin((2m + 1) pi z), q = exp(-pi eps).
/// Terms are accumulated in log space so large imaginary z does not overflow.
std::complex<double> theta1(std::complex<double> z, double eps, int terms = 24);

/// d/dz theta_1(z | i eps), same series differentiated term by term.
std::complex<double> theta1_d(std::complex<double> z, double eps, int terms = 24);

} // namespace plwzw
