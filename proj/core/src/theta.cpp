#include "plwzw/theta.hpp"

#include "plwzw/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace plwzw {

namespace {

using cplx = std::complex<double>;

void check(double eps, int terms) {
  if (!(eps > 0.0)) throw InvalidArgument("theta1: eps must be positive, got " + std::to_string(eps));
  if (terms < 1) throw InvalidArgument("theta1: need at least one series term");
}

// sum_m (-1)^m q^{(m+1/2)^2} w_m(u_m), u_m = (2m+1) pi z, where
// sin u = (e^{iu} - e^{-iu}) / 2i and cos u = (e^{iu} + e^{-iu}) / 2.
template <bool Derivative>
cplx series(cplx z, double eps, int terms) {
  check(eps, terms);
  const double pi = std::numbers::pi;
  const double log_q = -pi * eps;
  const cplx I(0.0, 1.0);
  cplx sum = 0.0;
  for (int m = 0; m < terms; ++m) {
    const double h = m + 0.5;
    const double k = 2.0 * m + 1.0;
    const cplx iu = I * k * pi * z;
    const cplx plus = std::exp(log_q * h * h + iu);
    const cplx minus = std::exp(log_q * h * h - iu);
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    if constexpr (Derivative)
      sum += sign * k * pi * (plus + minus) / 2.0;
    else
      sum += sign * (plus - minus) / (2.0 * I);
  }
  return 2.0 * sum;
}

} // namespace

std::complex<double> theta1(std::complex<double> z, double eps, int terms) { return series<false>(z, eps, terms); }

std::complex<double> theta1_d(std::complex<double> z, double eps, int terms) { return series<true>(z, eps, terms); }

} // namespace plwzw
