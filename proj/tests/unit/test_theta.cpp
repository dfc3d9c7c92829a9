#include "plwzw/theta.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

using plwzw::theta1;
using plwzw::theta1_d;
using cd = std::complex<double>;

namespace {

// Jacobi triple product form, q = exp(-pi eps).
cd theta1_product(cd z, double eps, int terms = 60) {
  const double q = std::exp(-std::numbers::pi * eps);
  cd prod = 2.0 * std::pow(q, 0.25) * std::sin(std::numbers::pi * z);
  for (int m = 1; m <= terms; ++m) {
    const double q2 = std::pow(q, 2 * m);
    prod *= (1.0 - q2) * (1.0 - 2.0 * q2 * std::cos(2.0 * std::numbers::pi * z) + q2 * q2);
  }
  return prod;
}

} // namespace

TEST_CASE("theta1 agrees with the triple product") {
  for (double eps : {0.5, 1.0, 2.0, 4.0})
    for (cd z : {cd(0.13, 0.0), cd(0.4, 0.2), cd(-0.7, 0.35), cd(0.25, -0.1)}) {
      const cd a = theta1(z, eps);
      const cd b = theta1_product(z, eps);
      CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(b)));
    }
}

TEST_CASE("theta1 is odd, vanishes at 0 and is antiperiodic") {
  const double eps = 1.3;
  CHECK(std::abs(theta1(0.0, eps)) < 1e-16);
  const cd z(0.31, 0.12);
  CHECK(std::abs(theta1(-z, eps) + theta1(z, eps)) < 1e-14);
  CHECK(std::abs(theta1(z + 1.0, eps) + theta1(z, eps)) < 1e-13);
}

TEST_CASE("theta1 quasi-periodicity in the imaginary direction") {
  // theta1(z + tau) = -exp(-i pi tau - 2 pi i z) theta1(z), tau = i eps
  const double eps = 1.7;
  const cd tau(0.0, eps);
  const cd z(0.21, 0.05);
  const cd lhs = theta1(z + tau, eps);
  const cd rhs = -std::exp(-cd(0.0, std::numbers::pi) * tau - cd(0.0, 2.0 * std::numbers::pi) * z) * theta1(z, eps);
  CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(rhs));
}

TEST_CASE("theta1 derivative against central differences of the product") {
  const double h = 1e-5;
  for (double eps : {0.8, 2.5})
    for (cd z : {cd(0.2, 0.0), cd(0.37, 0.3)}) {
      const cd fd = (theta1_product(z + h, eps) - theta1_product(z - h, eps)) / (2.0 * h);
      CHECK(std::abs(theta1_d(z, eps) - fd) <= 1e-8 * std::max(1.0, std::abs(fd)));
    }
}

TEST_CASE("series matches the product off the real axis") {
  for (double eps : {0.5, 2.0}) {
    const cd z(0.3, 2.5);
    const cd p = theta1_product(z, eps);
    CHECK(std::abs(theta1(z, eps) - p) <= 1e-12 * std::abs(p));
  }
}
