#pragma once

#include "plwzw/lie.hpp"

#include <functional>

namespace plwzw {

/// cot for complex arguments, stable for large |Im z|.
cplx cot_complex(cplx z);

/// r_hat(sigma) = r + C cot(sigma / 2).
class TrigKernel {
public:
  explicit TrigKernel(const AlgebraRep& rep);

  [[nodiscard]] const AlgebraRep& rep() const { return rep_; }
  [[nodiscard]] const TwoTensor& r() const { return r_; }
  [[nodiscard]] const TwoTensor& C() const { return c_; }

  /// Throws PoleError when sigma = 0 mod 2 pi (within 1e-12).
  [[nodiscard]] TwoTensor r_hat(double sigma) const;
  /// r + C cot((sigma + sign 2 pi i eps) / 2); sign must be +1 or -1.
  [[nodiscard]] TwoTensor r_hat_shifted(double sigma, double eps, int sign) const;
  /// r + C cot(z / 2) for an arbitrary complex argument.
  [[nodiscard]] TwoTensor r_hat_complex(cplx z) const;

private:
  AlgebraRep rep_;
  TwoTensor r_;
  TwoTensor c_;
};

/// Hyperbolic dynamical kernel
/// r_inf(a, sigma) = sum_alpha i coth(alpha(a)) E^{-alpha} (x) E^alpha + C cot(sigma / 2),
/// the sum running over all roots.
class HyperbolicKernel {
public:
  explicit HyperbolicKernel(const AlgebraRep& rep);

  [[nodiscard]] const AlgebraRep& rep() const { return trig_.rep(); }
  [[nodiscard]] const TrigKernel& trig() const { return trig_; }

  /// sigma-independent part. Throws WallError if |alpha(a)| < 1e-10 for some root.
  [[nodiscard]] TwoTensor dynamical_part(const CartanElement& a) const;
  [[nodiscard]] TwoTensor r_hat_inf(const CartanElement& a, double sigma) const;
  /// Exact d/da_mu of r_hat_inf, using d coth(x)/dx = 1 - coth(x)^2.
  [[nodiscard]] TwoTensor derivative(const CartanElement& a, int mu) const;

private:
  TrigKernel trig_;
};

/// Elliptic dynamical kernel built from theta_1(z | i eps):
/// rho(z) = theta_1'(z) / theta_1(z),
/// sigma_w(z) = theta_1(w - z) theta_1'(0) / (theta_1(w) theta_1(z)).
class EllipticKernel {
public:
  /// Calibration of the prefactors. Both blocks and the dynamical argument
  /// carry 1/pi and the whole tensor carries 1/eps, so that the kernel at
  /// t = exp(i a / eps) tends to r_inf(a, sigma) as eps grows.
  static constexpr double block_scale = 0.31830988618379067;
  static constexpr double shift_scale = 0.31830988618379067;

  EllipticKernel(const AlgebraRep& rep, double eps, int series_terms = 24);

  [[nodiscard]] const AlgebraRep& rep() const { return rep_; }
  [[nodiscard]] double eps() const { return eps_; }
  [[nodiscard]] int series_terms() const { return terms_; }

  /// Kernel at the torus point t = exp(i sum_mu x_mu H^mu).
  /// Throws PoleError at sigma = 0 mod 2 pi and DynamicalPoleError when theta_1(w_alpha) vanishes.
  [[nodiscard]] TwoTensor felder_r(const CartanElement& x, double sigma) const;
  /// felder_r at the chamber point t_eps = exp(i a / eps).
  [[nodiscard]] TwoTensor at_chamber(const CartanElement& a, double sigma) const;

private:
  AlgebraRep rep_;
  double eps_;
  int terms_;
};

using DynamicalKernel = std::function<TwoTensor(const CartanElement&, double)>;
using SpectralKernel = std::function<TwoTensor(double)>;

/// Coefficient of the derivative terms in the dynamical Yang-Baxter residual.
inline constexpr cplx dybe_coefficient{0.0, -1.0};

/// || [r12, r13] + [r12, r23] + [r13, r23] ||_inf with r_ij = kernel(sigma_i - sigma_j).
double cybe_residual(const SpectralKernel& kernel, double s1, double s2, double s3);
double cybe_residual(const TrigKernel& kernel, double s1, double s2, double s3);

struct DybeOptions {
  double step = 1e-5;
  bool drop_dynamical = false;
};

/// CYBE residual plus dybe_coefficient * sum_mu (H^mu_1 d_mu r23 - H^mu_2 d_mu r13 + H^mu_3 d_mu r12),
/// with d_mu by central differences in the chamber variable.
double dybe_residual(const DynamicalKernel& kernel, const AlgebraRep& rep, const CartanElement& a, double s1,
                     double s2, double s3, const DybeOptions& opt = {});

DynamicalKernel as_dynamical(const HyperbolicKernel& k);
DynamicalKernel as_dynamical(const EllipticKernel& k);

} // namespace plwzw
