#include "plwzw/rmatrix.hpp"

#include "plwzw/errors.hpp"
#include "plwzw/theta.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace plwzw {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_pole(double sigma) {
  const double r = std::remainder(sigma, two_pi);
  if (std::abs(r) < 1e-12) throw PoleError("kernel evaluated at coincident points (sigma = " + std::to_string(sigma) + ")");
}

void check_chamber(const RootSystem& rs, const CartanElement& a) {
  for (const auto& alpha : rs.positive_roots())
    if (std::abs(rs.pairing(alpha, a)) < 1e-10) throw WallError("Cartan element lies on a Weyl chamber wall");
}

// E^{-alpha} (x) E^alpha - E^alpha (x) E^{-alpha} for a positive root.
TwoTensor root_pair(const AlgebraRep& rep, const Root& alpha) {
  const Mat ep = rep.step(alpha);
  const Mat em = rep.step(alpha.negated());
  return TwoTensor::kron(em, ep) - TwoTensor::kron(ep, em);
}

} // namespace

cplx cot_complex(cplx z) {
  const cplx I(0.0, 1.0);
  if (z.imag() > 0.0) {
    const cplx w = std::exp(2.0 * I * z);
    return I * (w + 1.0) / (w - 1.0);
  }
  if (z.imag() < 0.0) {
    const cplx w = std::exp(-2.0 * I * z);
    return I * (1.0 + w) / (1.0 - w);
  }
  return 1.0 / std::tan(z.real());
}

TrigKernel::TrigKernel(const AlgebraRep& rep) : rep_(rep), r_(classical_r(rep)), c_(casimir(rep)) {}

TwoTensor TrigKernel::r_hat(double sigma) const {
  check_pole(sigma);
  return r_ + cplx(1.0 / std::tan(sigma / 2.0)) * c_;
}

TwoTensor TrigKernel::r_hat_shifted(double sigma, double eps, int sign) const {
  if (sign != 1 && sign != -1) throw InvalidArgument("r_hat_shifted: sign must be +1 or -1");
  if (eps < 0.0) throw InvalidArgument("r_hat_shifted: eps must be nonnegative");
  if (eps == 0.0) return r_hat(sigma);
  return r_hat_complex(cplx(sigma, sign * two_pi * eps));
}

TwoTensor TrigKernel::r_hat_complex(cplx z) const {
  if (z.imag() == 0.0) return r_hat(z.real());
  return r_ + cot_complex(z / 2.0) * c_;
}

HyperbolicKernel::HyperbolicKernel(const AlgebraRep& rep) : trig_(rep) {}

TwoTensor HyperbolicKernel::dynamical_part(const CartanElement& a) const {
  const auto& rs = rep().root_system();
  check_chamber(rs, a);
  TwoTensor out = TwoTensor::zero(rep().n());
  for (const auto& alpha : rs.positive_roots()) {
    const double c = 1.0 / std::tanh(rs.pairing(alpha, a));
    out += I_unit * c * root_pair(rep(), alpha);
  }
  return out;
}

TwoTensor HyperbolicKernel::r_hat_inf(const CartanElement& a, double sigma) const {
  check_pole(sigma);
  return dynamical_part(a) + cplx(1.0 / std::tan(sigma / 2.0)) * trig_.C();
}

TwoTensor HyperbolicKernel::derivative(const CartanElement& a, int mu) const {
  const auto& rs = rep().root_system();
  if (mu < 0 || mu >= rs.rank()) throw InvalidArgument("derivative: Cartan index out of range");
  check_chamber(rs, a);
  TwoTensor out = TwoTensor::zero(rep().n());
  for (const auto& alpha : rs.positive_roots()) {
    const double c = 1.0 / std::tanh(rs.pairing(alpha, a));
    out += I_unit * (1.0 - c * c) * rs.pairing(alpha, mu) * root_pair(rep(), alpha);
  }
  return out;
}

EllipticKernel::EllipticKernel(const AlgebraRep& rep, double eps, int series_terms)
    : rep_(rep), eps_(eps), terms_(series_terms) {
  if (!(eps > 0.0)) throw InvalidArgument("EllipticKernel: eps must be positive");
  if (series_terms < 1) throw InvalidArgument("EllipticKernel: series_terms must be positive");
}

TwoTensor EllipticKernel::felder_r(const CartanElement& x, double sigma) const {
  check_pole(sigma);
  const auto& rs = rep_.root_system();
  const int n = rep_.n();
  const double z = sigma / two_pi;
  const cplx th_z = theta1(z, eps_, terms_);
  const cplx th_d0 = theta1_d(0.0, eps_, terms_);
  const cplx rho = theta1_d(z, eps_, terms_) / th_z;

  TwoTensor hh = TwoTensor::zero(n);
  for (const auto& h : rep_.cartan()) hh += TwoTensor::kron(h, h);
  TwoTensor out = (eps_ * block_scale * rho) * hh;

  for (const auto& alpha : rs.all_roots()) {
    // <alpha, ln t> = i alpha(x)
    const cplx w = -eps_ * shift_scale * I_unit * rs.pairing(alpha, x);
    const cplx th_w = theta1(w, eps_, terms_);
    if (std::abs(th_w) < 1e-14 * std::abs(th_d0))
      throw DynamicalPoleError("theta_1 vanishes at the dynamical shift of root (" + std::to_string(alpha.i) + "," +
                               std::to_string(alpha.j) + ")");
    const cplx s_w = theta1(w - z, eps_, terms_) * th_d0 / (th_w * th_z);
    const cplx coef = eps_ * block_scale * (rs.norm_sq(alpha) / 2.0) * s_w;
    out += coef * TwoTensor::kron(rep_.step(alpha), rep_.step(alpha.negated()));
  }
  out *= cplx(1.0 / eps_);
  return out;
}

TwoTensor EllipticKernel::at_chamber(const CartanElement& a, double sigma) const {
  return felder_r((1.0 / eps_) * a, sigma);
}

namespace {

Mat cybe_tensor(const TwoTensor& r12, const TwoTensor& r13, const TwoTensor& r23) {
  const Mat a = embed12(r12);
  const Mat b = embed13(r13);
  const Mat c = embed23(r23);
  return (a * b - b * a) + (a * c - c * a) + (b * c - c * b);
}

} // namespace

double cybe_residual(const SpectralKernel& kernel, double s1, double s2, double s3) {
  return max_abs(cybe_tensor(kernel(s1 - s2), kernel(s1 - s3), kernel(s2 - s3)));
}

double cybe_residual(const TrigKernel& kernel, double s1, double s2, double s3) {
  return cybe_residual([&](double s) { return kernel.r_hat(s); }, s1, s2, s3);
}

double dybe_residual(const DynamicalKernel& kernel, const AlgebraRep& rep, const CartanElement& a, double s1,
                     double s2, double s3, const DybeOptions& opt) {
  const int n = rep.n();
  Mat res = cybe_tensor(kernel(a, s1 - s2), kernel(a, s1 - s3), kernel(a, s2 - s3));
  if (opt.drop_dynamical) return max_abs(res);
  const Mat id = Mat::Identity(n, n);
  Mat dyn = Mat::Zero(res.rows(), res.cols());
  for (int mu = 0; mu < rep.rank(); ++mu) {
    RVec e = RVec::Zero(rep.rank());
    e(mu) = opt.step;
    const CartanElement ap(a.coords + e);
    const CartanElement am(a.coords - e);
    auto d = [&](double s) {
      TwoTensor t = kernel(ap, s) - kernel(am, s);
      t *= cplx(1.0 / (2.0 * opt.step));
      return t;
    };
    const Mat& h = rep.cartan()[mu];
    dyn += embed_single(h, 0) * embed23(d(s2 - s3));
    dyn -= embed_single(h, 1) * embed13(d(s1 - s3));
    dyn += embed_single(h, 2) * embed12(d(s1 - s2));
  }
  res += dybe_coefficient * dyn;
  return max_abs(res);
}

DynamicalKernel as_dynamical(const HyperbolicKernel& k) {
  return [k](const CartanElement& a, double s) { return k.r_hat_inf(a, s); };
}

DynamicalKernel as_dynamical(const EllipticKernel& k) {
  return [k](const CartanElement& a, double s) { return k.at_chamber(a, s); };
}

} // namespace plwzw
