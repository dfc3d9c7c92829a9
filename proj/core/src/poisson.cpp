#include "plwzw/poisson.hpp"

#include "plwzw/errors.hpp"

#include <cmath>
#include <numbers>

namespace plwzw {

namespace {

Mat eye(int n) { return Mat::Identity(n, n); }

TwoTensor hh_tensor(const AlgebraRep& rep) {
  TwoTensor out = TwoTensor::zero(rep.n());
  for (const auto& h : rep.cartan()) out += TwoTensor::kron(h, h);
  return out;
}

} // namespace

ExchangeBrackets::ExchangeBrackets(const AlgebraRep& rep) : hyp_(rep) {}

TwoTensor ExchangeBrackets::LL_eps(const Mat& L1, const Mat& L2, double delta, double eps) const {
  const int n = rep().n();
  const TwoTensor LL = TwoTensor::kron(L1, L2);
  const TwoTensor L1I = TwoTensor::kron(L1, eye(n));
  const TwoTensor IL2 = TwoTensor::kron(eye(n), L2);
  const TwoTensor r0 = trig().r_hat(delta);
  TwoTensor out = LL * r0 + r0 * LL;
  out -= IL2 * trig().r_hat_shifted(delta, eps, +1) * L1I;
  out -= L1I * trig().r_hat_shifted(delta, eps, -1) * IL2;
  out *= cplx(eps);
  return out;
}

TwoTensor ExchangeBrackets::LL_inf(const Mat& L1, const Mat& L2, double delta) const {
  const int n = rep().n();
  const TwoTensor LL = TwoTensor::kron(L1, L2);
  const TwoTensor L1I = TwoTensor::kron(L1, eye(n));
  const TwoTensor IL2 = TwoTensor::kron(eye(n), L2);
  const TwoTensor r0 = trig().r_hat(delta);
  const TwoTensor rp = trig().r() + I_unit * trig().C();
  const TwoTensor rm = trig().r() - I_unit * trig().C();
  return LL * r0 + r0 * LL - L1I * rp * IL2 - IL2 * rm * L1I;
}

TwoTensor ExchangeBrackets::kk_eps(const Mat& k1, const Mat& k2, const EllipticKernel& ek, const CartanElement& x,
                                   double delta) const {
  const TwoTensor kk = TwoTensor::kron(k1, k2);
  const cplx e(ek.eps());
  return e * (kk * ek.felder_r(x, delta)) - e * (trig().r_hat(delta) * kk);
}

TwoTensor ExchangeBrackets::tk_eps(const Mat& t, const Mat& k) const { return TwoTensor::kron(t, k) * hh_tensor(rep()); }

TwoTensor ExchangeBrackets::kk_inf(const Mat& k1, const Mat& k2, const CartanElement& a, double delta,
                                   bool dynamical) const {
  const TwoTensor kk = TwoTensor::kron(k1, k2);
  const TwoTensor r0 = trig().r_hat(delta);
  const TwoTensor right = dynamical ? hyp_.r_hat_inf(a, delta) : r0 - trig().r();
  return kk * right - r0 * kk;
}

Mat ExchangeBrackets::ak_inf(const Mat& k, int mu) const {
  if (mu < 0 || mu >= rep().rank()) throw InvalidArgument("ak_inf: Cartan index out of range");
  return a_bracket_coefficient * k * rep().cartan()[mu];
}

TwoTensor ExchangeBrackets::eak_inf(const CartanElement& a, const Mat& k) const {
  const Mat ea = rep().exp_cartan(a);
  TwoTensor out = TwoTensor::zero(rep().n());
  for (int mu = 0; mu < rep().rank(); ++mu) out += TwoTensor::kron(ea * rep().cartan()[mu], ak_inf(k, mu));
  return out;
}

TwoTensor ExchangeBrackets::KK_dual(const Mat& K1, const Mat& K2, const CartanElement& atilde, double delta) const {
  const TwoTensor kk = TwoTensor::kron(K1, K2);
  TwoTensor v = kk * hyp_.r_hat_inf(atilde, delta) - trig().r_hat(delta) * kk;
  v *= cplx(-1.0);
  return v;
}

TensorBracketValue bracket_LL_eps(const AlgebraRep& rep, const FourierLoop& L, double s, double sp, double eps) {
  return {ExchangeBrackets(rep).LL_eps(L.eval(s), L.eval(sp), s - sp, eps), s, sp};
}

TensorBracketValue bracket_LL_inf(const AlgebraRep& rep, const FourierLoop& L, double s, double sp) {
  return {ExchangeBrackets(rep).LL_inf(L.eval(s), L.eval(sp), s - sp), s, sp};
}

TensorBracketValue bracket_kk_eps(const AlgebraRep& rep, const FourierLoop& k, const CartanElement& t_coords, double s,
                                  double sp, double eps, int series_terms) {
  const EllipticKernel ek(rep, eps, series_terms);
  return {ExchangeBrackets(rep).kk_eps(k.eval(s), k.eval(sp), ek, t_coords, s - sp), s, sp};
}

TensorBracketValue bracket_kk_inf(const AlgebraRep& rep, const PhasePointKA& p, double s, double sp) {
  return {ExchangeBrackets(rep).kk_inf(p.k.eval(s), p.k.eval(sp), p.a, s - sp), s, sp};
}

Mat dual_K(const AlgebraRep& rep, const PhasePointDual& q, double sigma) {
  return q.ktilde.eval(sigma) * rep.exp_cartan(q.atilde);
}

TensorBracketValue bracket_KK_dual(const AlgebraRep& rep, const PhasePointDual& q, double s, double sp) {
  return {ExchangeBrackets(rep).KK_dual(dual_K(rep, q, s), dual_K(rep, q, sp), q.atilde, s - sp), s, sp};
}

namespace {

// Triple tensor T[i1 i2 i3 j1 j2 j3], row-major.
class Triple {
public:
  explicit Triple(int n) : n_(n), v_(static_cast<size_t>(std::pow(n, 6)), cplx(0.0)) {}
  cplx& operator()(int i1, int i2, int i3, int j1, int j2, int j3) {
    return v_[static_cast<size_t>(((((i1 * n_ + i2) * n_ + i3) * n_ + j1) * n_ + j2) * n_ + j3)];
  }
  [[nodiscard]] double max_abs() const {
    double m = 0.0;
    for (const auto& x : v_) m = std::max(m, std::abs(x));
    return m;
  }

private:
  int n_;
  std::vector<cplx> v_;
};

// Slice X_{ij} of a bracket tensor: the matrix (k, l) -> T(i n + k, j n + l).
Mat slice(const TwoTensor& t, int i, int j) {
  const int n = t.n();
  Mat out(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) out(k, l) = t.at(i, j, k, l);
  return out;
}

using Inner = std::function<TwoTensor(int A, int B, int C, int i, int j)>;

// J[i0 i1 i2, j0 j1 j2] = {x0, {x1, x2}} + {x1, {x2, x0}} + {x2, {x0, x1}}.
double cyclic_jacobiator(int n, const Inner& inner) {
  Triple J(n);
  const int perms[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& p : perms) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const TwoTensor t = inner(p[0], p[1], p[2], i, j);
        for (int ib = 0; ib < n; ++ib)
          for (int ic = 0; ic < n; ++ic)
            for (int jb = 0; jb < n; ++jb)
              for (int jc = 0; jc < n; ++jc) {
                int ii[3], jj[3];
                ii[p[0]] = i;
                ii[p[1]] = ib;
                ii[p[2]] = ic;
                jj[p[0]] = j;
                jj[p[1]] = jb;
                jj[p[2]] = jc;
                J(ii[0], ii[1], ii[2], jj[0], jj[1], jj[2]) += t.at(ib, jb, ic, jc);
              }
      }
  }
  return J.max_abs();
}

void check_three(const std::vector<Mat>& values, const std::vector<double>& sigmas) {
  if (values.size() != 3 || sigmas.size() != 3) throw InvalidArgument("jacobiator: need three points");
}

} // namespace

double jacobiator_linear(const PointBracket& bracket, int n, const std::vector<Mat>& values,
                         const std::vector<double>& sigmas) {
  check_three(values, sigmas);
  return cyclic_jacobiator(n, [&](int A, int B, int C, int i, int j) {
    const TwoTensor bab = bracket(values[A], values[B], sigmas[A], sigmas[B]);
    const TwoTensor bac = bracket(values[A], values[C], sigmas[A], sigmas[C]);
    return bracket(slice(bab, i, j), values[C], sigmas[B], sigmas[C]) +
           bracket(values[B], slice(bac, i, j), sigmas[B], sigmas[C]);
  });
}

double jacobiator_inf(const ExchangeBrackets& br, const std::vector<Mat>& k, const CartanElement& a,
                      const std::vector<double>& sigmas, const JacobiOptions& opt) {
  check_three(k, sigmas);
  const auto& rep = br.rep();
  const int n = rep.n();
  auto bkk = [&](const Mat& x, const Mat& y, double s1, double s2) { return br.kk_inf(x, y, a, s1 - s2, opt.dynamical); };
  return cyclic_jacobiator(n, [&](int A, int B, int C, int i, int j) {
    const TwoTensor bab = bkk(k[A], k[B], sigmas[A], sigmas[B]);
    const TwoTensor bac = bkk(k[A], k[C], sigmas[A], sigmas[C]);
    TwoTensor inner = bkk(slice(bab, i, j), k[C], sigmas[B], sigmas[C]) + bkk(k[B], slice(bac, i, j), sigmas[B], sigmas[C]);
    if (opt.dynamical) {
      const TwoTensor kbc = TwoTensor::kron(k[B], k[C]);
      for (int mu = 0; mu < rep.rank(); ++mu) {
        // {k_A,ij, a_mu} = -{a_mu, k_A,ij}
        const cplx da = -opt.a_coefficient * (k[A] * rep.cartan()[mu])(i, j);
        inner += da * (kbc * br.hyperbolic().derivative(a, mu));
      }
    }
    return inner;
  });
}

double limit_current_residual(const ExchangeBrackets& br, const Mat& L1, const Mat& L2, double delta, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("limit_current_residual: eps must be positive");
  (void)br.trig().r_hat(delta);
  const int n = br.rep().n();
  const cplx I = I_unit;
  const double pe = std::numbers::pi * eps;
  // cot(z) + i for Im z > 0 and cot(z) - i for Im z < 0, without cancellation.
  const cplx wp = std::exp(2.0 * I * cplx(delta / 2.0, pe));
  const cplx plus = I * 2.0 * wp / (wp - 1.0);
  const cplx wm = std::exp(-2.0 * I * cplx(delta / 2.0, -pe));
  const cplx minus = I * 2.0 * wm / (1.0 - wm);
  const TwoTensor L1I = TwoTensor::kron(L1, eye(n));
  const TwoTensor IL2 = TwoTensor::kron(eye(n), L2);
  const TwoTensor& C = br.trig().C();
  TwoTensor res = (-plus) * (IL2 * C * L1I);
  res -= minus * (L1I * C * IL2);
  return res.max_abs();
}

double limit_current_residual_direct(const ExchangeBrackets& br, const Mat& L1, const Mat& L2, double delta,
                                     double eps) {
  TwoTensor d = br.LL_eps(L1, L2, delta, eps);
  d *= cplx(1.0 / eps);
  d -= br.LL_inf(L1, L2, delta);
  return d.max_abs();
}

double evolve_invariance_check(const AlgebraRep& rep, const PhasePointKA& p, double tau, double s, double sp) {
  const PhasePointKA q = evolve(p, tau);
  const TensorBracketValue v1 = bracket_kk_inf(rep, q, s + tau, sp + tau);
  const TensorBracketValue v0 = bracket_kk_inf(rep, p, s, sp);
  return (v1.value - v0.value).max_abs();
}

} // namespace plwzw
