#include "plwzw/phase.hpp"

#include "plwzw/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <random>
#include <string>

namespace plwzw {

void require_chamber(const RootSystem& rs, const CartanElement& a, double margin) {
  if (a.rank() != rs.rank()) throw InvalidArgument("Cartan element has the wrong rank");
  const double m = rs.min_positive_pairing(a);
  if (!(m >= margin))
    throw WallError("a is not inside the Weyl chamber (min alpha(a) = " + std::to_string(m) + ", margin " +
                    std::to_string(margin) + ")");
}

CartanElement cartan_from_simple_roots(const AlgebraRep& rep, const RVec& values) {
  const int n = rep.n();
  if (values.size() != n - 1) throw InvalidArgument("cartan_from_simple_roots: need n - 1 values");
  RVec d = RVec::Zero(n);
  for (int i = 1; i < n; ++i) d(i) = d(i - 1) - values(i - 1);
  d.array() -= d.mean();
  return CartanElement(rep.root_system().cartan_diagonals().transpose() * d);
}

PhasePointKA random_phase_point(const AlgebraRep& rep, int M, double amplitude, std::uint64_t seed, double alpha_lo,
                                double alpha_hi) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> u(alpha_lo, alpha_hi);
  RVec v(rep.rank());
  for (int i = 0; i < rep.rank(); ++i) v(i) = u(rng);
  return {random_near_identity(rep.n(), M, amplitude, seed), cartan_from_simple_roots(rep, v)};
}

FourierLoop moment_map_eps(const AlgebraRep& rep, const FourierLoop& k, const CartanElement& t_coords, double eps,
                           int M_out, double tol) {
  const Mat e = rep.exp_cartan(eps * t_coords);
  return iwasawa_eps(right_mul(k, e), eps, M_out, tol).b;
}

FourierLoop moment_map_inf(const AlgebraRep& rep, const PhasePointKA& p, int M_out, double tol) {
  return birkhoff_rh(right_mul(p.k, rep.exp_cartan(p.a)), M_out, tol).b;
}

DualityForward duality_forward(const AlgebraRep& rep, const PhasePointKA& p, int M_out, double tol) {
  const Mat ea = rep.exp_cartan(p.a);
  const Mat ema = rep.exp_cartan(-p.a);
  DualityForward out;
  out.factors = birkhoff_rh(right_mul(p.k, ea), M_out, tol);
  const auto& f = out.factors;
  const int W = -f.bbar.m_min();
  out.q.ktilde = inverse(f.bbar, -W, 0).trimmed(1e-15);
  out.q.atilde = -p.a;

  // e^{-a} k^{-1} RH(k e^a) against bbar
  const int Wk = std::max(-p.k.m_min(), p.k.m_max()) + W;
  const FourierLoop kinv = inverse(p.k, -Wk, Wk);
  const FourierLoop expr = left_mul(ema, multiply(kinv, f.b));
  out.expr_agreement = grid_distance(expr, f.bbar);

  const auto rep_kt = analyticity(out.q.ktilde);
  out.ktilde_pos_mass = rep_kt.pos_mass;
  out.ktilde_g_defect = rep_kt.g_defect;
  return out;
}

DualityInverse duality_inverse(const AlgebraRep& rep, const PhasePointDual& q, int M_out, double tol) {
  const CartanElement a = -q.atilde;
  const FourierLoop x = multiply(right_mul(q.ktilde, rep.exp_cartan(-2.0 * a)), adjoint(q.ktilde));
  const int Wp = std::max(x.m_max(), -x.m_min()) + 4;
  const FourierLoop phi = inverse(x, -Wp, Wp);
  const SpectralFactor sf = spectral_factorize(phi, M_out, tol, FactorSide::Right);
  const int Wk = std::max(-q.ktilde.m_min(), q.ktilde.m_max()) + M_out;
  FourierLoop k = right_mul(multiply(sf.b, q.ktilde, -Wk, Wk), rep.exp_cartan(-a));
  DualityInverse out;
  out.p = {std::move(k), a};
  out.unitarity_defect = unitarity_defect(out.p.k);
  out.iterations = sf.iterations;
  return out;
}

PhasePointKA act_left(const FourierLoop& h, const PhasePointKA& p, double tol) {
  if (!membership(h, Group::LG, tol).member) throw InvalidArgument("act_left: actor is not in LG");
  return {multiply(h, p.k), p.a};
}

PhasePointDual act_left_dual(const FourierLoop& h, const PhasePointDual& q, double tol) {
  if (!membership(h, Group::Bbar, tol).member) throw InvalidArgument("act_left_dual: actor is not in B-bar");
  const FourierLoop prod = multiply(h, q.ktilde);
  return {prod.window(prod.m_min(), 0), q.atilde};
}

PhasePointKA evolve(const PhasePointKA& p, double tau) { return {rotate(p.k, tau), p.a}; }

FourierLoop random_bbar(int n, int M, double amplitude, std::uint64_t seed, int window) {
  if (M < 1) throw InvalidArgument("random_bbar: M must be at least 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  auto gauss = [&]() {
    Mat x(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double re = dist(rng);
        const double im = dist(rng);
        x(i, j) = cplx(re, im);
      }
    return x;
  };
  std::vector<Mat> y;
  double total = 0.0;
  for (int m = -M; m <= 0; ++m) {
    y.push_back(m == 0 ? Mat(Mat::Zero(n, n)) : gauss());
    total += y.back().norm();
  }
  for (auto& v : y) v *= amplitude / total;
  const FourierLoop yl(n, -M, std::move(y));

  Mat h = gauss();
  h = (0.5 * (h + h.adjoint())).eval();
  h -= (h.trace() / static_cast<double>(n)) * Mat::Identity(n, n);
  const Mat u = (cplx(0.0, amplitude / h.norm()) * h).exp();
  return left_mul(u, pointwise_exp(yl, 1.0, -window, 0));
}

} // namespace plwzw
