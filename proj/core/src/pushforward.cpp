#include "plwzw/pushforward.hpp"

#include "plwzw/errors.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <functional>
#include <map>

namespace plwzw {

double DiscretizedChart::condition_number() const {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(Pi);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return 0.0;
  const double smin = s(s.size() - 1);
  return smin > 0.0 ? s(0) / smin : std::numeric_limits<double>::infinity();
}

namespace {

// Double Fourier modes A_{p,q} over [-Q, Q]^2 of
// F(sigma, sigma') = (k(sigma)^dagger (x) k(sigma')^dagger) X (k(sigma) (x) k(sigma')).
class DoubleModes {
public:
  DoubleModes(const FourierLoop& k, const TwoTensor& x) {
    const int W = std::max(-k.m_min(), k.m_max());
    Q_ = 2 * W;
    const int N = grid_size_for(2 * W + 1);
    const auto kg = k.to_grid(N);
    const size_t Ns = static_cast<size_t>(N);
    std::vector<std::vector<Mat>> rows(Ns);
    for (size_t s = 0; s < Ns; ++s) {
      std::vector<Mat> samples(Ns);
      for (size_t t = 0; t < Ns; ++t) {
        const TwoTensor f = TwoTensor::kron(kg[s].adjoint(), kg[t].adjoint()) * x * TwoTensor::kron(kg[s], kg[t]);
        samples[t] = f.mat();
      }
      rows[s] = FourierLoop::from_grid(samples, -Q_, Q_).coeffs();
    }
    modes_.assign(static_cast<size_t>(2 * Q_ + 1), {});
    for (int q = -Q_; q <= Q_; ++q) {
      std::vector<Mat> col(Ns);
      for (size_t s = 0; s < Ns; ++s) col[s] = rows[s][static_cast<size_t>(q + Q_)];
      const auto pm = FourierLoop::from_grid(col, -Q_, Q_).coeffs();
      for (int p = -Q_; p <= Q_; ++p) modes_[static_cast<size_t>(p + Q_)].push_back(pm[static_cast<size_t>(p + Q_)]);
    }
  }

  [[nodiscard]] int Q() const { return Q_; }
  [[nodiscard]] bool has(int p, int q) const { return std::abs(p) <= Q_ && std::abs(q) <= Q_; }
  [[nodiscard]] const Mat& at(int p, int q) const {
    return modes_[static_cast<size_t>(p + Q_)][static_cast<size_t>(q + Q_)];
  }

private:
  int Q_ = 0;
  std::vector<std::vector<Mat>> modes_;
};

cplx kappa(int j) { return j == 0 ? cplx(0.0) : cplx(0.0, j > 0 ? -1.0 : 1.0); }

std::vector<std::vector<Mat>> chart_basis(const AlgebraRep& rep, int M) {
  const int n = rep.n();
  const double r2 = std::sqrt(2.0);
  auto e = [n](int i, int j) {
    Mat x = Mat::Zero(n, n);
    x(i, j) = 1.0;
    return x;
  };
  auto blank = [&]() { return std::vector<Mat>(static_cast<size_t>(2 * M + 1), Mat::Zero(n, n)); };
  std::vector<std::vector<Mat>> out;
  for (const auto& h : rep.cartan()) {
    auto v = blank();
    v[static_cast<size_t>(M)] = I_unit * h;
    out.push_back(std::move(v));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      auto v = blank();
      v[static_cast<size_t>(M)] = (e(i, j) - e(j, i)) / r2;
      out.push_back(std::move(v));
      auto w = blank();
      w[static_cast<size_t>(M)] = I_unit * (e(i, j) + e(j, i)) / r2;
      out.push_back(std::move(w));
    }
  std::vector<Mat> gens = rep.cartan();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) gens.push_back(e(i, j));
  for (int m = 1; m <= M; ++m)
    for (const auto& x : gens)
      for (const cplx ph : {cplx(1.0), I_unit}) {
        auto v = blank();
        v[static_cast<size_t>(M + m)] = ph * x / r2;
        v[static_cast<size_t>(M - m)] = -(ph * x).adjoint() / r2;
        out.push_back(std::move(v));
      }
  return out;
}

// sum_{ijkl} u_ij w_kl T(i n + k, j n + l)
cplx contract(const Mat& u, const Mat& w, const Mat& t) {
  const int n = static_cast<int>(u.rows());
  cplx s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (u(i, j) == cplx(0.0)) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) s += u(i, j) * w(k, l) * t(i * n + k, j * n + l);
    }
  return s;
}

} // namespace

DiscretizedChart discretized_chart(const AlgebraRep& rep, const PhasePointKA& base, int M) {
  if (M < 0) throw InvalidArgument("discretized_chart: M must be nonnegative");
  const int n = rep.n();
  const HyperbolicKernel hyp(rep);
  const TrigKernel& trig = hyp.trig();
  const FourierLoop k0 = base.k.trimmed(1e-15);
  const DoubleModes Ar(k0, trig.r());
  const DoubleModes AC(k0, trig.C());
  const TwoTensor D = hyp.dynamical_part(base.a);

  std::map<std::pair<int, int>, Mat> pc;
  for (int p = -M; p <= M; ++p)
    for (int q = -M; q <= M; ++q) {
      Mat v = Mat::Zero(n * n, n * n);
      if (p == 0 && q == 0) v += D.mat();
      if (p + q == 0) v += kappa(p) * trig.C().mat();
      if (Ar.has(p, q)) v -= Ar.at(p, q);
      for (int j = -2 * AC.Q() - M; j <= 2 * AC.Q() + M; ++j)
        if (j != 0 && AC.has(p - j, q + j)) v -= kappa(j) * AC.at(p - j, q + j);
      pc.emplace(std::make_pair(p, q), std::move(v));
    }

  DiscretizedChart chart;
  chart.M = M;
  chart.base = {k0, base.a};
  chart.basis = chart_basis(rep, M);
  const int S = static_cast<int>(chart.basis.size());
  const int R = rep.rank();
  Eigen::MatrixXcd pi = Eigen::MatrixXcd::Zero(S + R, S + R);
  for (int s = 0; s < S; ++s)
    for (int t = 0; t < S; ++t) {
      cplx tot = 0.0;
      for (int p = -M; p <= M; ++p) {
        const Mat us = chart.basis[static_cast<size_t>(s)][static_cast<size_t>(p + M)].conjugate();
        if (max_abs(us) == 0.0) continue;
        for (int q = -M; q <= M; ++q) {
          const Mat wt = chart.basis[static_cast<size_t>(t)][static_cast<size_t>(q + M)].conjugate();
          if (max_abs(wt) == 0.0) continue;
          tot += contract(us, wt, pc.at({p, q}));
        }
      }
      pi(s, t) = tot;
    }
  for (int mu = 0; mu < R; ++mu)
    for (int s = 0; s < S; ++s) {
      const Mat v0 = chart.basis[static_cast<size_t>(s)][static_cast<size_t>(M)];
      const cplx val = (v0.conjugate().array() * (a_bracket_coefficient * rep.cartan()[mu]).array()).sum();
      pi(S + mu, s) = val;
      pi(s, S + mu) = -val;
    }
  chart.Pi = pi.real();
  chart.imag_defect = pi.imag().cwiseAbs().maxCoeff();
  chart.antisym_defect = (chart.Pi + chart.Pi.transpose()).cwiseAbs().maxCoeff();
  return chart;
}

namespace {

struct KSamples {
  Mat at_s;
  Mat at_sp;
};

KSamples dual_samples(const AlgebraRep& rep, const PhasePointKA& p, double s, double sp, const PushforwardOptions& opt) {
  const DualityForward f = duality_forward(rep, p, opt.duality_modes, opt.tol);
  return {dual_K(rep, f.q, s), dual_K(rep, f.q, sp)};
}

} // namespace

PushforwardReport duality_pushforward_check(const AlgebraRep& rep, const PhasePointDual& q, double s, double sp, int M,
                                            const PushforwardOptions& opt) {
  const int n = rep.n();
  const ExchangeBrackets br(rep);
  const PhasePointKA base = duality_inverse(rep, q, opt.duality_modes, opt.tol).p;
  require_chamber(rep.root_system(), base.a);
  const DiscretizedChart chart = discretized_chart(rep, base, M);
  const FourierLoop& k0 = chart.base.k;
  const int S = static_cast<int>(chart.basis.size());
  const int R = rep.rank();
  const double h = opt.h_fd;

  // Fourth-order central differences along each chart direction.
  std::vector<KSamples> grads;
  grads.reserve(static_cast<size_t>(S + R));
  auto stencil = [&](const std::function<KSamples(double)>& at) {
    const KSamples p1 = at(h), m1 = at(-h), p2 = at(2.0 * h), m2 = at(-2.0 * h);
    const double w = 12.0 * h;
    return KSamples{(8.0 * (p1.at_s - m1.at_s) - (p2.at_s - m2.at_s)) / w,
                    (8.0 * (p1.at_sp - m1.at_sp) - (p2.at_sp - m2.at_sp)) / w};
  };
  const FourierLoop one = FourierLoop::identity(n);
  for (int t = 0; t < S; ++t) {
    const FourierLoop v(n, -M, chart.basis[static_cast<size_t>(t)]);
    grads.push_back(stencil([&](double x) {
      return dual_samples(rep, {multiply(k0, add(one, scale(v, x))), base.a}, s, sp, opt);
    }));
  }
  for (int mu = 0; mu < R; ++mu) {
    grads.push_back(stencil([&](double x) {
      RVec e = RVec::Zero(R);
      e(mu) = x;
      return dual_samples(rep, {k0, CartanElement(base.a.coords + e)}, s, sp, opt);
    }));
  }

  Mat pushed = Mat::Zero(n * n, n * n);
  for (int a = 0; a < S + R; ++a)
    for (int b = 0; b < S + R; ++b) {
      const double w = chart.Pi(a, b);
      if (w == 0.0) continue;
      const Mat& ga = grads[static_cast<size_t>(a)].at_s;
      const Mat& gb = grads[static_cast<size_t>(b)].at_sp;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) pushed(i * n + k, j * n + l) += ga(i, j) * w * gb(k, l);
    }

  PushforwardReport rep_out;
  rep_out.M = M;
  rep_out.pushed = TwoTensor(n, pushed);
  rep_out.expected = br.KK_dual(dual_K(rep, q, s), dual_K(rep, q, sp), q.atilde, s - sp);
  rep_out.per_entry = (pushed - rep_out.expected.mat()).cwiseAbs().cast<cplx>();
  rep_out.max_rel_dev = max_abs(pushed - rep_out.expected.mat()) / rep_out.expected.max_abs();
  rep_out.pi_antisym = chart.antisym_defect;
  rep_out.pi_imag = chart.imag_defect;
  return rep_out;
}

} // namespace plwzw
