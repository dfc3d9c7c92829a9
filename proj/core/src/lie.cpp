#include "plwzw/lie.hpp"

#include "plwzw/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace plwzw {

RootSystem::RootSystem(int n) : n_(n), diag_(Eigen::MatrixXd::Zero(n, n - 1)) {
  // H^mu = diag(1, ..., 1, -mu, 0, ...) / sqrt(mu (mu + 1)), mu = 1..n-1
  for (int mu = 1; mu < n; ++mu) {
    const double s = 1.0 / std::sqrt(static_cast<double>(mu) * (mu + 1));
    for (int k = 0; k < mu; ++k) diag_(k, mu - 1) = s;
    diag_(mu, mu - 1) = -mu * s;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) positive_.push_back({i, j});
  all_ = positive_;
  for (const auto& r : positive_) all_.push_back(r.negated());
}

double RootSystem::pairing(const Root& alpha, const CartanElement& h) const {
  const RVec d = diagonal(h);
  return d(alpha.i) - d(alpha.j);
}

double RootSystem::pairing(const Root& alpha, int mu) const {
  return diag_(alpha.i, mu) - diag_(alpha.j, mu);
}

RVec RootSystem::diagonal(const CartanElement& h) const {
  if (h.rank() != rank())
    throw InvalidArgument("Cartan element has rank " + std::to_string(h.rank()) + ", expected " +
                          std::to_string(rank()));
  return diag_ * h.coords;
}

double RootSystem::min_positive_pairing(const CartanElement& h) const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& r : positive_) m = std::min(m, pairing(r, h));
  return m;
}

AlgebraRep::AlgebraRep(int n) : roots_(n) {
  for (int mu = 0; mu < n - 1; ++mu) {
    Mat h = Mat::Zero(n, n);
    for (int k = 0; k < n; ++k) h(k, k) = roots_.cartan_diagonals()(k, mu);
    cartan_.push_back(std::move(h));
  }
}

Mat AlgebraRep::step(const Root& alpha) const {
  Mat e = Mat::Zero(n(), n());
  e(alpha.i, alpha.j) = 1.0;
  return e;
}

Mat AlgebraRep::exp_cartan(const CartanElement& h) const {
  const RVec d = roots_.diagonal(h);
  Mat e = Mat::Zero(n(), n());
  for (int k = 0; k < n(); ++k) e(k, k) = std::exp(d(k));
  return e;
}

AlgebraRep build_sl_rep(int n) {
  if (n < 2 || n > 6) throw InvalidArgument("build_sl_rep: n must lie in [2, 6], got " + std::to_string(n));
  return AlgebraRep(n);
}

TwoTensor::TwoTensor(int n, Mat mat) : n_(n), mat_(std::move(mat)) {
  if (mat_.rows() != n * n || mat_.cols() != n * n) throw InvalidArgument("TwoTensor: matrix is not n^2 x n^2");
}

TwoTensor TwoTensor::zero(int n) { return {n, Mat::Zero(n * n, n * n)}; }
TwoTensor TwoTensor::identity(int n) { return {n, Mat::Identity(n * n, n * n)}; }

TwoTensor TwoTensor::kron(const Mat& a, const Mat& b) {
  const int n = static_cast<int>(a.rows());
  if (b.rows() != n || a.cols() != n || b.cols() != n) throw InvalidArgument("TwoTensor::kron: factor size mismatch");
  Mat m(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.block(i * n, j * n, n, n) = a(i, j) * b;
  return {n, std::move(m)};
}

TwoTensor TwoTensor::swap_operator(int n) {
  Mat p = Mat::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) p(i * n + k, k * n + i) = 1.0;
  return {n, std::move(p)};
}

TwoTensor TwoTensor::swapped() const {
  Mat out(n_ * n_, n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k)
      for (int j = 0; j < n_; ++j)
        for (int l = 0; l < n_; ++l) out(k * n_ + i, l * n_ + j) = mat_(i * n_ + k, j * n_ + l);
  return {n_, std::move(out)};
}

TwoTensor& TwoTensor::operator+=(const TwoTensor& o) {
  mat_ += o.mat_;
  return *this;
}
TwoTensor& TwoTensor::operator-=(const TwoTensor& o) {
  mat_ -= o.mat_;
  return *this;
}
TwoTensor& TwoTensor::operator*=(cplx s) {
  mat_ *= s;
  return *this;
}

TwoTensor operator*(const TwoTensor& a, const TwoTensor& b) { return {a.n_, a.mat_ * b.mat_}; }
TwoTensor commutator(const TwoTensor& a, const TwoTensor& b) { return {a.n_, a.mat_ * b.mat_ - b.mat_ * a.mat_}; }

double TwoTensor::max_abs() const { return plwzw::max_abs(mat_); }

double max_abs(const Mat& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

TwoTensor casimir(const AlgebraRep& rep) {
  const int n = rep.n();
  TwoTensor c = TwoTensor::zero(n);
  for (const auto& h : rep.cartan()) c += TwoTensor::kron(h, h);
  const auto& rs = rep.root_system();
  for (const auto& a : rs.positive_roots()) {
    const double w = rs.norm_sq(a) / 2.0;
    const Mat ep = rep.step(a);
    const Mat em = rep.step(a.negated());
    c += cplx(w) * (TwoTensor::kron(em, ep) + TwoTensor::kron(ep, em));
  }
  return c;
}

TwoTensor classical_r(const AlgebraRep& rep) {
  const int n = rep.n();
  TwoTensor r = TwoTensor::zero(n);
  const auto& rs = rep.root_system();
  for (const auto& a : rs.positive_roots()) {
    const cplx w = I_unit * rs.norm_sq(a) / 2.0;
    const Mat ep = rep.step(a);
    const Mat em = rep.step(a.negated());
    r += w * (TwoTensor::kron(em, ep) - TwoTensor::kron(ep, em));
  }
  return r;
}

double ad_invariance_residual(const TwoTensor& t, const AlgebraRep& rep) {
  if (t.n() != rep.n()) throw InvalidArgument("ad_invariance_residual: dimension mismatch");
  const int n = rep.n();
  const Mat id = Mat::Identity(n, n);
  std::vector<Mat> gens = rep.cartan();
  for (const auto& a : rep.root_system().all_roots()) gens.push_back(rep.step(a));
  double worst = 0.0;
  for (const auto& x : gens) {
    const TwoTensor ad = TwoTensor::kron(x, id) + TwoTensor::kron(id, x);
    worst = std::max(worst, commutator(ad, t).max_abs());
  }
  return worst;
}

namespace {

// T acts on slots (s1, s2) of the triple space, identity on the third.
Mat embed_pair(const TwoTensor& t, int s1, int s2) {
  const int n = t.n();
  const int other = 3 - s1 - s2;
  const int dim = n * n * n;
  Mat out = Mat::Zero(dim, dim);
  auto flat = [n](const int idx[3]) { return (idx[0] * n + idx[1]) * n + idx[2]; };
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) {
          const cplx v = t.mat()(i * n + k, j * n + l);
          if (v == cplx(0.0)) continue;
          for (int m = 0; m < n; ++m) {
            int row[3], col[3];
            row[s1] = i;
            row[s2] = k;
            row[other] = m;
            col[s1] = j;
            col[s2] = l;
            col[other] = m;
            out(flat(row), flat(col)) += v;
          }
        }
  return out;
}

} // namespace

Mat embed12(const TwoTensor& t) { return embed_pair(t, 0, 1); }
Mat embed13(const TwoTensor& t) { return embed_pair(t, 0, 2); }
Mat embed23(const TwoTensor& t) { return embed_pair(t, 1, 2); }

Mat embed_single(const Mat& x, int slot) {
  const int n = static_cast<int>(x.rows());
  const Mat id = Mat::Identity(n, n);
  if (slot == 0) return embed12(TwoTensor::kron(x, id));
  if (slot == 1) return embed12(TwoTensor::kron(id, x));
  if (slot == 2) return embed23(TwoTensor::kron(id, x));
  throw InvalidArgument("embed_single: slot must be 0, 1 or 2");
}

} // namespace plwzw
