#include "plwzw/loop.hpp"

#include "fft_grid.hpp"
#include "plwzw/errors.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace plwzw {

FourierLoop::FourierLoop(int n, int m_min, std::vector<Mat> coeff) : n_(n), m_min_(m_min), coeff_(std::move(coeff)) {
  if (n < 1) throw InvalidArgument("FourierLoop: matrix size must be positive");
  if (coeff_.empty()) throw InvalidArgument("FourierLoop: empty mode window");
  for (const auto& c : coeff_) {
    if (c.rows() != n || c.cols() != n) throw InvalidArgument("FourierLoop: coefficient has wrong shape");
    if (!c.allFinite()) throw InvalidArgument("FourierLoop: non-finite coefficient");
  }
}

FourierLoop FourierLoop::identity(int n) { return constant(Mat::Identity(n, n)); }

FourierLoop FourierLoop::constant(const Mat& value) {
  return {static_cast<int>(value.rows()), 0, std::vector<Mat>{value}};
}

FourierLoop FourierLoop::zero(int n, int m_min, int m_max) {
  if (m_max < m_min) throw InvalidArgument("FourierLoop::zero: empty window");
  return {n, m_min, std::vector<Mat>(static_cast<size_t>(m_max - m_min + 1), Mat::Zero(n, n))};
}

FourierLoop FourierLoop::from_grid(const std::vector<Mat>& samples, int lo, int hi) {
  if (samples.empty()) throw InvalidArgument("from_grid: no samples");
  return {static_cast<int>(samples[0].rows()), lo, detail::grid_to_modes(samples, lo, hi)};
}

Mat FourierLoop::coeff(int m) const {
  if (m < m_min() || m > m_max()) return Mat::Zero(n_, n_);
  return coeff_[static_cast<size_t>(m - m_min_)];
}

void FourierLoop::set_coeff(int m, const Mat& value) {
  if (m < m_min() || m > m_max()) throw InvalidArgument("set_coeff: mode outside window");
  coeff_[static_cast<size_t>(m - m_min_)] = value;
}

Mat FourierLoop::eval(double sigma) const {
  Mat out = Mat::Zero(n_, n_);
  for (int m = m_min(); m <= m_max(); ++m)
    out += std::exp(cplx(0.0, m * sigma)) * coeff_[static_cast<size_t>(m - m_min_)];
  return out;
}

std::vector<Mat> FourierLoop::to_grid(int N) const { return detail::modes_to_grid(coeff_, m_min_, n_, N); }

FourierLoop FourierLoop::window(int lo, int hi) const {
  if (hi < lo) throw InvalidArgument("window: empty mode window");
  std::vector<Mat> c;
  c.reserve(static_cast<size_t>(hi - lo + 1));
  for (int m = lo; m <= hi; ++m) c.push_back(coeff(m));
  return {n_, lo, std::move(c)};
}

FourierLoop FourierLoop::trimmed(double thr) const {
  int lo = m_min();
  int hi = m_max();
  auto small = [&](int m) { return max_abs(coeff(m)) < thr; };
  while (hi > 0 && hi > lo && small(hi)) --hi;
  while (lo < 0 && lo < hi && small(lo)) ++lo;
  return window(std::min(lo, 0), std::max(hi, 0));
}

double FourierLoop::mass_outside(int lo, int hi) const {
  double s = 0.0;
  for (int m = m_min(); m <= m_max(); ++m)
    if (m < lo || m > hi) s += coeff_[static_cast<size_t>(m - m_min_)].norm();
  return s;
}

double FourierLoop::coeff_distance(const FourierLoop& g) const {
  double d = 0.0;
  for (int m = std::min(m_min(), g.m_min()); m <= std::max(m_max(), g.m_max()); ++m)
    d = std::max(d, max_abs(coeff(m) - g.coeff(m)));
  return d;
}

int grid_size_for(int span) {
  int N = 1;
  while (N < 4 * span + 1) N *= 2;
  return N;
}

namespace {

void check_same_n(const FourierLoop& f, const FourierLoop& g, const char* op) {
  if (f.n() != g.n()) throw InvalidArgument(std::string(op) + ": matrix size mismatch");
}

} // namespace

double grid_distance(const FourierLoop& f, const FourierLoop& g, int N) {
  check_same_n(f, g, "grid_distance");
  if (N <= 0) N = grid_size_for(std::max(f.m_max(), g.m_max()) - std::min(f.m_min(), g.m_min()) + 1);
  const auto a = f.to_grid(N);
  const auto b = g.to_grid(N);
  double d = 0.0;
  for (size_t s = 0; s < a.size(); ++s) d = std::max(d, max_abs(a[s] - b[s]));
  return d;
}

FourierLoop multiply(const FourierLoop& f, const FourierLoop& g, int lo, int hi, double* truncated_mass) {
  check_same_n(f, g, "multiply");
  const int full_lo = f.m_min() + g.m_min();
  const int full_hi = f.m_max() + g.m_max();
  const int N = grid_size_for(std::max(full_hi - full_lo + 1, hi - lo + 1));
  const auto a = f.to_grid(N);
  const auto b = g.to_grid(N);
  std::vector<Mat> p(a.size());
  for (size_t s = 0; s < a.size(); ++s) p[s] = a[s] * b[s];
  if (truncated_mass != nullptr) {
    const FourierLoop full = FourierLoop::from_grid(p, full_lo, full_hi);
    *truncated_mass = full.mass_outside(lo, hi);
  }
  return FourierLoop::from_grid(p, lo, hi);
}

FourierLoop multiply(const FourierLoop& f, const FourierLoop& g, int M_out, double* truncated_mass) {
  return multiply(f, g, -M_out, M_out, truncated_mass);
}

FourierLoop multiply(const FourierLoop& f, const FourierLoop& g) {
  return multiply(f, g, f.m_min() + g.m_min(), f.m_max() + g.m_max());
}

FourierLoop inverse(const FourierLoop& f, int lo, int hi, double* residual) {
  const int N = std::max(64, grid_size_for(std::max(f.span(), hi - lo + 1)));
  const auto a = f.to_grid(N);
  std::vector<Mat> inv(a.size());
  for (size_t s = 0; s < a.size(); ++s) {
    const cplx det = a[s].determinant();
    if (std::abs(det) < 1e-10) throw SingularLoopError("inverse: loop is singular at grid point " + std::to_string(s));
    inv[s] = a[s].inverse();
  }
  FourierLoop out = FourierLoop::from_grid(inv, lo, hi);
  if (residual != nullptr) {
    const auto b = out.to_grid(N);
    const Mat id = Mat::Identity(f.n(), f.n());
    double r = 0.0;
    for (size_t s = 0; s < a.size(); ++s) r = std::max(r, max_abs(a[s] * b[s] - id));
    *residual = r;
  }
  return out;
}

FourierLoop inverse(const FourierLoop& f, int M_out, double* residual) { return inverse(f, -M_out, M_out, residual); }

FourierLoop adjoint(const FourierLoop& f) {
  std::vector<Mat> c;
  c.reserve(static_cast<size_t>(f.span()));
  for (int m = -f.m_max(); m <= -f.m_min(); ++m) c.push_back(f.coeff(-m).adjoint());
  return {f.n(), -f.m_max(), std::move(c)};
}

FourierLoop continue_down(const FourierLoop& f, double eps) {
  std::vector<Mat> c = f.coeffs();
  for (int m = f.m_min(); m <= f.m_max(); ++m) c[static_cast<size_t>(m - f.m_min())] *= std::exp(m * eps);
  return {f.n(), f.m_min(), std::move(c)};
}

double continuation_gain(const FourierLoop& f, double eps) {
  return std::max(std::exp(f.m_min() * eps), std::exp(f.m_max() * eps));
}

FourierLoop rotate(const FourierLoop& f, double tau) {
  const double t = std::remainder(tau, 2.0 * std::numbers::pi);
  if (t == 0.0) return f;
  std::vector<Mat> c = f.coeffs();
  for (int m = f.m_min(); m <= f.m_max(); ++m)
    c[static_cast<size_t>(m - f.m_min())] *= std::exp(cplx(0.0, -m * t));
  return {f.n(), f.m_min(), std::move(c)};
}

FourierLoop scale(const FourierLoop& f, cplx s) {
  std::vector<Mat> c = f.coeffs();
  for (auto& x : c) x *= s;
  return {f.n(), f.m_min(), std::move(c)};
}

FourierLoop add(const FourierLoop& f, const FourierLoop& g) {
  check_same_n(f, g, "add");
  const int lo = std::min(f.m_min(), g.m_min());
  const int hi = std::max(f.m_max(), g.m_max());
  std::vector<Mat> c;
  for (int m = lo; m <= hi; ++m) c.push_back(f.coeff(m) + g.coeff(m));
  return {f.n(), lo, std::move(c)};
}

FourierLoop left_mul(const Mat& x, const FourierLoop& f) {
  std::vector<Mat> c = f.coeffs();
  for (auto& m : c) m = x * m;
  return {f.n(), f.m_min(), std::move(c)};
}

FourierLoop right_mul(const FourierLoop& f, const Mat& x) {
  std::vector<Mat> c = f.coeffs();
  for (auto& m : c) m = m * x;
  return {f.n(), f.m_min(), std::move(c)};
}

double an_defect(const Mat& x) {
  double d = 0.0;
  for (int i = 0; i < x.rows(); ++i) {
    for (int j = 0; j < i; ++j) d = std::max(d, std::abs(x(i, j)));
    d = std::max(d, std::abs(x(i, i).imag()));
    if (x(i, i).real() <= 0.0) d = std::max(d, std::abs(x(i, i).real()) + 1.0);
  }
  return d;
}

double unitarity_defect(const Mat& x) {
  return max_abs(x.adjoint() * x - Mat::Identity(x.rows(), x.cols()));
}

double unitarity_defect(const FourierLoop& f, int N) {
  if (N <= 0) N = std::max(64, grid_size_for(f.span()));
  double d = 0.0;
  for (const auto& v : f.to_grid(N)) d = std::max(d, unitarity_defect(v));
  return d;
}

AnalyticityReport analyticity(const FourierLoop& f, int N) {
  AnalyticityReport r;
  for (int m = f.m_min(); m <= f.m_max(); ++m) {
    if (m < 0) r.neg_mass += f.coeff(m).norm();
    if (m > 0) r.pos_mass += f.coeff(m).norm();
  }
  const Mat c0 = f.coeff(0);
  r.value_at_zero = c0;
  r.value_at_inf = c0;
  r.unitarity_defect = unitarity_defect(f, N);
  r.an_defect = an_defect(c0);
  r.g_defect = unitarity_defect(c0);
  return r;
}

Membership membership(const FourierLoop& f, Group which, double tol) {
  Membership out{analyticity(f), false};
  const auto& r = out.report;
  switch (which) {
  case Group::LG: out.member = r.unitarity_defect <= tol; break;
  case Group::B: out.member = r.neg_mass <= tol && r.an_defect <= tol; break;
  case Group::Bbar: out.member = r.pos_mass <= tol && r.g_defect <= tol; break;
  }
  return out;
}

namespace {

Mat gaussian_matrix(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Mat x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = dist(rng);
      const double im = dist(rng);
      x(i, j) = cplx(re, im);
    }
  return x;
}

Mat traceless(const Mat& x) {
  const int n = static_cast<int>(x.rows());
  return x - (x.trace() / static_cast<double>(n)) * Mat::Identity(n, n);
}

FourierLoop random_band(int n, int M, double amplitude, std::uint64_t seed, bool hermitian) {
  std::mt19937_64 rng(seed);
  std::vector<Mat> c(static_cast<size_t>(2 * M + 1), Mat::Zero(n, n));
  for (int m = 0; m <= M; ++m) {
    Mat x = traceless(gaussian_matrix(n, rng));
    if (hermitian) {
      if (m == 0) x = (x + x.adjoint()).eval() / 2.0;
      c[static_cast<size_t>(M + m)] = x;
      c[static_cast<size_t>(M - m)] = x.adjoint();
    } else {
      c[static_cast<size_t>(M + m)] = x;
      if (m > 0) c[static_cast<size_t>(M - m)] = traceless(gaussian_matrix(n, rng));
    }
  }
  double total = 0.0;
  for (const auto& x : c) total += x.norm();
  if (total > 0.0)
    for (auto& x : c) x *= amplitude / total;
  return {n, -M, std::move(c)};
}

} // namespace

FourierLoop random_hermitian_loop(int n, int M, double amplitude, std::uint64_t seed) {
  if (M < 0) throw InvalidArgument("random_hermitian_loop: M must be nonnegative");
  return random_band(n, M, amplitude, seed, true);
}

FourierLoop pointwise_exp(const FourierLoop& x, cplx s, int lo, int hi) {
  const int N = grid_size_for(std::max(x.span(), hi - lo + 1));
  auto g = x.to_grid(N);
  for (auto& v : g) v = (s * v).exp();
  return FourierLoop::from_grid(g, lo, hi);
}

FourierLoop random_near_identity(int n, int M, double amplitude, std::uint64_t seed, LoopTarget target) {
  if (n < 2) throw InvalidArgument("random_near_identity: n must be at least 2");
  if (M < 0) throw InvalidArgument("random_near_identity: M must be nonnegative");
  if (amplitude < 0.0) throw InvalidArgument("random_near_identity: amplitude must be nonnegative");
  if (amplitude == 0.0) return FourierLoop::identity(n);
  const FourierLoop x = random_band(n, M, amplitude, seed, target == LoopTarget::LG);
  const int W = std::max(8, 8 * M);
  const cplx s = target == LoopTarget::LG ? cplx(0.0, 1.0) : cplx(1.0, 0.0);
  return pointwise_exp(x, s, -W, W).trimmed(1e-15);
}

} // namespace plwzw
