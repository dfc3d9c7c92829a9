#include "plwzw/factorize.hpp"

#include "plwzw/errors.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace plwzw {

PointwiseIwasawa iwasawa_pointwise(const Mat& g) {
  const int n = static_cast<int>(g.rows());
  if (g.cols() != n) throw InvalidArgument("iwasawa_pointwise: matrix is not square");
  if (std::abs(g.determinant()) < 1e-12) throw SingularMatrixError("iwasawa_pointwise: |det g| below 1e-12");
  Eigen::HouseholderQR<Mat> qr(g);
  Mat q = qr.householderQ();
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  Mat a = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const cplx d = r(i, i);
    const cplx ph = d / std::abs(d);
    q.col(i) *= ph;
    r.row(i) *= std::conj(ph);
    a(i, i) = std::abs(d);
  }
  Mat nn = r;
  for (int i = 0; i < n; ++i) nn.row(i) /= a(i, i);
  for (int i = 0; i < n; ++i) nn(i, i) = 1.0;
  return {q, a, nn};
}

namespace {

// Strictly positive modes of psi plus half of mode 0, over [0, hi].
FourierLoop plus_half(const FourierLoop& psi, int hi) {
  FourierLoop out = psi.window(0, hi);
  out.set_coeff(0, 0.5 * psi.coeff(0));
  return out;
}

void check_positive(const std::vector<Mat>& grid) {
  for (const auto& v : grid) {
    if (max_abs(v - v.adjoint()) > 1e-10 * std::max(1.0, max_abs(v)))
      throw NotPositiveDefinite("spectral_factorize: symbol is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (v + v.adjoint()), Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 1e-8)
      throw NotPositiveDefinite("spectral_factorize: symbol has eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
  }
}

} // namespace

SpectralFactor spectral_factorize(const FourierLoop& phi, int M_out, double tol, FactorSide side) {
  if (M_out < 0) throw InvalidArgument("spectral_factorize: M_out must be nonnegative");
  const int n = phi.n();
  const int N = 2 * grid_size_for(std::max(phi.span(), 2 * M_out + 1));
  const auto pg = phi.to_grid(N);
  check_positive(pg);
  const bool right = side == FactorSide::Right;

  Eigen::LLT<Mat> llt(0.5 * (phi.coeff(0) + phi.coeff(0).adjoint()));
  if (llt.info() != Eigen::Success) throw NotPositiveDefinite("spectral_factorize: mean of the symbol is not positive");
  const Mat lower = llt.matrixL();
  FourierLoop b = FourierLoop::constant(right ? Mat(lower.adjoint()) : lower).window(0, M_out);

  const Mat id = Mat::Identity(n, n);
  constexpr int max_iter = 50;
  int it = 0;
  double err = 0.0;
  double prev = std::numeric_limits<double>::infinity();
  for (it = 1; it <= max_iter; ++it) {
    const auto bg = b.to_grid(N);
    std::vector<Mat> psi(bg.size());
    std::vector<Mat> binv(bg.size());
    for (size_t s = 0; s < bg.size(); ++s) {
      binv[s] = bg[s].inverse();
      psi[s] = right ? Mat(binv[s].adjoint() * pg[s] * binv[s]) : Mat(binv[s] * pg[s] * binv[s].adjoint());
    }
    const FourierLoop psil = FourierLoop::from_grid(psi, -M_out, M_out);
    err = psil.coeff_distance(FourierLoop::identity(n));
    const auto fg = plus_half(psil, M_out).to_grid(N);
    std::vector<Mat> nb(bg.size());
    for (size_t s = 0; s < bg.size(); ++s) nb[s] = right ? Mat((fg[s] + 0.5 * id) * bg[s]) : Mat(bg[s] * (fg[s] + 0.5 * id));
    b = FourierLoop::from_grid(nb, 0, M_out);
    if (err < 1e-14 || (err < 1e-10 && err > 0.5 * prev)) break;
    prev = err;
  }
  if (it > max_iter && err > tol)
    throw NoConvergence("spectral_factorize: no convergence after 50 iterations (defect " + std::to_string(err) + ")");
  it = std::min(it, max_iter);

  if (right) {
    const auto iw = iwasawa_pointwise(b.coeff(0));
    b = left_mul(iw.k.adjoint(), b);
  } else {
    const auto iw = iwasawa_pointwise(b.coeff(0).inverse());
    b = right_mul(b, iw.k);
  }

  const auto bg = b.to_grid(N);
  double res = 0.0;
  for (size_t s = 0; s < bg.size(); ++s) {
    const Mat prod = right ? Mat(bg[s].adjoint() * bg[s]) : Mat(bg[s] * bg[s].adjoint());
    res = std::max(res, max_abs(prod - pg[s]));
  }
  if (!(res <= tol))
    throw NoConvergence("spectral_factorize: factor residual " + std::to_string(res) + " exceeds tolerance");
  return {b, it, res};
}

IwasawaFactors loop_iwasawa(const FourierLoop& l, int M_out, double tol) {
  const FourierLoop phi = multiply(l, adjoint(l));
  const SpectralFactor sf = spectral_factorize(phi, M_out, tol, FactorSide::Left);
  const int W = std::max(-l.m_min(), l.m_max()) + M_out;
  const FourierLoop binv = inverse(sf.b, 0, W + M_out);
  const FourierLoop u = multiply(binv, l, -W, W);
  IwasawaFactors out{u, sf.b, 0.0, 0.0, sf.iterations};
  out.residual = grid_distance(multiply(sf.b, u), l);
  out.unitarity_defect = unitarity_defect(u);
  if (!(out.residual <= tol))
    throw NoConvergence("loop_iwasawa: reconstruction residual " + std::to_string(out.residual) +
                        " exceeds tolerance; increase M_out");
  return out;
}

IwasawaFactors iwasawa_eps(const FourierLoop& l, double eps, int M_out, double tol) {
  if (eps < 0.0) throw InvalidArgument("iwasawa_eps: eps must be nonnegative");
  if (std::exp(M_out * eps) > 1e8 || continuation_gain(l, eps) > 1e8)
    throw ConditioningError("iwasawa_eps: contour shift amplifies modes beyond 1e8");
  if (eps == 0.0) return loop_iwasawa(l, M_out, tol);
  IwasawaFactors f = loop_iwasawa(continue_down(l, eps), M_out, tol);
  f.b = continue_down(f.b, -eps);
  return f;
}

BirkhoffFactors birkhoff_rh(const FourierLoop& l, int M_out, double tol, const BirkhoffOptions& opt) {
  if (M_out < 0) throw InvalidArgument("birkhoff_rh: M_out must be nonnegative");
  const int n = l.n();
  const int W = std::max(-l.m_min(), l.m_max()) + 2 * M_out + 4;
  const FourierLoop g = inverse(l, -W, W);

  // Rows p = 1 .. W + M_out: sum_j g_{p-j} b_j = 0.
  const int P = W + M_out;
  Mat T = Mat::Zero(n * P, n * (M_out + 1));
  for (int p = 1; p <= P; ++p)
    for (int j = 0; j <= M_out; ++j) T.block((p - 1) * n, j * n, n, n) = g.coeff(p - j);
  Eigen::JacobiSVD<Mat> svd(T, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const int k = static_cast<int>(sv.size());
  const double smax = sv(0);
  const double null_rel = sv(k - 1 - (n - 1)) / smax;
  const double gap_rel = sv(k - 1 - n) / smax;
  if (null_rel > 1e-6 || gap_rel < 1e-3)
    throw NotInDomainError("birkhoff_rh: nullspace dimension is not " + std::to_string(n) + " (singular values " +
                           std::to_string(null_rel) + ", " + std::to_string(gap_rel) + ")");
  Mat ns = svd.matrixV().rightCols(n);
  if (opt.basis_mix.size() != 0) ns = ns * opt.basis_mix;

  std::vector<Mat> bc;
  for (int j = 0; j <= M_out; ++j) bc.push_back(ns.block(j * n, 0, n, n));
  FourierLoop b(n, 0, std::move(bc));

  const Mat d = multiply(g, b, 0, 0).coeff(0);
  const Mat b0 = b.coeff(0);
  auto cond = [](const Mat& x) {
    Eigen::JacobiSVD<Mat> s(x);
    const auto& v = s.singularValues();
    return v(v.size() - 1) > 0.0 ? v(0) / v(v.size() - 1) : std::numeric_limits<double>::infinity();
  };
  if (cond(d) > 1e8 || cond(b0) > 1e8)
    throw NotInDomainError("birkhoff_rh: gauge matrices are singular (nontrivial partial indices)");
  const Mat dinv = d.inverse();
  const Mat x = b0 * dinv;
  const auto iw = iwasawa_pointwise(x.inverse());
  const Mat c = dinv * iw.k;
  b = right_mul(b, c);

  const FourierLoop full = multiply(g, b, -W, W + M_out);
  BirkhoffFactors out;
  out.bbar_pos_mass = full.mass_outside(-W, 0);
  out.bbar = full.window(-W, 0);
  out.b = b;
  out.an_defect = an_defect(b.coeff(0));
  out.g_defect = unitarity_defect(out.bbar.coeff(0));
  out.null_singular = null_rel;
  out.gap_singular = gap_rel;
  const FourierLoop bbar_inv = inverse(out.bbar, -W, W);
  out.residual = grid_distance(multiply(b, bbar_inv, -2 * W, 2 * W), l);
  if (!(out.residual <= tol))
    throw NoConvergence("birkhoff_rh: reconstruction residual " + std::to_string(out.residual) +
                        " exceeds tolerance; increase M_out");
  return out;
}

} // namespace plwzw
