#pragma once

#include "plwzw/lie.hpp"
#include "plwzw/loop.hpp"
#include "plwzw/phase.hpp"
#include "plwzw/rmatrix.hpp"

#include <functional>
#include <vector>

namespace plwzw {

/// {a_mu, k(sigma)} = a_bracket_coefficient * k(sigma) H^mu.
inline constexpr cplx a_bracket_coefficient{0.0, 1.0};

/// All pairwise brackets {X_ij(sigma), Y_kl(sigma')} packed as X-slot (x) Y-slot.
struct TensorBracketValue {
  TwoTensor value;
  double sigma = 0.0;
  double sigma_prime = 0.0;
};

/// Bracket formulas evaluated on matrices sitting at two points with
/// delta = sigma - sigma'. Slot 1 carries the value at sigma.
class ExchangeBrackets {
public:
  explicit ExchangeBrackets(const AlgebraRep& rep);

  [[nodiscard]] const AlgebraRep& rep() const { return hyp_.rep(); }
  [[nodiscard]] const TrigKernel& trig() const { return hyp_.trig(); }
  [[nodiscard]] const HyperbolicKernel& hyperbolic() const { return hyp_; }

  /// eps [ (L(x)L) r(d) - (1(x)L) r(d + 2 pi i eps) (L(x)1) + r(d) (L(x)L) - (L(x)1) r(d - 2 pi i eps) (1(x)L) ].
  [[nodiscard]] TwoTensor LL_eps(const Mat& L1, const Mat& L2, double delta, double eps) const;
  /// (L(x)L) r(d) + r(d) (L(x)L) - (L(x)1)(r + iC)(1(x)L) - (1(x)L)(r - iC)(L(x)1).
  [[nodiscard]] TwoTensor LL_inf(const Mat& L1, const Mat& L2, double delta) const;

  /// (k(x)k) eps R_eps(t, d) - eps r(d) (k(x)k), t = exp(i x H).
  [[nodiscard]] TwoTensor kk_eps(const Mat& k1, const Mat& k2, const EllipticKernel& ek, const CartanElement& x,
                                 double delta) const;
  /// {t (x) k} = (t (x) k) sum_mu H^mu (x) H^mu.
  [[nodiscard]] TwoTensor tk_eps(const Mat& t, const Mat& k) const;

  /// (k(x)k) r_inf(a, d) - r(d) (k(x)k); dynamical = false drops the coth part.
  [[nodiscard]] TwoTensor kk_inf(const Mat& k1, const Mat& k2, const CartanElement& a, double delta,
                                 bool dynamical = true) const;
  /// {a_mu, k}.
  [[nodiscard]] Mat ak_inf(const Mat& k, int mu) const;
  /// {e^a (x) k} assembled from {a_mu, k} by the chain rule.
  [[nodiscard]] TwoTensor eak_inf(const CartanElement& a, const Mat& k) const;

  /// -[ (K(x)K) r_inf(atilde, d) - r(d) (K(x)K) ].
  [[nodiscard]] TwoTensor KK_dual(const Mat& K1, const Mat& K2, const CartanElement& atilde, double delta) const;

private:
  HyperbolicKernel hyp_;
};

TensorBracketValue bracket_LL_eps(const AlgebraRep& rep, const FourierLoop& L, double s, double sp, double eps);
TensorBracketValue bracket_LL_inf(const AlgebraRep& rep, const FourierLoop& L, double s, double sp);
TensorBracketValue bracket_kk_eps(const AlgebraRep& rep, const FourierLoop& k, const CartanElement& t_coords, double s,
                                  double sp, double eps, int series_terms = 24);
TensorBracketValue bracket_kk_inf(const AlgebraRep& rep, const PhasePointKA& p, double s, double sp);
TensorBracketValue bracket_KK_dual(const AlgebraRep& rep, const PhasePointDual& q, double s, double sp);

/// K = ktilde(sigma) exp(atilde).
Mat dual_K(const AlgebraRep& rep, const PhasePointDual& q, double sigma);

/// Jacobiator of a bracket that is bilinear in matrix arguments at three points.
using PointBracket = std::function<TwoTensor(const Mat&, const Mat&, double, double)>;
double jacobiator_linear(const PointBracket& bracket, int n, const std::vector<Mat>& values,
                         const std::vector<double>& sigmas);

struct JacobiOptions {
  bool dynamical = true;
  cplx a_coefficient = a_bracket_coefficient;
};

/// Max-norm Jacobiator of the (k, a) brackets over all entry triples of k at three points.
double jacobiator_inf(const ExchangeBrackets& br, const std::vector<Mat>& k, const CartanElement& a,
                      const std::vector<double>& sigmas, const JacobiOptions& opt = {});

/// ||(1/eps) LL_eps - LL_inf||_inf in the cancellation-free closed form
/// -(1(x)L) C (L(x)1) (cot(d/2 + i pi eps) + i) - (L(x)1) C (1(x)L) (cot(d/2 - i pi eps) - i).
double limit_current_residual(const ExchangeBrackets& br, const Mat& L1, const Mat& L2, double delta, double eps);
/// Same quantity by direct subtraction of the two brackets.
double limit_current_residual_direct(const ExchangeBrackets& br, const Mat& L1, const Mat& L2, double delta,
                                     double eps);

/// ||kk_inf(evolve(p, tau)) at (s + tau, sp + tau) - kk_inf(p) at (s, sp)||_inf.
double evolve_invariance_check(const AlgebraRep& rep, const PhasePointKA& p, double tau, double s, double sp);

} // namespace plwzw
