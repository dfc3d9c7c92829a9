#pragma once

#include "plwzw/lie.hpp"

#include <cstdint>
#include <vector>

namespace plwzw {

/// Matrix-valued loop f(sigma) = sum_{m = m_min}^{m_max} coeff[m] exp(i m sigma).
class FourierLoop {
public:
  FourierLoop() = default;
  FourierLoop(int n, int m_min, std::vector<Mat> coeff);

  static FourierLoop identity(int n);
  static FourierLoop constant(const Mat& value);
  static FourierLoop zero(int n, int m_min, int m_max);
  /// Samples on the uniform grid sigma_s = 2 pi s / N, projected to [lo, hi].
  static FourierLoop from_grid(const std::vector<Mat>& samples, int lo, int hi);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int m_min() const { return m_min_; }
  [[nodiscard]] int m_max() const { return m_min_ + static_cast<int>(coeff_.size()) - 1; }
  [[nodiscard]] int span() const { return static_cast<int>(coeff_.size()); }
  [[nodiscard]] const std::vector<Mat>& coeffs() const { return coeff_; }

  /// Coefficient of mode m, zero outside the window.
  [[nodiscard]] Mat coeff(int m) const;
  void set_coeff(int m, const Mat& value);

  [[nodiscard]] Mat eval(double sigma) const;
  [[nodiscard]] std::vector<Mat> to_grid(int N) const;

  /// Same loop on the window [lo, hi]; modes outside are dropped.
  [[nodiscard]] FourierLoop window(int lo, int hi) const;
  /// Drops edge modes whose max entry is below thr (mode 0 is always kept).
  [[nodiscard]] FourierLoop trimmed(double thr = 1e-15) const;

  /// Sum of Frobenius norms of the modes outside [lo, hi].
  [[nodiscard]] double mass_outside(int lo, int hi) const;
  /// Largest entry modulus over all coefficients of f - g.
  [[nodiscard]] double coeff_distance(const FourierLoop& g) const;

private:
  int n_ = 0;
  int m_min_ = 0;
  std::vector<Mat> coeff_;
};

/// Smallest power of two >= 4 * span + 1.
int grid_size_for(int span);

/// Max over a uniform grid of ||f(sigma) - g(sigma)||_inf.
double grid_distance(const FourierLoop& f, const FourierLoop& g, int N = 0);

/// Pointwise product truncated to [lo, hi]; truncated_mass receives the
/// Frobenius mass of the exact product outside the window.
FourierLoop multiply(const FourierLoop& f, const FourierLoop& g, int lo, int hi, double* truncated_mass = nullptr);
FourierLoop multiply(const FourierLoop& f, const FourierLoop& g, int M_out, double* truncated_mass = nullptr);
/// Exact product (window is the sum of the input windows).
FourierLoop multiply(const FourierLoop& f, const FourierLoop& g);

/// Pointwise inverse truncated to [lo, hi]. Throws SingularLoopError if
/// min |det f| on the grid is below 1e-10. residual receives ||f f^{-1} - 1||_grid.
FourierLoop inverse(const FourierLoop& f, int lo, int hi, double* residual = nullptr);
FourierLoop inverse(const FourierLoop& f, int M_out, double* residual = nullptr);

/// g(sigma) = f(sigma)^dagger, g.coeff[m] = f.coeff[-m]^dagger.
FourierLoop adjoint(const FourierLoop& f);

/// f(sigma - i eps): mode m scaled by exp(m eps).
FourierLoop continue_down(const FourierLoop& f, double eps);
/// max_m exp(m eps) over the window, the amplification of continue_down.
double continuation_gain(const FourierLoop& f, double eps);

/// f(sigma - tau): mode m scaled by exp(-i m tau).
FourierLoop rotate(const FourierLoop& f, double tau);

FourierLoop scale(const FourierLoop& f, cplx s);
FourierLoop add(const FourierLoop& f, const FourierLoop& g);
FourierLoop left_mul(const Mat& x, const FourierLoop& f);
FourierLoop right_mul(const FourierLoop& f, const Mat& x);

enum class Group { LG, B, Bbar };

struct AnalyticityReport {
  double neg_mass = 0.0;
  double pos_mass = 0.0;
  Mat value_at_zero;
  Mat value_at_inf;
  double unitarity_defect = 0.0;
  /// Strictly lower part plus diagonal phase/positivity defect of coeff[0].
  double an_defect = 0.0;
  /// ||coeff[0]^dagger coeff[0] - 1||_inf.
  double g_defect = 0.0;
};

struct Membership {
  AnalyticityReport report;
  bool member = false;
};

AnalyticityReport analyticity(const FourierLoop& f, int N = 0);
Membership membership(const FourierLoop& f, Group which, double tol);

/// Defect of a matrix from AN: strictly lower entries, imaginary or
/// nonpositive diagonal.
double an_defect(const Mat& x);
double unitarity_defect(const Mat& x);
double unitarity_defect(const FourierLoop& f, int N = 0);

enum class LoopTarget { LG, GL };

/// exp(i X(sigma)) for target LG, exp(X(sigma)) for GL, where X is a random
/// traceless band-limited loop over [-M, M] with sum_m ||X_m||_F = amplitude
/// (Hermitian-valued for LG). The exponential is taken per grid point and
/// the result trimmed to its numerically nonzero window.
FourierLoop random_near_identity(int n, int M, double amplitude, std::uint64_t seed, LoopTarget target = LoopTarget::LG);

/// Random traceless Hermitian band-limited loop, sum_m ||X_m||_F = amplitude.
FourierLoop random_hermitian_loop(int n, int M, double amplitude, std::uint64_t seed);

/// Pointwise exp(scale * X(sigma)) on a grid of size N, projected to [lo, hi].
FourierLoop pointwise_exp(const FourierLoop& x, cplx scale, int lo, int hi);

} // namespace plwzw
