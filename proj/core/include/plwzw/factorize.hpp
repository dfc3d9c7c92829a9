#pragma once

#include "plwzw/lie.hpp"
#include "plwzw/loop.hpp"

namespace plwzw {

/// g = k * a * n with k unitary, a positive diagonal, n upper unitriangular.
struct PointwiseIwasawa {
  Mat k;
  Mat a;
  Mat n;
};

/// Throws SingularMatrixError if |det g| < 1e-12.
PointwiseIwasawa iwasawa_pointwise(const Mat& g);

/// Which product the spectral factor reproduces.
enum class FactorSide {
  Right, ///< b^dagger b = Phi, b(0) in AN
  Left,  ///< b b^dagger = Phi, b(0) in AN
};

struct SpectralFactor {
  FourierLoop b;
  int iterations = 0;
  /// ||b^dagger b - Phi||_grid (or b b^dagger for FactorSide::Left).
  double residual = 0.0;
};

/// Wilson-Newton iteration for the analytic factor of a Hermitian
/// positive-definite loop, b over modes [0, M_out], gauge-fixed so b(0) is in AN.
/// Throws NotPositiveDefinite (min eigenvalue on the grid <= 1e-8 or Phi not
/// Hermitian) and NoConvergence (50 iterations).
SpectralFactor spectral_factorize(const FourierLoop& phi, int M_out, double tol,
                                  FactorSide side = FactorSide::Right);

/// l = b * u with b in B and u in LG; equivalently l^{-1} b is unitary.
struct IwasawaFactors {
  FourierLoop u;
  FourierLoop b;
  double residual = 0.0;
  double unitarity_defect = 0.0;
  int iterations = 0;
};

IwasawaFactors loop_iwasawa(const FourierLoop& l, int M_out, double tol);

/// Iw_eps(l) by conjugation with the contour shift sigma -> sigma - i eps.
/// The returned u is the unitary factor on the shifted contour, so its
/// unitarity defect certifies that l^{-1} Iw_eps(l) continues to a loop in LG.
/// Throws ConditioningError if exp(M_out eps) or the input gain exceeds 1e8.
IwasawaFactors iwasawa_eps(const FourierLoop& l, double eps, int M_out, double tol);

/// l = b * bbar^{-1} with b in B, bbar in B-bar.
struct BirkhoffFactors {
  FourierLoop b;
  FourierLoop bbar;
  /// ||b bbar^{-1} - l||_grid
  double residual = 0.0;
  /// AN defect of b(0) and unitarity defect of bbar(infinity).
  double an_defect = 0.0;
  double g_defect = 0.0;
  /// Mass of the positive modes of l^{-1} b that the factorization discards.
  double bbar_pos_mass = 0.0;
  /// Largest of the n smallest singular values and the next one, relative to the largest.
  double null_singular = 0.0;
  double gap_singular = 0.0;
};

struct BirkhoffOptions {
  /// Mixes the nullspace basis before gauge fixing (testing the gauge-independence of the result).
  Mat basis_mix;
};

/// Toeplitz-nullspace Birkhoff factorization normalized by b(0) in AN, bbar(inf) in G.
/// Throws NotInDomainError if the nullspace dimension is not n, the singular
/// value gap is ambiguous, or the gauge matrices are singular.
BirkhoffFactors birkhoff_rh(const FourierLoop& l, int M_out, double tol, const BirkhoffOptions& opt = {});

} // namespace plwzw
