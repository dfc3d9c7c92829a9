#pragma once

#include "plwzw/phase.hpp"
#include "plwzw/poisson.hpp"

#include <Eigen/Dense>

#include <vector>

namespace plwzw {

/// Poisson matrix of the limit exchange algebra restricted to the chart
/// k = k0 exp(xi), xi an anti-Hermitian traceless loop over modes [-M, M],
/// in a real orthonormal basis of xi followed by the Cartan coordinates of a.
struct DiscretizedChart {
  int M = 0;
  PhasePointKA base;
  /// basis[s] holds the 2M+1 mode matrices of the s-th xi direction.
  std::vector<std::vector<Mat>> basis;
  Eigen::MatrixXd Pi;
  double imag_defect = 0.0;
  double antisym_defect = 0.0;

  [[nodiscard]] int dimension() const { return static_cast<int>(Pi.rows()); }
  /// Ratio of the largest to the smallest singular value of Pi.
  [[nodiscard]] double condition_number() const;
};

DiscretizedChart discretized_chart(const AlgebraRep& rep, const PhasePointKA& base, int M);

struct PushforwardReport {
  int M = 0;
  double max_rel_dev = 0.0;
  /// |pushed - expected| entrywise.
  Mat per_entry;
  TwoTensor pushed;
  TwoTensor expected;
  double pi_antisym = 0.0;
  double pi_imag = 0.0;
};

struct PushforwardOptions {
  double h_fd = 1e-5;
  int duality_modes = default_duality_modes;
  double tol = 1e-8;
};

/// Pushes the chart Poisson matrix at duality_inverse(q) through finite
/// differences of the duality map and compares {K(sigma) (x) K(sigma')}
/// with bracket_KK_dual.
PushforwardReport duality_pushforward_check(const AlgebraRep& rep, const PhasePointDual& q, double s, double sp, int M,
                                            const PushforwardOptions& opt = {});

} // namespace plwzw
