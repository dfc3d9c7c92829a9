#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace plwzw {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

inline constexpr cplx I_unit{0.0, 1.0};

/// Root alpha = e_i - e_j of sl(n); positive iff i < j.
struct Root {
  int i = 0;
  int j = 1;

  [[nodiscard]] bool positive() const { return i < j; }
  [[nodiscard]] Root negated() const { return {j, i}; }
  friend bool operator==(const Root&, const Root&) = default;
};

/// Element of the real Cartan subalgebra, h = sum_mu coords[mu] H^mu.
struct CartanElement {
  RVec coords;

  CartanElement() = default;
  explicit CartanElement(RVec c) : coords(std::move(c)) {}

  [[nodiscard]] int rank() const { return static_cast<int>(coords.size()); }
  CartanElement operator-() const { return CartanElement(-coords); }
  friend CartanElement operator+(const CartanElement& a, const CartanElement& b) {
    return CartanElement(a.coords + b.coords);
  }
  friend CartanElement operator*(double s, const CartanElement& a) {
    return CartanElement(s * a.coords);
  }
};

/// Root data of A_{n-1} with the trace form, so |alpha|^2 = 2 for every root.
class RootSystem {
public:
  explicit RootSystem(int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int rank() const { return n_ - 1; }
  [[nodiscard]] const std::vector<Root>& positive_roots() const { return positive_; }
  /// Positive roots followed by their negatives.
  [[nodiscard]] const std::vector<Root>& all_roots() const { return all_; }
  [[nodiscard]] double norm_sq(const Root&) const { return 2.0; }

  /// alpha(h) for a Cartan element given in orthonormal coordinates.
  [[nodiscard]] double pairing(const Root& alpha, const CartanElement& h) const;
  /// alpha(H^mu).
  [[nodiscard]] double pairing(const Root& alpha, int mu) const;
  /// Diagonal of sum_mu h_mu H^mu.
  [[nodiscard]] RVec diagonal(const CartanElement& h) const;
  /// Smallest alpha(h) over positive roots (> 0 inside the open chamber).
  [[nodiscard]] double min_positive_pairing(const CartanElement& h) const;

  /// Column mu holds the diagonal of H^mu.
  [[nodiscard]] const Eigen::MatrixXd& cartan_diagonals() const { return diag_; }

private:
  int n_;
  Eigen::MatrixXd diag_;
  std::vector<Root> positive_;
  std::vector<Root> all_;
};

/// Defining representation of sl(n): trace-orthonormal real diagonal H^mu
/// and elementary step generators E^{e_i - e_j} = e_{ij}.
class AlgebraRep {
public:
  [[nodiscard]] int n() const { return roots_.n(); }
  [[nodiscard]] int rank() const { return roots_.rank(); }
  [[nodiscard]] const std::vector<Mat>& cartan() const { return cartan_; }
  [[nodiscard]] Mat step(const Root& alpha) const;
  [[nodiscard]] const RootSystem& root_system() const { return roots_; }

  /// exp(sum_mu h_mu H^mu), a positive diagonal matrix.
  [[nodiscard]] Mat exp_cartan(const CartanElement& h) const;

  friend AlgebraRep build_sl_rep(int n);

private:
  explicit AlgebraRep(int n);
  RootSystem roots_;
  std::vector<Mat> cartan_;
};

/// Throws InvalidArgument unless 2 <= n <= 6.
AlgebraRep build_sl_rep(int n);

/// Element of g (x) g stored as an n^2 x n^2 matrix with the Kronecker
/// convention (A (x) B)(i n + k, j n + l) = A(i, j) B(k, l).
class TwoTensor {
public:
  TwoTensor() = default;
  TwoTensor(int n, Mat mat);

  static TwoTensor zero(int n);
  static TwoTensor identity(int n);
  static TwoTensor kron(const Mat& a, const Mat& b);
  /// Factor-swap operator P, P (A (x) B) P = B (x) A.
  static TwoTensor swap_operator(int n);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] const Mat& mat() const { return mat_; }
  [[nodiscard]] Mat& mat() { return mat_; }

  /// P T P.
  [[nodiscard]] TwoTensor swapped() const;
  /// Entry {X_{ij}, Y_{kl}} in the bracket packing.
  [[nodiscard]] cplx at(int i, int j, int k, int l) const { return mat_(i * n_ + k, j * n_ + l); }

  TwoTensor& operator+=(const TwoTensor& o);
  TwoTensor& operator-=(const TwoTensor& o);
  TwoTensor& operator*=(cplx s);

  friend TwoTensor operator+(TwoTensor a, const TwoTensor& b) { return a += b; }
  friend TwoTensor operator-(TwoTensor a, const TwoTensor& b) { return a -= b; }
  friend TwoTensor operator*(cplx s, TwoTensor a) { return a *= s; }
  friend TwoTensor operator*(const TwoTensor& a, const TwoTensor& b);
  friend TwoTensor commutator(const TwoTensor& a, const TwoTensor& b);

  [[nodiscard]] double max_abs() const;

private:
  int n_ = 0;
  Mat mat_;
};

TwoTensor casimir(const AlgebraRep& rep);
TwoTensor classical_r(const AlgebraRep& rep);

/// max over generators x of || [x (x) 1 + 1 (x) x, T] ||_inf.
double ad_invariance_residual(const TwoTensor& t, const AlgebraRep& rep);

/// Embeddings of a two-tensor into (C^n)^{(x)3}: T_{12}, T_{13}, T_{23}.
Mat embed12(const TwoTensor& t);
Mat embed13(const TwoTensor& t);
Mat embed23(const TwoTensor& t);
/// Single-slot embedding x_{(slot)} in the triple space, slot in {0, 1, 2}.
Mat embed_single(const Mat& x, int slot);

double max_abs(const Mat& m);

} // namespace plwzw
