#include "plwzw/errors.hpp"
#include "plwzw/poisson.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace plwzw;

namespace {

const std::vector<double> sig3 = {0.3, 1.9, 4.1};

std::vector<Mat> ks_at(const FourierLoop& k) { return {k.eval(sig3[0]), k.eval(sig3[1]), k.eval(sig3[2])}; }

Mat gaussian(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Mat x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = cplx(g(rng), g(rng));
  return x;
}

} // namespace

TEST_CASE("kk_inf is skew under the factor swap") {
  const AlgebraRep rep = build_sl_rep(3);
  const ExchangeBrackets br(rep);
  const auto p = random_phase_point(rep, 2, 0.3, 4);
  const Mat k1 = p.k.eval(0.4), k2 = p.k.eval(2.5);
  const TwoTensor lhs = br.kk_inf(k1, k2, p.a, 0.4 - 2.5).swapped();
  const TwoTensor rhs = br.kk_inf(k2, k1, p.a, 2.5 - 0.4);
  CHECK((lhs + rhs).max_abs() < 1e-13);
}

TEST_CASE("LL_inf and LL_eps are skew under the factor swap") {
  const AlgebraRep rep = build_sl_rep(2);
  const ExchangeBrackets br(rep);
  const Mat L1 = gaussian(2, 1), L2 = gaussian(2, 2);
  CHECK((br.LL_inf(L1, L2, 1.2).swapped() + br.LL_inf(L2, L1, -1.2)).max_abs() < 1e-13);
  CHECK((br.LL_eps(L1, L2, 1.2, 0.7).swapped() + br.LL_eps(L2, L1, -1.2, 0.7)).max_abs() < 1e-12);
}

TEST_CASE("dual bracket at atilde = a is minus kk_inf") {
  const AlgebraRep rep = build_sl_rep(2);
  const ExchangeBrackets br(rep);
  const auto p = random_phase_point(rep, 1, 0.2, 6);
  const Mat k1 = p.k.eval(0.2), k2 = p.k.eval(1.0);
  CHECK((br.KK_dual(k1, k2, p.a, -0.8) + br.kk_inf(k1, k2, p.a, -0.8)).max_abs() < 1e-14);
}

TEST_CASE("a-bracket and its exponential") {
  const AlgebraRep rep = build_sl_rep(3);
  const ExchangeBrackets br(rep);
  const Mat k = gaussian(3, 3);
  for (int mu = 0; mu < 2; ++mu) CHECK(max_abs(br.ak_inf(k, mu) - I_unit * k * rep.cartan()[mu]) < 1e-15);
  CHECK_THROWS_AS((void)br.ak_inf(k, 2), InvalidArgument);

  // chain rule against a finite difference of exp(a)
  RVec v(2);
  v << 0.4, 0.9;
  const CartanElement a = cartan_from_simple_roots(rep, v);
  TwoTensor fd = TwoTensor::zero(3);
  const double h = 1e-6;
  for (int mu = 0; mu < 2; ++mu) {
    RVec e = RVec::Zero(2);
    e(mu) = h;
    const Mat d = (rep.exp_cartan(a + CartanElement(e)) - rep.exp_cartan(a + CartanElement(-e))) / (2.0 * h);
    fd += TwoTensor::kron(d, br.ak_inf(k, mu));
  }
  CHECK((fd - br.eak_inf(a, k)).max_abs() < 1e-8);
}

TEST_CASE("Jacobi identity of the limit brackets") {
  for (int n : {2, 3}) {
    const AlgebraRep rep = build_sl_rep(n);
    const ExchangeBrackets br(rep);
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto p = random_phase_point(rep, 2, 0.3, seed, 0.3, 2.0);
      CHECK(jacobiator_inf(br, ks_at(p.k), p.a, sig3) < 1e-9);
    }
  }
}

TEST_CASE("Jacobi fails without the dynamical terms or with the wrong a-bracket") {
  const AlgebraRep rep = build_sl_rep(2);
  const ExchangeBrackets br(rep);
  const auto p = random_phase_point(rep, 2, 0.3, 2, 0.3, 2.0);
  const auto k = ks_at(p.k);
  CHECK(jacobiator_inf(br, k, p.a, sig3, {false, a_bracket_coefficient}) > 1e-3);
  CHECK(jacobiator_inf(br, k, p.a, sig3, {true, -a_bracket_coefficient}) > 1e-3);
}

TEST_CASE("Jacobi identity of the current algebra") {
  const AlgebraRep rep = build_sl_rep(2);
  const ExchangeBrackets br(rep);
  const FourierLoop L = pointwise_exp(random_hermitian_loop(2, 2, 0.8, 5), 1.0, -16, 16);
  const std::vector<Mat> v = {L.eval(sig3[0]), L.eval(sig3[1]), L.eval(sig3[2])};
  const PointBracket inf = [&br](const Mat& x, const Mat& y, double s, double sp) { return br.LL_inf(x, y, s - sp); };
  CHECK(jacobiator_linear(inf, 2, v, sig3) < 1e-9);
  for (double eps : {0.5, 1.0, 2.0}) {
    const PointBracket fin = [&br, eps](const Mat& x, const Mat& y, double s, double sp) {
      return br.LL_eps(x, y, s - sp, eps);
    };
    CHECK(jacobiator_linear(fin, 2, v, sig3) < 1e-6);
  }
}

TEST_CASE("limit residual closed form matches direct subtraction") {
  const AlgebraRep rep = build_sl_rep(2);
  const ExchangeBrackets br(rep);
  const Mat L1 = gaussian(2, 7), L2 = gaussian(2, 8);
  for (double eps : {0.5, 1.0, 2.0}) {
    const double a = limit_current_residual(br, L1, L2, 1.3, eps);
    const double b = limit_current_residual_direct(br, L1, L2, 1.3, eps);
    CHECK(a == doctest::Approx(b).epsilon(1e-6));
  }
  CHECK_THROWS_AS(limit_current_residual(br, L1, L2, 1.3, 0.0), InvalidArgument);
  CHECK_THROWS_AS(limit_current_residual(br, L1, L2, 0.0, 1.0), PoleError);
}

TEST_CASE("limit residual at L = 1") {
  const AlgebraRep rep = build_sl_rep(3);
  const ExchangeBrackets br(rep);
  const Mat one = Mat::Identity(3, 3);
  for (double eps : {0.5, 1.5, 4.0}) {
    const double d = 0.9;
    const cplx z(d / 2.0, std::numbers::pi * eps);
    const cplx plus = 1.0 / std::tan(z) + I_unit;
    const cplx minus = 1.0 / std::tan(std::conj(z)) - I_unit;
    // both C terms collapse to C itself, whose largest entry is 1
    const double expect = std::abs(plus + minus);
    CHECK(limit_current_residual(br, one, one, d, eps) == doctest::Approx(expect).epsilon(1e-9));
    CHECK(expect < 5.0 * std::exp(-2.0 * std::numbers::pi * eps));
  }
}

TEST_CASE("rigid rotation preserves the limit bracket") {
  const AlgebraRep rep = build_sl_rep(3);
  const auto p = random_phase_point(rep, 2, 0.3, 11);
  for (double tau : {0.5, 3.0, -2.2}) CHECK(evolve_invariance_check(rep, p, tau, 0.7, 2.1) < 1e-12);
}

TEST_CASE("jacobiators need three points") {
  const AlgebraRep rep = build_sl_rep(2);
  const ExchangeBrackets br(rep);
  const auto p = random_phase_point(rep, 1, 0.1, 1);
  CHECK_THROWS_AS(jacobiator_inf(br, {p.k.eval(0.0)}, p.a, {0.0}), InvalidArgument);
}
