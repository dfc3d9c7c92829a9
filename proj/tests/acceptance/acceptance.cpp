// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "app.hpp"

#include "plwzw/errors.hpp"
#include "plwzw/factorize.hpp"
#include "plwzw/phase.hpp"
#include "plwzw/poisson.hpp"
#include "plwzw/pushforward.hpp"
#include "plwzw/rmatrix.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace plwzw;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Pinned tolerances.
constexpr double kAlgebraTol = 1e-12;
constexpr double kCybeTol = 1e-10;
constexpr double kDybeTol = 1e-6;
constexpr double kDybeControl = 1e-3;
constexpr double kDegenerationTol = 1e-6;
constexpr double kBirkhoffResidual = 1e-8;
constexpr double kBirkhoffMass = 1e-8;
constexpr double kBirkhoffGauge = 1e-10;
constexpr double kFixtureTol = 1e-8;
constexpr double kUnitarityTol = 1e-9;
constexpr double kReconstructionTol = 1e-8;
constexpr int kMaxWilsonIterations = 30;
constexpr double kIwEpsIdentity = 1e-12;
constexpr double kIwEpsFactorTol = 1e-6;
constexpr double kDualityAgreement = 1e-9;
constexpr double kRoundTripTol = 1e-8;
constexpr double kJacobiTol2 = 1e-9;
constexpr double kJacobiTol3 = 1e-8;
constexpr double kCurrentJacobiTol = 1e-6;
constexpr double kLimitTol = 1e-6;
constexpr double kLimitRatioSlack = 10.0;
constexpr double kPushforwardTerminal = 1e-2;
constexpr double kEvolveTol = 1e-12;
constexpr double kGroupLawTol = 1e-13;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void require(Outcome& o, bool ok, const std::string& what) {
  if (!ok) {
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
  }
}

void note(Outcome& o, const std::string& what) { o.detail += (o.detail.empty() ? "" : "; ") + what; }

std::vector<double> sigma_triple(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, two_pi);
  auto gap = [](double x, double y) {
    const double d = std::fmod(std::abs(x - y), two_pi);
    return std::min(d, two_pi - d);
  };
  for (;;) {
    std::vector<double> s = {u(rng), u(rng), u(rng)};
    if (gap(s[0], s[1]) >= 0.2 && gap(s[0], s[2]) >= 0.2 && gap(s[1], s[2]) >= 0.2) return s;
  }
}

CartanElement chamber(const AlgebraRep& rep, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  RVec v(rep.rank());
  for (int i = 0; i < rep.rank(); ++i) v(i) = u(rng);
  return cartan_from_simple_roots(rep, v);
}

CartanElement chamber_uniform(const AlgebraRep& rep, double alpha) {
  return cartan_from_simple_roots(rep, RVec::Constant(rep.rank(), alpha));
}

Mat gaussian(int n, std::mt19937_64& rng, double s) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = s * cplx(g(rng), g(rng));
  return x;
}

FourierLoop exp_monomial(const Mat& x, int power, int terms) {
  const int n = static_cast<int>(x.rows());
  FourierLoop out = FourierLoop::zero(n, std::min(0, power * terms), std::max(0, power * terms));
  Mat term = Mat::Identity(n, n);
  for (int j = 0; j <= terms; ++j) {
    out.set_coeff(power * j, term);
    term = term * x / static_cast<double>(j + 1);
  }
  return out;
}

// 1. Casimir invariance, swap parities, spectrum of C for sl(2).
Outcome algebra_layer() {
  Outcome o;
  double worst = 0.0;
  for (int n : {2, 3, 4}) {
    const AlgebraRep rep = build_sl_rep(n);
    const TwoTensor C = casimir(rep);
    const TwoTensor r = classical_r(rep);
    worst = std::max(worst, ad_invariance_residual(C, rep));
    require(o, (C.swapped() - C).max_abs() == 0.0, "C not exactly swap-symmetric at n=" + std::to_string(n));
    require(o, (r.swapped() + r).max_abs() == 0.0, "r not exactly swap-antisymmetric at n=" + std::to_string(n));
  }
  require(o, worst <= kAlgebraTol, "ad-invariance " + sci(worst));
  const Eigen::SelfAdjointEigenSolver<Mat> es(casimir(build_sl_rep(2)).mat());
  Eigen::VectorXd ev = es.eigenvalues();
  Eigen::VectorXd expect(4);
  expect << -1.5, 0.5, 0.5, 0.5;
  const double spectrum_err = (ev - expect).cwiseAbs().maxCoeff();
  require(o, spectrum_err <= kAlgebraTol, "C(n=2) spectrum off by " + sci(spectrum_err));
  note(o, "ad-invariance " + sci(worst) + ", spectrum " + sci(spectrum_err));
  return o;
}

// 2. CYBE over 100 seeded triples.
Outcome cybe() {
  Outcome o;
  for (int n : {2, 3}) {
    const TrigKernel k(build_sl_rep(n));
    double worst = 0.0;
    std::mt19937_64 rng(1000 + n);
    for (int i = 0; i < 100; ++i) {
      const auto s = sigma_triple(rng);
      worst = std::max(worst, cybe_residual(k, s[0], s[1], s[2]));
    }
    require(o, worst <= kCybeTol, "n=" + std::to_string(n) + " residual " + sci(worst));
    note(o, "n=" + std::to_string(n) + " max " + sci(worst));
  }
  return o;
}

// 3. DYBE for hyperbolic and elliptic kernels, with the dynamical terms dropped as a control.
Outcome dybe() {
  Outcome o;
  double hyp = 0.0, ell = 0.0, control = INFINITY;
  for (int n : {2, 3}) {
    const AlgebraRep rep = build_sl_rep(n);
    const HyperbolicKernel hk(rep);
    const EllipticKernel e1(rep, 1.0), e2(rep, 2.0);
    std::mt19937_64 rng(2000 + n);
    for (int i = 0; i < 20; ++i) {
      const CartanElement a = chamber(rep, rng, 0.3, 2.0);
      // elliptic points inside the alcove, highest root below pi eps
      const CartanElement b = chamber(rep, rng, 0.3, 2.4 / (n - 1));
      const auto s = sigma_triple(rng);
      hyp = std::max(hyp, dybe_residual(as_dynamical(hk), rep, a, s[0], s[1], s[2]));
      for (const EllipticKernel* ek : {&e1, &e2})
        ell = std::max(ell, dybe_residual(as_dynamical(*ek), rep, b, s[0], s[1], s[2]));
      DybeOptions drop;
      drop.drop_dynamical = true;
      control = std::min(control, dybe_residual(as_dynamical(hk), rep, a, s[0], s[1], s[2], drop));
    }
  }
  require(o, hyp <= kDybeTol, "hyperbolic " + sci(hyp));
  require(o, ell <= kDybeTol, "elliptic " + sci(ell));
  require(o, control >= kDybeControl, "control only " + sci(control));
  note(o, "hyperbolic " + sci(hyp) + ", elliptic " + sci(ell) + ", control min " + sci(control));
  return o;
}

// 4. Elliptic kernel tends to the hyperbolic one.
Outcome degeneration() {
  Outcome o;
  for (int n : {2, 3}) {
    const AlgebraRep rep = build_sl_rep(n);
    const HyperbolicKernel hk(rep);
    const CartanElement a = chamber_uniform(rep, 4.0);
    double prev = INFINITY;
    std::string scan;
    for (double eps : {2.0, 4.0, 6.0, 8.0}) {
      double d = 0.0;
      for (double s : {0.7, 2.3, 4.5})
        d = std::max(d, (EllipticKernel(rep, eps).at_chamber(a, s) - hk.r_hat_inf(a, s)).max_abs());
      require(o, d < prev, "n=" + std::to_string(n) + " not decreasing at eps=" + std::to_string(eps));
      prev = d;
      scan += (scan.empty() ? "" : " ") + sci(d);
    }
    require(o, prev <= kDegenerationTol, "n=" + std::to_string(n) + " terminal " + sci(prev));
    note(o, "n=" + std::to_string(n) + " [" + scan + "]");
  }
  return o;
}

// 5. Birkhoff factorization.
Outcome birkhoff() {
  Outcome o;
  double res = 0.0, mass = 0.0, gauge = 0.0;
  for (int i = 0; i < 20; ++i) {
    const FourierLoop l = random_near_identity(2, 2, 0.2, 5000 + i, LoopTarget::GL);
    const BirkhoffFactors f = birkhoff_rh(l, 8, kBirkhoffResidual);
    res = std::max(res, f.residual);
    mass = std::max(mass, analyticity(f.b).neg_mass);
    gauge = std::max({gauge, f.an_defect, f.g_defect});
  }
  require(o, res <= kBirkhoffResidual, "reconstruction " + sci(res));
  require(o, mass <= kBirkhoffMass, "neg mass " + sci(mass));
  require(o, gauge <= kBirkhoffGauge, "gauge defect " + sci(gauge));

  std::mt19937_64 rng(55);
  const Mat x = gaussian(2, rng, 0.25), y = gaussian(2, rng, 0.25);
  const FourierLoop ex = exp_monomial(x, 1, 24);
  const BirkhoffFactors f = birkhoff_rh(multiply(ex, exp_monomial(y, -1, 24)).trimmed(1e-18), 14, kFixtureTol);
  const double fix = std::max(f.b.coeff_distance(ex.window(0, 14)), f.bbar.coeff_distance(exp_monomial(-y, -1, 24)));
  require(o, fix <= kFixtureTol, "exp fixture " + sci(fix));

  Mat z = Mat::Zero(2, 2), zi = Mat::Zero(2, 2);
  z(0, 0) = 1.0;
  zi(1, 1) = 1.0;
  bool fired = false;
  try {
    (void)birkhoff_rh(FourierLoop(2, -1, {zi, Mat::Zero(2, 2), z}), 8, kBirkhoffResidual);
  } catch (const NotInDomainError&) {
    fired = true;
  }
  require(o, fired, "winding fixture not rejected");
  note(o, "residual " + sci(res) + ", neg mass " + sci(mass) + ", gauge " + sci(gauge) + ", fixture " + sci(fix));
  return o;
}

// 6. Loop Iwasawa and its contour-shifted version.
Outcome iwasawa() {
  Outcome o;
  const AlgebraRep rep = build_sl_rep(2);
  double unit = 0.0, rec = 0.0;
  int iters = 0;
  for (int i = 0; i < 10; ++i) {
    const FourierLoop l = random_near_identity(2, 2, 0.2, 6000 + i, LoopTarget::GL);
    const IwasawaFactors f = loop_iwasawa(l, 12, kReconstructionTol);
    unit = std::max(unit, f.unitarity_defect);
    rec = std::max(rec, f.residual);
    iters = std::max(iters, f.iterations);
  }
  require(o, unit <= kUnitarityTol, "unitarity " + sci(unit));
  require(o, rec <= kReconstructionTol, "reconstruction " + sci(rec));
  require(o, iters <= kMaxWilsonIterations, "iterations " + std::to_string(iters));

  Mat u(2, 2);
  u << cplx(0.6, 0.0), cplx(0.0, 0.8), cplx(0.0, 0.8), cplx(0.6, 0.0);
  double ident = 0.0;
  for (double eps : {0.5, 1.0, 2.0})
    ident = std::max(ident, iwasawa_eps(FourierLoop::constant(u), eps, 4, kIwEpsIdentity).b.coeff_distance(
                                FourierLoop::identity(2)));
  require(o, ident <= kIwEpsIdentity, "Iw_eps(U) " + sci(ident));

  std::string scan;
  for (int i = 0; i < 3; ++i) {
    PhasePointKA p = random_phase_point(rep, 1, 0.1, 6100 + i);
    p.a = chamber_uniform(rep, 0.8);
    const FourierLoop l = right_mul(p.k, rep.exp_cartan(p.a)).trimmed(1e-10);
    const FourierLoop rh = birkhoff_rh(l, 12, kBirkhoffResidual).b;
    double prev = INFINITY;
    for (double eps : {1.0, 2.0, 3.0}) {
      const double d = grid_distance(iwasawa_eps(l, eps, 6, kIwEpsFactorTol).b, rh);
      require(o, d < prev, "Iw_eps not approaching RH at eps=" + std::to_string(eps));
      prev = d;
      if (i == 0) scan += (scan.empty() ? "" : " ") + sci(d);
    }
  }
  note(o, "unitarity " + sci(unit) + ", reconstruction " + sci(rec) + ", iterations " + std::to_string(iters) +
              ", Iw_eps(U) " + sci(ident) + ", |Iw_eps - RH| [" + scan + "]");
  return o;
}

// 7. Duality map.
Outcome duality() {
  Outcome o;
  double agree = 0.0, member = 0.0, rt_ka = 0.0, rt_dual = 0.0;
  for (int n : {2, 3}) {
    const AlgebraRep rep = build_sl_rep(n);
    for (int i = 0; i < 20; ++i) {
      const PhasePointKA p = random_phase_point(rep, 2, 0.2, 7000 + i);
      const DualityForward f = duality_forward(rep, p);
      agree = std::max(agree, f.expr_agreement);
      member = std::max({member, f.ktilde_pos_mass, f.ktilde_g_defect});
      const PhasePointKA back = duality_inverse(rep, f.q).p;
      rt_ka = std::max({rt_ka, grid_distance(back.k, p.k), (back.a.coords - p.a.coords).cwiseAbs().maxCoeff()});

      std::mt19937_64 rng(7100 + i);
      const PhasePointDual q{random_bbar(n, 2, 0.1, 7100 + i), -chamber(rep, rng, 0.3, 1.0)};
      const PhasePointDual qb = duality_forward(rep, duality_inverse(rep, q).p).q;
      rt_dual = std::max(
          {rt_dual, grid_distance(qb.ktilde, q.ktilde), (qb.atilde.coords - q.atilde.coords).cwiseAbs().maxCoeff()});
    }
  }
  require(o, agree <= kDualityAgreement, "expressions differ by " + sci(agree));
  require(o, member <= kDualityAgreement, "ktilde membership " + sci(member));
  require(o, rt_ka <= kRoundTripTol, "inverse after forward " + sci(rt_ka));
  require(o, rt_dual <= kRoundTripTol, "forward after inverse " + sci(rt_dual));
  note(o, "agreement " + sci(agree) + ", membership " + sci(member) + ", round trips " + sci(rt_ka) + " / " +
              sci(rt_dual));
  return o;
}

// 8. Jacobi identity of the limit brackets and of the deformed current algebra.
Outcome jacobi() {
  Outcome o;
  for (int n : {2, 3}) {
    const AlgebraRep rep = build_sl_rep(n);
    const ExchangeBrackets br(rep);
    double worst = 0.0;
    std::mt19937_64 rng(8000 + n);
    for (int i = 0; i < 50; ++i) {
      const PhasePointKA p = random_phase_point(rep, 2, 0.3, 8000 + 100 * n + i, 0.3, 2.0);
      const auto s = sigma_triple(rng);
      worst = std::max(worst, jacobiator_inf(br, {p.k.eval(s[0]), p.k.eval(s[1]), p.k.eval(s[2])}, p.a, s));
    }
    const double tol = n == 2 ? kJacobiTol2 : kJacobiTol3;
    require(o, worst <= tol, "n=" + std::to_string(n) + " jacobiator " + sci(worst));
    note(o, "n=" + std::to_string(n) + " " + sci(worst));
  }
  const AlgebraRep rep = build_sl_rep(2);
  const ExchangeBrackets br(rep);
  double cur = 0.0;
  std::mt19937_64 rng(8500);
  for (int i = 0; i < 5; ++i) {
    const FourierLoop L = pointwise_exp(random_hermitian_loop(2, 2, 0.8, 8500 + i), 1.0, -16, 16);
    const auto s = sigma_triple(rng);
    const std::vector<Mat> v = {L.eval(s[0]), L.eval(s[1]), L.eval(s[2])};
    for (double eps : {0.5, 1.0, 2.0}) {
      const PointBracket b = [&br, eps](const Mat& x, const Mat& y, double s1, double s2) {
        return br.LL_eps(x, y, s1 - s2, eps);
      };
      cur = std::max(cur, jacobiator_linear(b, 2, v, s));
    }
  }
  require(o, cur <= kCurrentJacobiTol, "current algebra " + sci(cur));
  note(o, "current algebra " + sci(cur));
  return o;
}

// 9. Deformed current algebra tends to its limit at the predicted rate.
Outcome current_limit() {
  Outcome o;
  const AlgebraRep rep = build_sl_rep(2);
  const ExchangeBrackets br(rep);
  std::vector<double> worst(3, 0.0);
  const std::vector<double> eps = {4.0, 6.0, 8.0};
  std::mt19937_64 rng(9000);
  std::uniform_real_distribution<double> u(0.0, two_pi);
  for (int i = 0; i < 20; ++i) {
    const FourierLoop L = pointwise_exp(random_hermitian_loop(2, 2, 1.0, 9000 + i), 1.0, -16, 16);
    double s = 0.0, sp = 0.0;
    do {
      s = u(rng);
      sp = u(rng);
    } while (std::abs(std::remainder(s - sp, two_pi)) < 0.5);
    for (size_t e = 0; e < eps.size(); ++e)
      worst[e] = std::max(worst[e], limit_current_residual(br, L.eval(s), L.eval(sp), s - sp, eps[e]));
  }
  require(o, worst[2] <= kLimitTol, "eps=8 residual " + sci(worst[2]));
  const double predicted = std::exp(-2.0 * two_pi);
  for (size_t e = 1; e < eps.size(); ++e) {
    const double ratio = worst[e] / worst[e - 1];
    require(o, ratio <= predicted * kLimitRatioSlack && ratio >= predicted / kLimitRatioSlack,
            "decay ratio " + sci(ratio) + " vs " + sci(predicted));
  }
  note(o, "[" + sci(worst[0]) + " " + sci(worst[1]) + " " + sci(worst[2]) + "], predicted ratio " + sci(predicted));
  return o;
}

// 10. Pushforward of the limit bracket through the duality map.
Outcome pushforward() {
  Outcome o;
  const AlgebraRep rep = build_sl_rep(2);
  const PhasePointDual q{random_bbar(2, 2, 0.05, 10000), -chamber_uniform(rep, 0.7)};
  double prev = INFINITY;
  std::string scan;
  for (int M : {2, 4, 6}) {
    const PushforwardReport r = duality_pushforward_check(rep, q, 0.4, 1.7, M);
    require(o, r.max_rel_dev < prev, "not decreasing at M=" + std::to_string(M));
    prev = r.max_rel_dev;
    scan += (scan.empty() ? "" : " ") + sci(r.max_rel_dev);
  }
  require(o, prev <= kPushforwardTerminal, "terminal " + sci(prev));
  note(o, "max_rel_dev [" + scan + "]");
  return o;
}

// 11. Rigid rotation.
Outcome evolution() {
  Outcome o;
  const AlgebraRep rep = build_sl_rep(3);
  double inv = 0.0, law = 0.0;
  bool period = true;
  for (int i = 0; i < 10; ++i) {
    const PhasePointKA p = random_phase_point(rep, 2, 0.3, 11000 + i);
    for (double tau : {0.3, 1.7, -2.9}) inv = std::max(inv, evolve_invariance_check(rep, p, tau, 0.5, 2.6));
    law = std::max(law, evolve(evolve(p, 0.8), 1.3).k.coeff_distance(evolve(p, 2.1).k));
    period = period && evolve(p, two_pi).k.coeff_distance(p.k) == 0.0 &&
             evolve(evolve(p, 1.0), -1.0).k.coeff_distance(p.k) <= kGroupLawTol;
  }
  require(o, inv <= kEvolveTol, "invariance " + sci(inv));
  require(o, law <= kGroupLawTol, "group law " + sci(law));
  require(o, period, "full period is not the identity");
  note(o, "invariance " + sci(inv) + ", group law " + sci(law));
  return o;
}

// 12. CLI reproducibility and exit codes.
Outcome cli() {
  namespace fs = std::filesystem;
  Outcome o;
  const fs::path dir = fs::path(PLWZW_TEST_TMP) / "cli";
  fs::create_directories(dir);
  auto call = [](std::vector<std::string> args, std::string* text = nullptr) {
    std::ostringstream out, err;
    const int code = app::run(args, out, err);
    if (text) *text = out.str();
    return code;
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto put = [&dir](const char* name, const std::string& body) {
    std::ofstream(dir / name) << body;
    return (dir / name).string();
  };

  std::string g1, g2;
  require(o, call({"gen", "--n", "3", "--seed", "5"}, &g1) == 0 && call({"gen", "--n", "3", "--seed", "5"}, &g2) == 0,
          "gen failed");
  require(o, g1 == g2 && !g1.empty(), "gen output differs between runs");

  const std::string v1 = (dir / "v1.csv").string(), v2 = (dir / "v2.csv").string();
  require(o, call({"verify", "--suite", "all", "--count", "2", "--out", v1}) == 0, "verify exit code");
  require(o, call({"verify", "--suite", "all", "--count", "2", "--out", v2}) == 0, "verify exit code");
  require(o, slurp(v1) == slurp(v2), "verify reports differ");

  const std::string ident = R"({"n": 2, "m_min": 0, "m_max": 0, "coeff": [[[[1,0],[0,0]],[[0,0],[1,0]]]]})";
  const std::string wall = put("wall.json", R"({"phase_point": {"k": )" + ident + R"(, "a": [0.0]}})");
  const std::string wind = put("winding.json", R"({"loop": {"n": 2, "m_min": -1, "m_max": 1, "coeff": [
      [[[0,0],[0,0]],[[0,0],[1,0]]], [[[0,0],[0,0]],[[0,0],[0,0]]], [[[1,0],[0,0]],[[0,0],[0,0]]]]}})");
  const std::string bad = put("bad.json", "{ not json");
  const struct {
    std::vector<std::string> args;
    int code;
  } cases[] = {
      {{"verify", "--suite", "cybe", "--count", "1"}, app::kPass},
      {{"verify", "--suite", "dybe", "--count", "1", "--tol", "1e-30"}, app::kTolerance},
      {{"verify", "--suite", "bogus"}, app::kUsage},
      {{}, app::kUsage},
      {{"factorize", "--input", wall}, app::kDomain},
      {{"factorize", "--input", wind}, app::kDomain},
      {{"factorize", "--input", bad}, app::kIo},
      {{"factorize", "--input", (dir / "missing.json").string()}, app::kIo},
  };
  for (const auto& c : cases) {
    const int got = call(c.args);
    if (got != c.code) {
      std::string line;
      for (const auto& a : c.args) line += " " + a;
      require(o, false, "exit " + std::to_string(got) + " (expected " + std::to_string(c.code) + ") for" + line);
    }
  }
  note(o, "reports byte-identical, " + std::to_string(std::size(cases)) + " exit-code fixtures");
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"algebra layer", algebra_layer},
      {"classical Yang-Baxter", cybe},
      {"dynamical Yang-Baxter", dybe},
      {"elliptic to hyperbolic degeneration", degeneration},
      {"Birkhoff factorization", birkhoff},
      {"loop Iwasawa and Iw_eps", iwasawa},
      {"duality map", duality},
      {"Jacobi identities", jacobi},
      {"current algebra limit", current_limit},
      {"duality pushforward", pushforward},
      {"evolution", evolution},
      {"command line", cli},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %-38s %s  (%.1f s)  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
