#include "suites.hpp"

#include "plwzw/errors.hpp"
#include "plwzw/phase.hpp"
#include "plwzw/poisson.hpp"
#include "plwzw/rmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <random>

namespace plwzw::app {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string instance_id(const std::string& prefix, int i) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d", i);
  return prefix + "-" + buf;
}

// Three points on the circle, pairwise at least min_gap apart mod 2 pi.
std::vector<double> sigma_triple(std::mt19937_64& rng, double min_gap = 0.2) {
  std::uniform_real_distribution<double> u(0.0, two_pi);
  auto dist = [](double x, double y) {
    const double d = std::fmod(std::abs(x - y), two_pi);
    return std::min(d, two_pi - d);
  };
  for (;;) {
    std::vector<double> s = {u(rng), u(rng), u(rng)};
    if (dist(s[0], s[1]) >= min_gap && dist(s[0], s[2]) >= min_gap && dist(s[1], s[2]) >= min_gap) return s;
  }
}

CartanElement random_chamber(const AlgebraRep& rep, std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  RVec v(rep.rank());
  for (int i = 0; i < rep.rank(); ++i) v(i) = u(rng);
  return cartan_from_simple_roots(rep, v);
}

SuiteRow failed_row(SuiteRow row, const std::string& what) {
  row.residual = std::numeric_limits<double>::quiet_NaN();
  row.pass = false;
  row.note = what;
  return row;
}

using Instance = std::function<std::vector<SuiteRow>(int)>;

// Instances run concurrently; rows come back in instance order.
std::vector<SuiteRow> fan_out(int count, const Instance& body) {
  std::vector<std::future<std::vector<SuiteRow>>> jobs;
  jobs.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) jobs.push_back(std::async(std::launch::async, body, i));
  std::vector<SuiteRow> rows;
  for (auto& j : jobs)
    for (auto& r : j.get()) rows.push_back(std::move(r));
  return rows;
}

double pick_tol(const RunConfig& cfg, double fallback) { return cfg.tol > 0.0 ? cfg.tol : fallback; }

std::vector<SuiteRow> suite_cybe(const RunConfig& cfg) {
  const AlgebraRep rep = build_sl_rep(cfg.n);
  const TrigKernel kernel(rep);
  const double tol = pick_tol(cfg, 1e-10);
  return fan_out(cfg.count, [&](int i) {
    const auto seed = cfg.seed + static_cast<unsigned long long>(i);
    std::mt19937_64 rng(seed);
    const auto s = sigma_triple(rng);
    SuiteRow row{instance_id("cybe", i), cfg.n, 0, std::nullopt, seed, s, 0.0, tol, false, ""};
    row.residual = cybe_residual(kernel, s[0], s[1], s[2]);
    row.pass = row.residual <= tol;
    return std::vector<SuiteRow>{row};
  });
}

std::vector<SuiteRow> suite_dybe(const RunConfig& cfg) {
  const AlgebraRep rep = build_sl_rep(cfg.n);
  const HyperbolicKernel hyp(rep);
  const double tol = pick_tol(cfg, 1e-6);
  const std::vector<double> eps = cfg.eps.empty() ? std::vector<double>{1.0, 2.0} : cfg.eps;
  return fan_out(cfg.count, [&](int i) {
    const auto seed = cfg.seed + static_cast<unsigned long long>(i);
    std::mt19937_64 rng(seed);
    const CartanElement a = random_chamber(rep, rng, 0.3, 2.0);
    const auto s = sigma_triple(rng);
    // elliptic points inside the alcove, highest root below pi eps
    const double hi = 2.4 * std::min(*std::min_element(eps.begin(), eps.end()), 1.0) / (cfg.n - 1);
    const CartanElement b = random_chamber(rep, rng, std::min(0.3, hi / 2.0), hi);
    std::vector<SuiteRow> rows;
    SuiteRow h{instance_id("dybe-hyp", i), cfg.n, 0, std::nullopt, seed, s, 0.0, tol, false, ""};
    try {
      h.residual = dybe_residual(as_dynamical(hyp), rep, a, s[0], s[1], s[2]);
      h.pass = h.residual <= tol;
      rows.push_back(h);
    } catch (const Error& e) {
      rows.push_back(failed_row(h, e.what()));
    }
    for (const double e : eps) {
      SuiteRow r{instance_id("dybe-ell", i) + "-e" + fmt("%g", e), cfg.n, 0, e, seed, s, 0.0, tol, false, ""};
      try {
        const EllipticKernel ek(rep, e);
        r.residual = dybe_residual(as_dynamical(ek), rep, b, s[0], s[1], s[2]);
        r.pass = r.residual <= tol;
        rows.push_back(r);
      } catch (const Error& err) {
        rows.push_back(failed_row(r, err.what()));
      }
    }
    return rows;
  });
}

std::vector<SuiteRow> suite_jacobi(const RunConfig& cfg) {
  const AlgebraRep rep = build_sl_rep(cfg.n);
  const ExchangeBrackets br(rep);
  const double tol = pick_tol(cfg, cfg.n == 2 ? 1e-9 : 1e-8);
  return fan_out(cfg.count, [&](int i) {
    const auto seed = cfg.seed + static_cast<unsigned long long>(i);
    std::mt19937_64 rng(seed);
    const PhasePointKA p = random_phase_point(rep, cfg.modes, 0.3, seed, 0.3, 2.0);
    const auto s = sigma_triple(rng);
    SuiteRow row{instance_id("jacobi", i), cfg.n, cfg.modes, std::nullopt, seed, s, 0.0, tol, false, ""};
    try {
      const std::vector<Mat> ks = {p.k.eval(s[0]), p.k.eval(s[1]), p.k.eval(s[2])};
      row.residual = jacobiator_inf(br, ks, p.a, s);
      row.pass = row.residual <= tol;
      return std::vector<SuiteRow>{row};
    } catch (const Error& e) {
      return std::vector<SuiteRow>{failed_row(row, e.what())};
    }
  });
}

std::vector<SuiteRow> suite_limits(const RunConfig& cfg, std::vector<std::pair<double, double>>& scan) {
  const AlgebraRep rep = build_sl_rep(cfg.n);
  const ExchangeBrackets br(rep);
  const double tol = pick_tol(cfg, 1e-6);
  const std::vector<double> eps = cfg.eps.empty() ? std::vector<double>{4.0, 6.0, 8.0} : cfg.eps;
  auto rows = fan_out(cfg.count, [&](int i) {
    const auto seed = cfg.seed + static_cast<unsigned long long>(i);
    std::mt19937_64 rng(seed);
    const FourierLoop x = random_hermitian_loop(cfg.n, std::max(cfg.modes, 1), 1.0, seed);
    const FourierLoop L = pointwise_exp(x, 1.0, -8 * std::max(cfg.modes, 1), 8 * std::max(cfg.modes, 1));
    std::vector<double> s;
    do {
      s = sigma_triple(rng);
    } while (std::abs(std::remainder(s[0] - s[1], two_pi)) < 0.5);
    const std::vector<double> pair = {s[0], s[1]};
    std::vector<SuiteRow> out;
    for (const double e : eps) {
      SuiteRow r{instance_id("limits", i) + "-e" + fmt("%g", e), cfg.n, cfg.modes, e, seed, pair, 0.0, tol, false, ""};
      try {
        r.residual = limit_current_residual(br, L.eval(s[0]), L.eval(s[1]), s[0] - s[1], e);
        r.pass = r.residual <= tol;
        out.push_back(r);
      } catch (const Error& err) {
        out.push_back(failed_row(r, err.what()));
      }
    }
    return out;
  });
  for (const double e : eps) {
    double worst = 0.0;
    for (const auto& r : rows)
      if (r.eps && *r.eps == e) worst = std::max(worst, std::isnan(r.residual) ? INFINITY : r.residual);
    scan.emplace_back(e, worst);
  }
  return rows;
}

std::vector<SuiteRow> suite_duality(const RunConfig& cfg) {
  const AlgebraRep rep = build_sl_rep(cfg.n);
  const double tol = pick_tol(cfg, 1e-9);
  return fan_out(cfg.count, [&](int i) {
    const auto seed = cfg.seed + static_cast<unsigned long long>(i);
    SuiteRow row{instance_id("duality", i), cfg.n, cfg.modes, std::nullopt, seed, std::nullopt, 0.0, tol, false, ""};
    try {
      const PhasePointKA p = random_phase_point(rep, cfg.modes, 0.2, seed);
      const DualityForward f = duality_forward(rep, p);
      row.residual = std::max({f.expr_agreement, f.ktilde_pos_mass, f.ktilde_g_defect});
      row.pass = row.residual <= tol;
      return std::vector<SuiteRow>{row};
    } catch (const Error& e) {
      return std::vector<SuiteRow>{failed_row(row, e.what())};
    }
  });
}

std::vector<SuiteRow> suite_roundtrip(const RunConfig& cfg) {
  const AlgebraRep rep = build_sl_rep(cfg.n);
  const double tol = pick_tol(cfg, 1e-8);
  return fan_out(cfg.count, [&](int i) {
    const auto seed = cfg.seed + static_cast<unsigned long long>(i);
    std::vector<SuiteRow> out;
    SuiteRow fwd{instance_id("roundtrip-ka", i), cfg.n, cfg.modes, std::nullopt, seed, std::nullopt, 0.0, tol, false, ""};
    try {
      const PhasePointKA p = random_phase_point(rep, cfg.modes, 0.2, seed);
      const PhasePointKA back = duality_inverse(rep, duality_forward(rep, p).q).p;
      fwd.residual = std::max(grid_distance(back.k, p.k, cfg.grid), (back.a.coords - p.a.coords).cwiseAbs().maxCoeff());
      fwd.pass = fwd.residual <= tol;
      out.push_back(fwd);
    } catch (const Error& e) {
      out.push_back(failed_row(fwd, e.what()));
    }
    SuiteRow inv{instance_id("roundtrip-dual", i), cfg.n, cfg.modes, std::nullopt, seed, std::nullopt, 0.0, tol, false, ""};
    try {
      std::mt19937_64 rng(seed);
      const PhasePointDual q{random_bbar(cfg.n, std::max(cfg.modes, 1), 0.1, seed), -random_chamber(rep, rng, 0.3, 1.0)};
      const PhasePointDual back = duality_forward(rep, duality_inverse(rep, q).p).q;
      inv.residual = std::max(grid_distance(back.ktilde, q.ktilde, cfg.grid),
                              (back.atilde.coords - q.atilde.coords).cwiseAbs().maxCoeff());
      inv.pass = inv.residual <= tol;
      out.push_back(inv);
    } catch (const Error& e) {
      out.push_back(failed_row(inv, e.what()));
    }
    return out;
  });
}

} // namespace

SuiteResult run_suite(const RunConfig& cfg) {
  SuiteResult res;
  auto append = [&res](std::vector<SuiteRow> rows) {
    for (auto& r : rows) res.rows.push_back(std::move(r));
  };
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "cybe") append(suite_cybe(cfg));
  if (all || cfg.suite == "dybe") append(suite_dybe(cfg));
  if (all || cfg.suite == "jacobi") append(suite_jacobi(cfg));
  if (all || cfg.suite == "limits") append(suite_limits(cfg, res.limit_scan));
  if (all || cfg.suite == "duality") append(suite_duality(cfg));
  if (all || cfg.suite == "roundtrip") append(suite_roundtrip(cfg));
  return res;
}

std::string csv_header() { return "test_id,n,M,eps,seed,sigma1,sigma2,sigma3,residual,tol,pass\n"; }

std::string csv_line(const SuiteRow& r) {
  std::string line = r.test_id + "," + std::to_string(r.n) + "," + std::to_string(r.M) + ",";
  if (r.eps) line += fmt("%g", *r.eps);
  line += "," + std::to_string(r.seed);
  for (size_t k = 0; k < 3; ++k) {
    line += ",";
    if (r.sigmas && k < r.sigmas->size()) line += fmt("%.6f", (*r.sigmas)[k]);
  }
  line += "," + (std::isnan(r.residual) ? std::string("nan") : fmt("%.6e", r.residual));
  line += "," + fmt("%.1e", r.tol);
  line += r.pass ? ",1\n" : ",0\n";
  return line;
}

} // namespace plwzw::app
