#include "app.hpp"

#include "suites.hpp"

#include "plwzw/errors.hpp"
#include "plwzw/factorize.hpp"
#include "plwzw/phase.hpp"
#include "plwzw/pushforward.hpp"
#include "plwzw/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

namespace plwzw::app {

namespace {

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["n"] = c.n;
  j["modes"] = c.modes;
  j["eps"] = c.eps;
  j["seed"] = c.seed;
  j["tol"] = c.tol;
  j["grid"] = c.grid;
  if (c.command == "gen") {
    j["kind"] = c.kind;
    j["amplitude"] = c.amplitude;
  }
  if (c.command == "factorize") j["mode"] = c.mode;
  if (c.command == "verify") {
    j["suite"] = c.suite;
    j["count"] = c.count;
  }
  if (c.command == "duality") {
    j["m_scan"] = c.m_scan;
    j["sigma"] = c.sigma;
    j["sigma_prime"] = c.sigma_prime;
  }
  if (!c.input.empty()) j["input"] = c.input;
  return j;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  if (!f) throw IoError("write failed for " + path);
}

void emit_json(const RunConfig& cfg, const json& report, std::ostream& out) {
  if (cfg.out.empty())
    out << report.dump(2) << "\n";
  else
    write_json_file(cfg.out, report);
}

std::string sibling(const std::string& path, const std::string& ext) {
  return std::filesystem::path(path).replace_extension(ext).string();
}

// Tagged input file: exactly one of "loop", "phase_point", "dual_point".
struct Input {
  std::string kind;
  json body;
};

Input load_input(const std::string& path) {
  if (path.empty()) throw InvalidArgument("--input is required");
  const json j = read_json_file(path);
  if (!j.is_object()) throw IoError(path + ": top level is not an object");
  for (const char* k : {"loop", "phase_point", "dual_point"})
    if (j.contains(k)) return {k, j.at(k)};
  throw IoError(path + ": expected a \"loop\", \"phase_point\" or \"dual_point\" entry");
}

template <class T, class F>
T parse_body(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw IoError(path + ": " + e.what());
  } catch (const InvalidArgument& e) {
    throw IoError(path + ": " + e.what());
  }
}

PhasePointKA load_phase_point(const Input& in, const std::string& path) {
  auto p = parse_body<PhasePointKA>(path, [&] { return phase_point_from_json(in.body); });
  require_chamber(build_sl_rep(p.k.n()).root_system(), p.a);
  return p;
}

PhasePointDual load_dual_point(const Input& in, const std::string& path) {
  auto q = parse_body<PhasePointDual>(path, [&] { return dual_point_from_json(in.body); });
  require_chamber(build_sl_rep(q.ktilde.n()).root_system(), -q.atilde);
  return q;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const AlgebraRep rep = build_sl_rep(cfg.n);
  json report;
  report["config"] = config_json(cfg);
  if (cfg.kind == "loop") {
    report["loop"] = loop_to_json(random_near_identity(cfg.n, cfg.modes, cfg.amplitude, cfg.seed, LoopTarget::GL));
  } else if (cfg.kind == "phase") {
    report["phase_point"] = phase_point_to_json(random_phase_point(rep, cfg.modes, cfg.amplitude, cfg.seed));
  } else {
    const PhasePointKA p = random_phase_point(rep, 1, 0.0, cfg.seed);
    report["dual_point"] =
        dual_point_to_json({random_bbar(cfg.n, std::max(cfg.modes, 1), cfg.amplitude, cfg.seed), -p.a});
  }
  emit_json(cfg, report, out);
  return kPass;
}

int cmd_factorize(const RunConfig& cfg, std::ostream& out) {
  const Input in = load_input(cfg.input);
  FourierLoop l;
  if (in.kind == "loop") {
    l = parse_body<FourierLoop>(cfg.input, [&] { return loop_from_json(in.body); });
  } else if (in.kind == "phase_point") {
    const PhasePointKA p = load_phase_point(in, cfg.input);
    l = right_mul(p.k, build_sl_rep(p.k.n()).exp_cartan(p.a));
  } else {
    throw IoError(cfg.input + ": factorize takes a loop or a phase point");
  }
  const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;
  const int M_out = cfg.modes;
  json report;
  report["config"] = config_json(cfg);
  json cert;
  double residual = 0.0;
  if (cfg.mode == "birkhoff") {
    const BirkhoffFactors f = birkhoff_rh(l, M_out, tol);
    report["factors"] = {{"b", loop_to_json(f.b)}, {"bbar", loop_to_json(f.bbar)}};
    cert = {{"residual", f.residual},
            {"an_defect", f.an_defect},
            {"g_defect", f.g_defect},
            {"b_neg_mass", analyticity(f.b).neg_mass},
            {"bbar_pos_mass", f.bbar_pos_mass},
            {"null_singular", f.null_singular},
            {"gap_singular", f.gap_singular}};
    residual = f.residual;
  } else {
    const bool eps_mode = cfg.mode == "iwasawa-eps";
    const double eps = eps_mode ? (cfg.eps.empty() ? 1.0 : cfg.eps.front()) : 0.0;
    const IwasawaFactors f = eps_mode ? iwasawa_eps(l, eps, M_out, tol) : loop_iwasawa(l, M_out, tol);
    report["factors"] = {{"b", loop_to_json(f.b)}, {"u", loop_to_json(f.u)}};
    cert = {{"residual", f.residual},
            {"unitarity_defect", f.unitarity_defect},
            {"iterations", f.iterations},
            {"an_defect", an_defect(f.b.coeff(0))}};
    if (eps_mode) cert["eps"] = eps;
    residual = f.residual;
  }
  cert["tol"] = tol;
  cert["pass"] = residual <= tol;
  report["certificates"] = cert;
  emit_json(cfg, report, out);
  return residual <= tol ? kPass : kTolerance;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const SuiteResult res = run_suite(cfg);
  std::string csv = config_header(cfg) + csv_header();
  int failed = 0;
  for (const auto& r : res.rows) {
    csv += csv_line(r);
    if (!r.pass) ++failed;
  }
  std::ostringstream summary;
  summary << "suite " << cfg.suite << ": " << res.rows.size() - static_cast<size_t>(failed) << "/" << res.rows.size()
          << " passed\n";
  for (const auto& r : res.rows)
    if (!r.pass) summary << "  FAIL " << r.test_id << (r.note.empty() ? "" : ": " + r.note) << "\n";
  if (!res.limit_scan.empty()) {
    bool monotone = true;
    for (size_t i = 1; i < res.limit_scan.size(); ++i)
      monotone = monotone && res.limit_scan[i].second < res.limit_scan[i - 1].second;
    summary << "limit scan monotone: " << (monotone ? "yes" : "no") << "\n";
    if (!monotone) ++failed;
    std::string scan = config_header(cfg) + "# eps max_residual\n";
    for (const auto& [e, v] : res.limit_scan) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%g %.6e\n", e, v);
      scan += buf;
    }
    if (!cfg.out.empty()) write_text(sibling(cfg.out, ".scan.dat"), scan);
  }
  if (cfg.out.empty()) {
    out << csv;
    err << summary.str();
  } else {
    write_text(cfg.out, csv);
    out << summary.str();
  }
  return failed == 0 ? kPass : kTolerance;
}

int cmd_duality(const RunConfig& cfg, std::ostream& out) {
  const Input in = load_input(cfg.input);
  const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;
  PhasePointDual q;
  double roundtrip = 0.0;
  json report;
  report["config"] = config_json(cfg);
  if (in.kind == "phase_point") {
    const PhasePointKA p = load_phase_point(in, cfg.input);
    const AlgebraRep rep = build_sl_rep(p.k.n());
    const DualityForward f = duality_forward(rep, p);
    q = f.q;
    const PhasePointKA back = duality_inverse(rep, q).p;
    roundtrip = std::max(grid_distance(back.k, p.k, cfg.grid), (back.a.coords - p.a.coords).cwiseAbs().maxCoeff());
    report["expr_agreement"] = f.expr_agreement;
  } else if (in.kind == "dual_point") {
    q = load_dual_point(in, cfg.input);
    const AlgebraRep rep = build_sl_rep(q.ktilde.n());
    const PhasePointDual back = duality_forward(rep, duality_inverse(rep, q).p).q;
    roundtrip = std::max(grid_distance(back.ktilde, q.ktilde, cfg.grid),
                         (back.atilde.coords - q.atilde.coords).cwiseAbs().maxCoeff());
  } else {
    throw IoError(cfg.input + ": duality takes a phase point or a dual point");
  }
  const AlgebraRep rep = build_sl_rep(q.ktilde.n());
  report["dual_point"] = dual_point_to_json(q);
  report["roundtrip"] = roundtrip;

  const std::vector<int> scan_m = cfg.m_scan.empty() ? std::vector<int>{2, 4, 6} : cfg.m_scan;
  std::vector<double> dev;
  json scan = json::array();
  for (const int M : scan_m) {
    const PushforwardReport r = duality_pushforward_check(rep, q, cfg.sigma, cfg.sigma_prime, M);
    dev.push_back(r.max_rel_dev);
    scan.push_back({{"M", M}, {"max_rel_dev", r.max_rel_dev}, {"pi_antisym", r.pi_antisym}});
  }
  bool monotone = true;
  for (size_t i = 1; i < dev.size(); ++i) monotone = monotone && dev[i] < dev[i - 1];
  const bool tiny = std::all_of(dev.begin(), dev.end(), [](double d) { return d <= 1e-9; });
  const bool push_ok = !dev.empty() && dev.back() <= 1e-2 && (monotone || tiny);
  report["pushforward"] = scan;
  report["pushforward_monotone"] = monotone;
  report["pass"] = roundtrip <= tol && push_ok;
  emit_json(cfg, report, out);

  if (!cfg.out.empty()) {
    std::string dat = config_header(cfg) + "# M max_rel_dev\n";
    for (size_t i = 0; i < dev.size(); ++i) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%d %.6e\n", scan_m[i], dev[i]);
      dat += buf;
    }
    write_text(sibling(cfg.out, ".scan.dat"), dat);
  }
  return roundtrip <= tol && push_ok ? kPass : kTolerance;
}

int exit_code_for(const Error& e) {
  if (dynamic_cast<const IoError*>(&e)) return kIo;
  if (dynamic_cast<const NoConvergence*>(&e)) return kTolerance;
  if (dynamic_cast<const InvalidArgument*>(&e)) return kUsage;
  return kDomain;
}

} // namespace

std::string config_header(const RunConfig& cfg) {
  std::string s;
  const json j = config_json(cfg);
  for (const auto& [k, v] : j.items()) s += "# " + k + " = " + v.dump() + "\n";
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App cli{"Poisson-Lie loop-group toolkit: instance generation, factorization, verification", "plwzw"};
  cli.require_subcommand(1);
  RunConfig cfg;

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank + 1 of sl(n), 2..6")->check(CLI::Range(2, 6));
    sub->add_option("--modes", cfg.modes, "band limit M (output window for factorize)")->check(CLI::Range(0, 64));
    sub->add_option("--eps", cfg.eps, "deformation parameter, repeatable")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "base seed");
    sub->add_option("--tol", cfg.tol, "tolerance (0 = default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--grid", cfg.grid, "grid size override for certificates (0 = automatic)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--out", cfg.out, "output path (stdout when omitted)");
  };

  auto* gen = cli.add_subcommand("gen", "write a seeded random instance as JSON");
  common(gen);
  gen->add_option("--kind", cfg.kind, "phase | loop | dual")->check(CLI::IsMember({"phase", "loop", "dual"}));
  gen->add_option("--amplitude", cfg.amplitude, "size of the random part")->check(CLI::NonNegativeNumber);

  auto* fac = cli.add_subcommand("factorize", "factor a loop and report certificates");
  common(fac);
  fac->add_option("--mode", cfg.mode, "iwasawa | iwasawa-eps | birkhoff")
      ->check(CLI::IsMember({"iwasawa", "iwasawa-eps", "birkhoff"}));
  fac->add_option("--input", cfg.input, "loop or phase-point JSON")->required();

  auto* ver = cli.add_subcommand("verify", "run a residual suite over seeded instances");
  common(ver);
  ver->add_option("--suite", cfg.suite, "cybe | dybe | jacobi | limits | duality | roundtrip | all")
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--count", cfg.count, "number of seeded instances")->check(CLI::Range(1, 1000));

  auto* dua = cli.add_subcommand("duality", "round trip and pushforward check at one point");
  common(dua);
  dua->add_option("--input", cfg.input, "phase-point or dual-point JSON")->required();
  dua->add_option("--m-scan", cfg.m_scan, "chart band limits, repeatable")->check(CLI::Range(1, 16));
  dua->add_option("--sigma", cfg.sigma, "first evaluation point");
  dua->add_option("--sigma-prime", cfg.sigma_prime, "second evaluation point");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    cli.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return cli.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return cli.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      cfg.command = "gen";
      return cmd_gen(cfg, out);
    }
    if (fac->parsed()) {
      cfg.command = "factorize";
      return cmd_factorize(cfg, out);
    }
    if (ver->parsed()) {
      cfg.command = "verify";
      return cmd_verify(cfg, out, err);
    }
    cfg.command = "duality";
    return cmd_duality(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

} // namespace plwzw::app
