// Command-line front end: build, analyze, diagnose, solve-l, verify, bench.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage or parameter error,
// 3 scale refusal.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bctkit/baselines.hpp"
#include "bctkit/butterfly.hpp"
#include "bctkit/diagnostics.hpp"
#include "bctkit/error.hpp"
#include "bctkit/gf2m.hpp"
#include "bctkit/kernels.hpp"
#include "bctkit/sbox.hpp"
#include "bctkit/solvers.hpp"
#include "bctkit/table_io.hpp"
#include "bctkit/tower.hpp"
#include "bctkit/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace bctkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitScale = 3;

fs::path default_output_dir() {
  if (const char* env = std::getenv("BCTKIT_OUTPUT_DIR"); env && *env) return env;
  return fs::current_path();
}

std::optional<std::uint64_t> parse_modulus(const std::string& text) {
  if (text.empty() || text == "default") return std::nullopt;
  return parse_hex(text);
}

Elem parse_base(const Field& f, const std::string& text, const char* what) {
  const std::uint64_t v = parse_hex(text);
  if (!f.contains(v)) throw Error(Errc::InvalidParams, std::string(what) + " is outside GF(2^m)");
  return static_cast<Elem>(v);
}

TowerEl parse_tower(const Tower& t, const std::string& text, const char* what) {
  const std::uint64_t v = parse_hex(text);
  if (v >= t.order()) throw Error(Errc::InvalidParams, std::string(what) + " is outside GF(2^n)");
  return t.decode(v);
}

std::string th(const Tower& t, TowerEl z) { return format_hex(t.encode(z), t.n()); }
std::string bh(const Field& f, Elem v) { return format_hex(v, f.degree()); }

json field_json(const Field& f) {
  return {{"m", f.degree()}, {"modulus", format_hex(f.modulus(), f.degree() + 1)}};
}

// ------------------------------------------------------------------ build

struct BuildArgs {
  std::string family;
  unsigned m = 3;
  unsigned k = 1;
  std::string theta, alpha, beta, modulus = "default", gamma;
  unsigned gold_i = 0;
  std::string output;
};

int cmd_build(const BuildArgs& a) {
  const Field field = Field::create(a.m, parse_modulus(a.modulus));
  const Tower tower(field);
  json params = {{"family", a.family}, {"field", field_json(field)}};
  SBoxTable table;

  if (a.family == "butterfly-closed" || a.family == "butterfly-open" || a.family == "univariate") {
    const bool has_theta = !a.theta.empty();
    const bool has_pair = !a.alpha.empty() || !a.beta.empty();
    if (has_theta == has_pair || (has_pair && (a.alpha.empty() || a.beta.empty()))) {
      throw Error(Errc::InvalidParams, "give either --theta or both --alpha and --beta");
    }
    const Butterfly bf = has_theta
                             ? Butterfly::from_theta(tower, a.k, parse_base(field, a.theta, "theta"))
                             : Butterfly::from_alpha_beta(tower, a.k, parse_base(field, a.alpha, "alpha"),
                                                          parse_base(field, a.beta, "beta"));
    const auto& p = bf.params();
    params["k"] = p.k;
    params["k_effective"] = p.k_odd;
    if (p.theta) params["theta"] = bh(field, *p.theta);
    params["alpha"] = bh(field, p.alpha);
    params["beta"] = bh(field, p.beta);
    params["condition_holds"] = p.condition_holds;
    json c = json::array();
    for (Elem v : bf.coeffs().c) c.push_back(bh(field, v));
    params["c"] = c;
    if (a.family == "butterfly-closed") table = bf.closed_table();
    else if (a.family == "butterfly-open") table = bf.open_table();
    else table = bf.univariate_table();
  } else if (a.family == "1" || a.family == "2" || a.family == "3") {
    BaselineParams bp;
    if (a.family == "2") {
      bp.gold_exponent = a.gold_i ? a.gold_i : default_gold_exponent(tower.n());
      params["i"] = *bp.gold_exponent;
    }
    if (a.family == "3") {
      if (a.gamma.empty()) throw Error(Errc::InvalidFamilyParams, "family 3 needs --gamma <hex> or --gamma auto");
      if (a.gamma == "auto") {
        bp.gamma = find_quadrinomial_gamma(tower);
        if (!bp.gamma) throw Error(Errc::InvalidFamilyParams, "no valid gamma exists");
      } else {
        bp.gamma = parse_tower(tower, a.gamma, "gamma");
      }
      params["gamma"] = th(tower, *bp.gamma);
    }
    table = baseline_family(std::stoi(a.family), tower, bp);
  } else {
    throw Error(Errc::InvalidParams, "unknown family '" + a.family + "'");
  }

  fs::path out = a.output.empty() ? default_output_dir() / (a.family + "-m" + std::to_string(a.m) + ".tbl")
                                  : fs::path(a.output);
  save_table(out, table);
  json manifest = make_manifest("build");
  manifest["params"] = params;
  manifest["output"] = out.filename().string();
  manifest["n"] = table.n();
  manifest["permutation"] = is_permutation(table);
  write_json(manifest_path_for(out), manifest);
  std::cout << out.string() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string table;
  bool ddt = false, bct = false, lqsl = false, walsh = false;
  std::string mode = "full";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  unsigned budget = 36;
  std::string output;
};

int cmd_analyze(AnalyzeArgs a) {
  const SBoxTable t = load_table(a.table);
  if (!a.ddt && !a.bct && !a.lqsl && !a.walsh) a.ddt = a.bct = a.lqsl = a.walsh = true;
  AnalysisOptions opts;
  opts.mode = parse_mode(a.mode);
  opts.samples = a.samples;
  opts.seed = a.seed;
  opts.threads = a.threads;
  opts.budget_log2 = a.budget;

  const fs::path dir = a.output.empty() ? default_output_dir() : fs::path(a.output);
  fs::create_directories(dir);
  json summaries = json::array();
  auto emit = [&](const char* stem, const SpectrumTable& s) {
    json j = summary_json(s.summary);
    write_json(dir / (std::string(stem) + ".json"), j);
    if (s.has_entries()) {
      std::ofstream csv(dir / (std::string(stem) + ".csv"));
      write_spectrum_csv(csv, s);
    }
    summaries.push_back(j);
  };
  if (a.ddt) emit("ddt", ddt(t, opts));
  if (a.bct) emit("bct", bct(t, opts));
  if (a.lqsl) emit("bct_lqsl", bct_lqsl_table(t, opts));
  if (a.walsh) emit("walsh", walsh(t, opts));

  json manifest = make_manifest("analyze");
  manifest["params"] = {{"table", fs::path(a.table).filename().string()},
                        {"n", t.n()},
                        {"mode", a.mode},
                        {"samples", a.samples},
                        {"seed", a.seed},
                        {"threads", a.threads},
                        {"budget_log2", a.budget},
                        {"kinds", {{"ddt", a.ddt}, {"bct", a.bct}, {"bct_lqsl", a.lqsl}, {"walsh", a.walsh}}}};
  write_json(dir / "manifest.json", manifest);
  std::cout << summaries.dump(2) << '\n';
  return kExitOk;
}

// --------------------------------------------------------------- diagnose

struct DiagnoseArgs {
  unsigned m = 3;
  unsigned k = 1;
  std::string theta, a, b, modulus = "default", output;
};

json z_report_json(const Tower& t, const ZReport& z) {
  const Field& f = t.base();
  return {{"z", th(t, z.z)},
          {"mu", th(t, z.mu)},
          {"nu", th(t, z.nu)},
          {"mu_from_v", th(t, z.mu_from_v)},
          {"nu_from_v", th(t, z.nu_from_v)},
          {"xi", bh(f, z.xi)},
          {"lambda", th(t, z.lambda)},
          {"delta", bh(f, z.delta)},
          {"E", bh(f, z.E)},
          {"H", th(t, z.H)},
          {"F", th(t, z.Fz)},
          {"delta_trace", z.delta_trace},
          {"delta_trace_closed", z.delta_trace_closed},
          {"second_trace", z.second_trace},
          {"second_trace_closed", z.second_trace_closed},
          {"predicted_roots", z.predicted_roots},
          {"classified_roots", z.classified_roots}};
}

int cmd_diagnose(const DiagnoseArgs& args) {
  const Field field = Field::create(args.m, parse_modulus(args.modulus));
  const Tower t(field);
  const Butterfly bf = Butterfly::from_theta(t, args.k, parse_base(field, args.theta, "theta"));
  const Diagnostics dg(bf);
  const TowerEl a = parse_tower(t, args.a, "a");
  const TowerEl b = parse_tower(t, args.b, "b");

  json j;
  j["params"] = {{"field", field_json(field)}, {"k", args.k}, {"theta", args.theta},
                 {"a", th(t, a)}, {"b", th(t, b)}};
  const DiffCoeffs dc = dg.diff_coeffs(a, b);
  json tau = json::array(), v = json::array();
  for (const auto& x : dc.tau) tau.push_back(th(t, x));
  for (const auto& x : dc.v) v.push_back(th(t, x));
  const DiffProperties pr = dg.check_properties(dc, b);
  j["tau"] = tau;
  j["v"] = v;
  j["properties"] = {{"v_sum_zero", pr.v_sum_zero}, {"tau_sums", pr.tau_sums}, {"v4_relation", pr.v4_relation},
                     {"bilinear", pr.bilinear}, {"v1_nonzero", pr.v1_nonzero}};
  const MuXiLambda mxl = dg.mu_xi_lambda(a);
  j["mu"] = th(t, mxl.mu);
  j["mu_from_v"] = th(t, mxl.mu_from_v);
  j["xi"] = bh(field, mxl.xi);
  j["lambda"] = th(t, mxl.lambda);
  j["gamma"] = th(t, mxl.gamma);
  j["eta"] = th(t, dg.eta(a));

  auto hex_list = [&](const std::vector<TowerEl>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(th(t, x));
    return out;
  };
  j["solutions"] = hex_list(dg.solve_difference(a, b));
  j["kernel_H"] = hex_list(dg.kernel_H(a));
  if (!b.is_zero()) {
    const BoomerangReport br = dg.boomerang_traces(a, b);
    json zs = json::array();
    for (const auto& z : br.per_z) zs.push_back(z_report_json(t, z));
    j["boomerang"] = {{"per_z", zs},
                      {"delta_trace_sum", br.delta_trace_sum},
                      {"all_delta_zero", br.all_delta_zero},
                      {"all_second_one", br.all_second_one},
                      {"pair_count", br.predicted_count}};
  }
  if (!args.output.empty()) {
    write_json(args.output, j);
    json manifest = make_manifest("diagnose");
    manifest["params"] = j["params"];
    write_json(manifest_path_for(args.output), manifest);
  }
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- solve-l

struct SolveArgs {
  unsigned m = 3;
  unsigned k = 1;
  std::string mu, nu, modulus = "default";
  bool as_json = false;
};

int cmd_solve_l(const SolveArgs& args) {
  const Field field = Field::create(args.m, parse_modulus(args.modulus));
  const Tower t(field);
  const LSolver solver(t, args.k);
  const TowerEl mu = parse_tower(t, args.mu, "mu");
  const TowerEl nu = parse_tower(t, args.nu, "nu");
  const LClassification cl = solver.classify(mu, nu);
  const auto roots = solver.solve(mu, nu);
  if (args.as_json) {
    json r = json::array();
    for (const auto& x : roots) r.push_back(th(t, x));
    std::cout << json{{"branch", branch_name(cl.branch)}, {"count", cl.count}, {"xi", bh(field, cl.xi)},
                      {"delta", bh(field, cl.delta)}, {"lambda", th(t, cl.lambda)}, {"roots", r}}
                     .dump(2)
              << '\n';
    return kExitOk;
  }
  std::cout << "branch " << branch_name(cl.branch) << '\n'
            << "count  " << cl.count << '\n'
            << "xi     " << bh(field, cl.xi) << '\n'
            << "delta  " << bh(field, cl.delta) << '\n'
            << "lambda " << th(t, cl.lambda) << '\n'
            << "roots ";
  for (const auto& x : roots) std::cout << ' ' << th(t, x);
  std::cout << '\n';
  return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  unsigned m = 3;
  std::vector<unsigned> ks;
  std::vector<std::string> thetas;
  std::string modulus = "default";
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  unsigned threads = 0;
  unsigned max_full_bits = 10;
  std::string output;
};

int cmd_verify(const VerifyArgs& a) {
  VerifyConfig cfg;
  cfg.m = a.m;
  cfg.modulus = parse_modulus(a.modulus);
  const Field field = Field::create(a.m, cfg.modulus);
  cfg.ks = a.ks;
  for (const auto& s : a.thetas) cfg.thetas.push_back(parse_base(field, s, "theta"));
  cfg.seed = a.seed;
  cfg.samples = a.samples;
  cfg.threads = a.threads;
  cfg.max_full_bits = a.max_full_bits;

  const VerifyReport rep = run_suite(parse_suite(a.suite), cfg);
  json j = rep.to_json();
  if (!a.output.empty()) {
    write_json(a.output, j);
    json manifest = make_manifest("verify");
    json ths = json::array();
    for (Elem t : cfg.thetas) ths.push_back(bh(field, t));
    manifest["params"] = {{"suite", a.suite}, {"field", field_json(field)}, {"k", a.ks}, {"theta", ths},
                          {"seed", a.seed}, {"samples", a.samples}, {"max_full_bits", a.max_full_bits}};
    write_json(manifest_path_for(a.output), manifest);
  }
  std::cout << j.dump(2) << '\n';
  return rep.passed() ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------------ bench

template <class Fn>
double seconds(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_bench(unsigned threads) {
  json j;
  j["kernels"] = kernels::active().name;

  {
    const Field f = Field::create(11);
    const std::uint64_t iters = 1u << 22;
    Elem acc = 1, x = 3;
    const double tt = seconds([&] {
      for (std::uint64_t i = 0; i < iters; ++i) acc = f.mul(acc ^ static_cast<Elem>(i & f.mask()), x) | 1u;
    });
    Elem acc2 = 1;
    const double tc = seconds([&] {
      for (std::uint64_t i = 0; i < iters; ++i) acc2 = f.mul_clmul(acc2 ^ static_cast<Elem>(i & f.mask()), x) | 1u;
    });
    j["field_mul_m11"] = {{"table_mul_per_s", iters / tt}, {"clmul_per_s", iters / tc},
                          {"checksum", acc ^ acc2}};
  }

  json runs = json::array();
  for (unsigned m : {3u, 5u}) {
    const Tower tower(Field::create(m));
    SBoxTable t;
    const double tb = seconds([&] { t = Butterfly::from_theta(tower, 1, 2).univariate_table(); });
    unsigned beta = 0;
    const double tbct = seconds([&] { beta = boomerang_uniformity(t, threads); });
    const double entries = static_cast<double>(t.size() - 1) * static_cast<double>(t.size() - 1);
    runs.push_back({{"n", tower.n()}, {"table_build_s", tb}, {"full_bct_s", tbct}, {"beta", beta},
                    {"bct_entries_per_s", entries / tbct}});
  }
  j["pipeline"] = runs;

  {
    const Tower tower(Field::create(7));
    const SBoxTable t = Butterfly::from_theta(tower, 1, 2).univariate_table();
    AnalysisOptions opts;
    opts.mode = Mode::Full;
    opts.threads = threads;
    try {
      bct(t, opts);
      j["n14_full_bct"] = "completed";
    } catch (const Error& e) {
      j["n14_full_bct"] = std::string("refused: ") + e.what();
    }
  }
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boomerang and differential analysis of generalized butterflies over GF(2^(2m))"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a table file");
  b->add_option("--family", build.family, "butterfly-closed | butterfly-open | univariate | 1 | 2 | 3")->required();
  b->add_option("--m", build.m, "Base field degree (odd)");
  b->add_option("--k", build.k, "Exponent k, gcd(k, m) = 1");
  b->add_option("--theta", build.theta, "Theta (hex)");
  b->add_option("--alpha", build.alpha, "Alpha (hex), with --beta");
  b->add_option("--beta", build.beta, "Beta (hex), with --alpha");
  b->add_option("--modulus", build.modulus, "Base field modulus (hex) or 'default'");
  b->add_option("--i", build.gold_i, "Family 2 exponent i, gcd(i, n) = 2");
  b->add_option("--gamma", build.gamma, "Family 3 gamma (hex) or 'auto'");
  b->add_option("-o,--output", build.output, "Output table file");

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "DDT, BCT and Walsh analysis of a table file");
  an->add_option("table", analyze.table, "Table file")->required();
  an->add_flag("--ddt", analyze.ddt);
  an->add_flag("--bct", analyze.bct);
  an->add_flag("--bct-lqsl", analyze.lqsl);
  an->add_flag("--walsh", analyze.walsh);
  an->add_option("--mode", analyze.mode, "full | max-only | sampled");
  an->add_option("--samples", analyze.samples);
  an->add_option("--seed", analyze.seed);
  an->add_option("--threads", analyze.threads, "Worker threads (0 = all)");
  an->add_option("--budget", analyze.budget, "Refuse exhaustive runs above 2^budget steps");
  an->add_option("-o,--output", analyze.output, "Output directory");

  DiagnoseArgs diag;
  auto* d = app.add_subcommand("diagnose", "Difference-equation and boomerang diagnostics for one (a, b)");
  d->add_option("--m", diag.m);
  d->add_option("--k", diag.k);
  d->add_option("--theta", diag.theta)->required();
  d->add_option("--a", diag.a)->required();
  d->add_option("--b", diag.b)->required();
  d->add_option("--modulus", diag.modulus);
  d->add_option("-o,--output", diag.output, "Also write the report to this file");

  SolveArgs solve;
  auto* s = app.add_subcommand("solve-l", "Classify and solve x^(2^k) + mu bar(x) + (mu+1) x + nu = 0");
  s->add_option("--m", solve.m);
  s->add_option("--k", solve.k);
  s->add_option("--mu", solve.mu)->required();
  s->add_option("--nu", solve.nu)->required();
  s->add_option("--modulus", solve.modulus);
  s->add_flag("--json", solve.as_json);

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("--suite", ver.suite, "theorem | necessity | open-butterfly | lemmas")->required();
  v->add_option("--m", ver.m);
  v->add_option("--k", ver.ks, "Repeatable; default every odd k coprime to m");
  v->add_option("--theta", ver.thetas, "Repeatable; default every theta outside GF(2)");
  v->add_option("--modulus", ver.modulus);
  v->add_option("--seed", ver.seed);
  v->add_option("--samples", ver.samples);
  v->add_option("--threads", ver.threads);
  v->add_option("--max-full-bits", ver.max_full_bits);
  v->add_option("-o,--output", ver.output, "Also write the report to this file");

  unsigned bench_threads = 0;
  auto* be = app.add_subcommand("bench", "Throughput measurements");
  be->add_option("--threads", bench_threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*b) return cmd_build(build);
    if (*an) return cmd_analyze(analyze);
    if (*d) return cmd_diagnose(diag);
    if (*s) return cmd_solve_l(solve);
    if (*v) return cmd_verify(ver);
    if (*be) return cmd_bench(bench_threads);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::ScaleRefusal ? kExitScale : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
