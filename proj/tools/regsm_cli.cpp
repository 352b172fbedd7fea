// Command-line front door: solve instances, reproduce the guarantee and
// hardness tables, run verification suites, generate instance files.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <sstream>

#include "regsm/bench.hpp"
#include "regsm/contgreedy.hpp"
#include "regsm/cutlp.hpp"
#include "regsm/doublegreedy.hpp"
#include "regsm/guarantees.hpp"
#include "regsm/io.hpp"
#include "regsm/parallel.hpp"
#include "regsm/sgap.hpp"

using namespace regsm;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapability = 3;
constexpr int kExitVerify = 4;

struct CommonOpts {
  std::string instance_path;
  std::string algo;
  std::string out;
  double r = 1.0;
  double beta = 1.0;
  double alpha = 1.0;
  double t = 1.0;
  double ts = -1.0;  // <0: use the default pair set
  double tf = 1.0;
  int steps = 200;
  int samples = 0;
  std::uint64_t seed = 1;
  int threads = 0;
  double eps = 0.5;
};

void emit(const std::string& out, const std::string& text) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw ParseError("cannot open output file: " + out);
  f << text;
}

json set_record(Mask s, int n) {
  json rec;
  rec["bitmask"] = s;
  json elems = json::array();
  for (int u = 0; u < n; ++u)
    if (contains(s, u)) elems.push_back(u);
  rec["elements"] = elems;
  return rec;
}

int run_solve(const CommonOpts& opt) {
  Instance inst = load_instance(opt.instance_path);
  CgConfig cfg;
  cfg.steps = opt.steps;
  cfg.samples = opt.samples;
  cfg.seed = opt.seed;
  TimePairs pairs;
  if (opt.ts >= 0)
    pairs = {{opt.ts, opt.tf}};
  else
    pairs = time_pair_grid(20, inst.constraint ? 1.0 : 2.0);

  json params;
  Mask set = 0;
  auto t0 = std::chrono::steady_clock::now();
  if (opt.algo == "brute") {
    params["alpha"] = opt.alpha;
    params["beta"] = opt.beta;
    set = brute_force_opt(inst, opt.alpha, opt.beta).set;
  } else if (opt.algo == "deterministic-dg") {
    params["r"] = opt.r;
    set = deterministic_dg(inst.f, inst.ell, opt.r, default_order(inst.n())).first;
  } else if (opt.algo == "randomized-dg") {
    set = randomized_dg(inst.f, inst.ell, default_order(inst.n()), opt.seed).first;
  } else if (opt.algo == "oblivious-dicut") {
    params["beta"] = opt.beta;
    set = oblivious_dicut(inst.f, inst.ell, opt.beta, opt.seed);
  } else if (opt.algo == "cut-lp") {
    set = undirected_cut_lp(inst.f, inst.ell, inst.polytope()).set;
  } else if (opt.algo == "dicut-lp") {
    if (inst.constraint) throw ContractError("dicut-lp solves unconstrained instances only");
    set = directed_cut_lp(inst.f, inst.ell).set;
  } else if (opt.algo == "trivial") {
    set = trivial_approx(inst.ell, inst.polytope(), opt.seed);
  } else if (opt.algo == "pipeline-nonpos") {
    params["eps"] = opt.eps;
    set = pipeline_nonpos(inst, cfg, pairs, opt.eps).set;
  } else if (opt.algo == "pipeline-nonneg-csm") {
    set = pipeline_nonneg_csm(inst, cfg).set;
  } else if (opt.algo == "pipeline-unconstrained") {
    params["t"] = opt.t;
    set = pipeline_unconstrained(inst, opt.t, cfg).set;
  } else if (opt.algo == "pipeline-0280") {
    params["eps"] = opt.eps;
    set = pipeline_0280(inst, cfg, {{0.205, 0.955}}, opt.eps).set;
  } else if (opt.algo == "pipeline-nonneg-usm") {
    params["eps"] = opt.eps;
    set = pipeline_nonneg_usm_beta1(inst, cfg, pairs, opt.eps).set;
  } else {
    throw CLI::ValidationError("--algo", "unknown algorithm: " + opt.algo);
  }
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  json rec;
  rec["algorithm"] = opt.algo;
  rec["params"] = params;
  rec["set"] = set_record(set, inst.n());
  rec["f"] = inst.f.eval(set);
  rec["ell"] = inst.ell.eval(set);
  rec["total"] = inst.value(set);
  rec["runtime_ms"] = ms;
  rec["seed"] = opt.seed;
  emit(opt.out, rec.dump(2) + "\n");
  return kExitOk;
}

std::vector<double> parse_beta_list(const std::string& text) {
  std::vector<double> betas;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) betas.push_back(std::stod(item));
  }
  if (betas.empty()) throw CLI::ValidationError("--beta", "expected a comma-separated list");
  return betas;
}

int run_table(const std::string& name, const std::string& beta_list, const std::string& out,
              int threads) {
  std::vector<double> betas = parse_beta_list(beta_list);
  std::vector<TableRow> rows;
  if (name == "nonpos") {
    rows = table_nonpos(betas, threads);
  } else if (name == "nonneg-comb") {
    rows = table_nonneg_comb(betas, threads);
  } else if (name == "nonneg-csm") {
    for (double b : betas) {
      auto sol = alpha_nonneg_csm(b, default_csm_pairs());
      rows.push_back({b, sol.alpha, ""});
    }
  } else if (name == "csm-guessed") {
    for (double b : betas) {
      auto sol = alpha_csm_guessed(b, {{0.205, 0.955}});
      rows.push_back({b, sol.alpha, ""});
    }
  } else {
    throw CLI::ValidationError(
        "--name", "unknown table (valid: nonpos, nonneg-comb, nonneg-csm, csm-guessed)");
  }
  std::ostringstream os;
  os << "beta,alpha,witness\n";
  for (const auto& r : rows) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f,%.4f,", r.beta, r.alpha);
    os << buf << "\"" << r.witness << "\"\n";
  }
  emit(out, os.str());
  return kExitOk;
}

int run_sgap(const std::string& table, const std::string& limit, const std::string& beta_list,
             const std::string& out, int threads) {
  std::ostringstream os;
  if (!table.empty()) {
    SignMode mode;
    if (table == "inapprox-nonpos")
      mode = SignMode::NonPositiveEllQ;
    else if (table == "inapprox-unconstrained")
      mode = SignMode::Unconstrained;
    else
      throw CLI::ValidationError(
          "--table", "unknown table (valid: inapprox-nonpos, inapprox-unconstrained)");
    std::vector<double> betas = parse_beta_list(beta_list);
    os << "beta,alpha,kappa,ell_p,ell_q\n";
    SgapGrids grids;
    grids.threads = threads;
    for (double b : betas) {
      auto res = outer_min(b, mode, grids);
      char buf[128];
      std::snprintf(buf, sizeof buf, "%.4f,%.4f,%.4f,%.4f,%.4f\n", b, res.alpha, res.params.kappa,
                    res.params.ell_p, res.params.ell_q);
      os << buf;
    }
  } else if (!limit.empty()) {
    os << "limit,value,target\n";
    char buf[160];
    if (limit == "2ln2") {
      auto lim = limit_two_ln_two();
      std::snprintf(buf, sizeof buf, "2ln2,%.5f,%.5f\n", lim.beta, 2 * std::log(2.0));
    } else if (limit == "sqrt2") {
      auto lim = limit_sqrt2();
      std::snprintf(buf, sizeof buf, "sqrt2,%.5f,%.5f\n", lim.beta, 2 * std::sqrt(2.0) / 3);
    } else if (limit == "0408") {
      auto chk = hyperedge_0408_check();
      std::snprintf(buf, sizeof buf, "0408,%.5f,%.5f\n", chk.alpha_bound, 0.4074);
    } else if (limit == "0478") {
      double v = cardinality_0478_check(0.3513);
      std::snprintf(buf, sizeof buf, "0478,%.5f,%.5f\n", v, 0.478);
    } else if (limit == "csm-beta1") {
      int k = 2;
      while (!csm_beta1_check(k, 0.01, 1.0)) ++k;
      std::snprintf(buf, sizeof buf, "csm-beta1,%d,%.5f\n", k, 1.0);
    } else {
      throw CLI::ValidationError("--limit",
                                 "unknown limit (valid: 2ln2, sqrt2, 0408, 0478, csm-beta1)");
    }
    os << buf;
  } else {
    throw CLI::ValidationError("sgap", "pass either --table or --limit");
  }
  emit(out, os.str());
  return kExitOk;
}

// --- verify suites ----------------------------------------------------------

int fail_count = 0;
void verify_check(bool ok, const std::string& what) {
  if (!ok) {
    ++fail_count;
    std::cerr << "FAIL " << what << "\n";
  }
}

void verify_dg_invariants(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    int n = 4 + static_cast<int>(rng() % 7);
    RandomInstanceParams p;
    p.n = n;
    p.seed = rng();
    p.ellmin = 0;
    p.ellmax = 0.6;
    Instance inst = random_dicut(p);
    for (double r : {1.0, 2.0, 4.0}) {
      auto [set, trace] = deterministic_dg(inst.f, inst.ell, r, default_order(n));
      for (const auto& st : trace.steps)
        verify_check(st.gain_x - st.gain_y >= -1e-9, "marginal-order invariant");
      double value = inst.value(set);
      double denom = r + 1 + 1 / r;
      verify_check(value >= brute_force_opt(inst, 1 / denom, (r + 1) / denom).value - 1e-9,
                   "threshold greedy (f, l) guarantee");
      verify_check(value >= brute_force_opt(inst, 0, 1).value - 1e-9,
                   "threshold greedy l guarantee");
    }
    double expect = exact_dg_expectation(inst.f, inst.ell, default_order(n));
    for (double r : {1.0, 2.0, 4.0, 8.0}) {
      double denom = r + 2 + 1 / r;
      verify_check(expect >= brute_force_opt(inst, 2 / denom, (r + 2) / denom).value - 1e-9,
                   "randomized greedy expectation guarantee");
    }
  }
}

void verify_cg_trajectory(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    RandomInstanceParams p;
    p.n = 6 + static_cast<int>(rng() % 3);
    p.seed = rng();
    p.ellmin = -0.3;
    p.ellmax = 0.3;
    Instance inst = random_dicut(p);
    Polytope pol = Polytope::of_matroid(Matroid::uniform(p.n, 3));
    const int steps = 60;
    Vec prev = Vec::Zero(p.n);
    for (int j = 1; j <= steps; ++j) {
      CgConfig cfg;
      cfg.steps = j;
      cfg.t_f = static_cast<double>(j) / steps;
      Vec y = distorted_measured_cg(inst.f, inst.ell, pol, cfg);
      verify_check((y >= prev - 1e-12).all(), "trajectory monotone");
      double delta = 1.0 / steps;
      double cap = 1 - std::pow(1 - delta, cfg.t_f / delta) + 1e-9;
      verify_check((y <= cap).all(), "trajectory cap");
      verify_check(pol.scaled(cfg.t_f).member(y, 1e-7), "trajectory membership");
      prev = y;
    }
  }
}

void verify_cutlp(std::uint64_t seed, int cases) {
  std::mt19937_64 rng(seed);
  RandomInstanceParams p;
  p.ellmin = -0.4;
  p.ellmax = 0.4;
  for (int i = 0; i < cases; ++i) {
    p.n = 5 + static_cast<int>(rng() % 4);
    p.seed = rng();
    Instance cut = random_cut(p);
    int k = 1 + static_cast<int>(rng() % p.n);
    cut.constraint = Matroid::uniform(p.n, k);
    auto rc = undirected_cut_lp(cut.f, cut.ell, cut.polytope());
    verify_check(rc.expected >= brute_force_opt(cut, 0.5, 1.0).value - 1e-9,
                 "undirected cut LP guarantee");
    Instance dicut = random_dicut(p);
    auto rd = directed_cut_lp(dicut.f, dicut.ell);
    for (int u = 0; u < p.n; ++u)
      verify_check(std::abs(2 * rd.x[u] - std::round(2 * rd.x[u])) < 1e-7,
                   "dicut LP half-integrality");
    verify_check(rd.expected >= brute_force_opt(dicut, 0.5, 1.0).value - 1e-9,
                 "directed cut LP guarantee");
  }
}

void verify_tables(int threads) {
  auto rows = table_nonpos({0.7, 1.0, 1.3}, threads);
  verify_check(std::abs(rows[0].alpha - 0.3478) <= 1e-3, "table nonpos beta=0.7");
  verify_check(std::abs(rows[1].alpha - 0.3856) <= 1e-3, "table nonpos beta=1.0");
  verify_check(std::abs(rows[2].alpha - 0.3982) <= 1e-3, "table nonpos beta=1.3");
  auto comb = table_nonneg_comb({0.85, 0.9, 1.0}, threads);
  verify_check(std::abs(comb[0].alpha - 0.4749) <= 1e-3, "table nonneg-comb beta=0.85");
  verify_check(std::abs(comb[1].alpha - 0.4493) <= 1e-3, "table nonneg-comb beta=0.9");
  verify_check(std::abs(comb[2].alpha - 0.3856) <= 1e-3, "table nonneg-comb beta=1.0");
}

void verify_sgap_tables(int threads) {
  SgapGrids grids;
  grids.threads = threads;
  auto a = outer_min(0.6, SignMode::NonPositiveEllQ, grids);
  verify_check(std::abs(a.alpha - 0.3846) <= 2e-3, "sgap table beta=0.6");
  auto b = outer_min(1.0, SignMode::NonPositiveEllQ, grids);
  verify_check(std::abs(b.alpha - 0.4773) <= 2e-3, "sgap table beta=1.0");
  auto c = outer_min(1.0, SignMode::Unconstrained, grids);
  verify_check(std::abs(c.alpha - 0.4392) <= 2e-3, "sgap unconstrained beta=1.0");
}

void verify_limits() {
  verify_check(limit_two_ln_two().beta >= 1.376, "2ln2 limit");
  auto s2 = limit_sqrt2();
  verify_check(s2.beta <= 0.9434 && s2.beta >= 2 * std::sqrt(2.0) / 3 - 1e-9, "sqrt2 limit");
  auto h = hyperedge_0408_check();
  verify_check(h.max_at_origin && std::abs(h.alpha_bound - 0.4074) < 1e-4, "0408 bound");
  verify_check(cardinality_0478_check(0.3513) < 0.478, "0478 cardinality check");
  verify_check(!csm_beta1_check(2, 0.51, 0.5) && csm_beta1_check(100, 0.02, 1.0),
               "k-arc gap condition");
}

int run_verify(const std::string& suite, std::uint64_t seed, int cases, int threads) {
  fail_count = 0;
  if (suite == "dg-invariants")
    verify_dg_invariants(seed, cases);
  else if (suite == "cg-trajectory")
    verify_cg_trajectory(seed, std::max(1, cases / 40));
  else if (suite == "cutlp")
    verify_cutlp(seed, cases);
  else if (suite == "tables")
    verify_tables(threads);
  else if (suite == "sgap-tables")
    verify_sgap_tables(threads);
  else if (suite == "limits")
    verify_limits();
  else
    throw CLI::ValidationError("--suite",
                               "unknown suite (valid: dg-invariants, cg-trajectory, cutlp, "
                               "tables, sgap-tables, limits)");
  if (fail_count > 0) {
    std::cerr << suite << ": " << fail_count << " check(s) failed\n";
    return kExitVerify;
  }
  std::cout << suite << ": ok\n";
  return kExitOk;
}

std::map<std::string, double> parse_params(const std::string& text) {
  std::map<std::string, double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw CLI::ValidationError("--params", "expected key=value pairs");
    out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return out;
}

int run_gen(const std::string& family, const std::string& params_text, const std::string& out) {
  auto params = parse_params(params_text);
  auto get = [&](const std::string& key, double fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (out.empty()) throw CLI::ValidationError("--out", "gen requires an output path");
  if (family == "gharan-vondrak") {
    save_instance(out, gharan_vondrak(static_cast<int>(get("k", 3)), static_cast<int>(get("t", 1)),
                                      get("kappa", 0.3513)));
  } else if (family == "dg-tight-det") {
    save_instance(out, dg_tight_det(get("r", 2), get("eps", 0.1)));
  } else if (family == "dg-tight-rand") {
    save_instance(out, dg_tight_rand(static_cast<int>(get("n", 41)), get("r", 4)));
  } else if (family == "dg-rand-bad") {
    save_instance(out, dg_rand_bad(static_cast<int>(get("n", 21)), get("r", 4)));
  } else if (family == "online-bad") {
    auto [keep, drop] = online_bad(get("alpha", 0.4));
    save_instance(out, keep);
    auto dot = out.rfind('.');
    std::string drop_path =
        dot == std::string::npos ? out + ".drop" : out.substr(0, dot) + ".drop" + out.substr(dot);
    save_instance(drop_path, drop);
  } else if (family == "hyperedge-0408") {
    save_instance(out, hyperedge_0408(static_cast<int>(get("k", 3))));
  } else if (family == "csm-dicut-arcs") {
    save_instance(out, csm_dicut_arcs(static_cast<int>(get("k", 5))));
  } else if (family == "random-dicut" || family == "random-cut" || family == "random-coverage") {
    RandomInstanceParams rp;
    rp.n = static_cast<int>(get("n", 8));
    rp.density = get("density", 0.5);
    rp.wmin = get("wmin", 0);
    rp.wmax = get("wmax", 1);
    rp.ellmin = get("ellmin", -1);
    rp.ellmax = get("ellmax", 0);
    rp.seed = static_cast<std::uint64_t>(get("seed", 1));
    Instance inst = family == "random-dicut"  ? random_dicut(rp)
                    : family == "random-cut"  ? random_cut(rp)
                                              : random_coverage(rp);
    save_instance(out, inst);
  } else {
    throw CLI::ValidationError("--family", "unknown family: " + family);
  }
  return kExitOk;
}

const char* kAlgoHelp =
    "brute (exact oracle), deterministic-dg ((1/(r+1+1/r), (r+1)/(r+1+1/r)) for l >= 0), "
    "randomized-dg ((2/(r+2+1/r), (r+2)/(r+2+1/r)) in expectation for l >= 0), "
    "oblivious-dicut ((beta(1-beta), beta) for dicut f), "
    "cut-lp ((0.5, 1) for undirected cut f under a matroid), "
    "dicut-lp ((0.5, 1) for dicut f, unconstrained), "
    "trivial ((0, 1) linear maximization), "
    "pipeline-nonpos ((0.385, 1) for l <= 0; alpha(beta) up to 0.398), "
    "pipeline-nonneg-csm ((1/e, 1-1/e) for l >= 0 under a matroid), "
    "pipeline-unconstrained ((t e^-t/(t+e^-t), t/(t+e^-t)) at time t), "
    "pipeline-0280 ((0.280, 0.7) under a matroid), "
    "pipeline-nonneg-usm ((0.385, 1) for l >= 0, unconstrained)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regsm: solvers and numeric analysis for submodular-plus-linear maximization"};
  app.require_subcommand(1);

  CommonOpts opt;
  if (const char* env = std::getenv("REGSUBMOD_THREADS")) opt.threads = std::atoi(env);

  auto* solve_cmd = app.add_subcommand("solve", "Run one algorithm on an instance file");
  solve_cmd->add_option("--instance", opt.instance_path, "Instance JSON path")->required();
  solve_cmd->add_option("--algo", opt.algo, kAlgoHelp)->required();
  solve_cmd->add_option("--r", opt.r, "Threshold parameter r >= 1");
  solve_cmd->add_option("--beta", opt.beta, "Linear-term coefficient");
  solve_cmd->add_option("--alpha", opt.alpha, "Submodular-term coefficient (brute)");
  solve_cmd->add_option("--t", opt.t, "Final time for the single-run pipeline");
  solve_cmd->add_option("--ts", opt.ts, "Aided switch time (with --tf overrides the pair grid)");
  solve_cmd->add_option("--tf", opt.tf, "Aided final time");
  solve_cmd->add_option("--steps", opt.steps, "Time discretization steps");
  solve_cmd->add_option("--samples", opt.samples, "Gradient samples (0 = exact)");
  solve_cmd->add_option("--seed", opt.seed, "RNG seed");
  solve_cmd->add_option("--eps", opt.eps, "Guess-grid resolution");
  solve_cmd->add_option("--threads", opt.threads, "Worker cap");
  solve_cmd->add_option("--out", opt.out, "Write the result record here instead of stdout");

  std::string table_name, beta_list = "1.0";
  auto* table_cmd = app.add_subcommand("table", "Emit guarantee-curve rows as CSV");
  table_cmd->add_option("--name", table_name, "nonpos | nonneg-comb | nonneg-csm | csm-guessed")
      ->required();
  table_cmd->add_option("--beta", beta_list, "Comma-separated beta values");
  table_cmd->add_option("--threads", opt.threads, "Worker cap");
  table_cmd->add_option("--out", opt.out, "Output CSV path");

  std::string sgap_table, sgap_limit;
  auto* sgap_cmd = app.add_subcommand("sgap", "Hardness-side parameter searches and limits");
  sgap_cmd->add_option("--table", sgap_table, "inapprox-nonpos | inapprox-unconstrained");
  sgap_cmd->add_option("--limit", sgap_limit, "2ln2 | sqrt2 | 0408 | 0478 | csm-beta1");
  sgap_cmd->add_option("--beta", beta_list, "Comma-separated beta values");
  sgap_cmd->add_option("--threads", opt.threads, "Worker cap");
  sgap_cmd->add_option("--out", opt.out, "Output CSV path");

  std::string suite;
  int cases = 200;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite (exit 0 iff green)");
  verify_cmd
      ->add_option("--suite", suite,
                   "dg-invariants | cg-trajectory | cutlp | tables | sgap-tables | limits")
      ->required();
  verify_cmd->add_option("--seed", opt.seed, "RNG seed");
  verify_cmd->add_option("--cases", cases, "Number of random cases");
  verify_cmd->add_option("--threads", opt.threads, "Worker cap");

  std::string family, params_text;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance file");
  gen_cmd->add_option("--family", family,
                      "gharan-vondrak | dg-tight-det | dg-tight-rand | dg-rand-bad | online-bad "
                      "| hyperedge-0408 | csm-dicut-arcs | random-dicut | random-cut | "
                      "random-coverage")
      ->required();
  gen_cmd->add_option("--params", params_text, "key=value pairs, comma separated");
  gen_cmd->add_option("--out", opt.out, "Output instance path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitUsage : kExitOk;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(opt);
    if (table_cmd->parsed()) return run_table(table_name, beta_list, opt.out, opt.threads);
    if (sgap_cmd->parsed())
      return run_sgap(sgap_table, sgap_limit, beta_list, opt.out, opt.threads);
    if (verify_cmd->parsed()) return run_verify(suite, opt.seed, cases, opt.threads);
    if (gen_cmd->parsed()) return run_gen(family, params_text, opt.out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const ContractError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
