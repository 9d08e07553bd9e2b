// Copyright 2026 The wl1nmf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "wl1nmf/analysis.h"
#include "wl1nmf/datagen.h"
#include "wl1nmf/dense_cd.h"
#include "wl1nmf/hals.h"
#include "wl1nmf/io.h"
#include "wl1nmf/kernels.h"
#include "wl1nmf/random.h"
#include "wl1nmf/reduction.h"
#include "wl1nmf/scd.h"

namespace wl1nmf::cli {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

double to_double(const std::string& s, const std::string& flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument(flag + ": not a number: '" + s + "'");
}

long to_long(const std::string& s, const std::string& flag) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidArgument(flag + ": not an integer: '" + s + "'");
}

std::vector<double> parse_real_list(const std::string& s,
                                    const std::string& flag) {
  std::vector<double> out;
  for (const auto& t : split(s, ',')) out.push_back(to_double(t, flag));
  if (out.empty()) throw InvalidArgument(flag + ": empty list");
  return out;
}

// "a:b" (inclusive range) or "a,b,c".
std::vector<int> parse_int_list(const std::string& s, const std::string& flag) {
  std::vector<int> out;
  if (const auto colon = s.find(':'); colon != std::string::npos) {
    const long a = to_long(s.substr(0, colon), flag);
    const long b = to_long(s.substr(colon + 1), flag);
    if (a > b) throw InvalidArgument(flag + ": empty range");
    for (long v = a; v <= b; ++v) out.push_back(static_cast<int>(v));
    return out;
  }
  for (const auto& t : split(s, ',')) out.push_back(static_cast<int>(to_long(t, flag)));
  if (out.empty()) throw InvalidArgument(flag + ": empty list");
  return out;
}

// "random", "hals" or "hals:K".
InitPolicy parse_init(const std::string& s) {
  if (s == "random") return RandomInit{};
  if (s == "hals") return HalsInit{};
  if (s.rfind("hals:", 0) == 0) {
    const long k = to_long(s.substr(5), "--init");
    if (k < 0) throw InvalidArgument("--init: HALS sweeps must be >= 0");
    return HalsInit{static_cast<int>(k)};
  }
  throw InvalidArgument("--init must be 'random' or 'hals:K'");
}

std::vector<double> flatten_vector(const DenseMatrix& a,
                                   const std::string& what) {
  if (a.rows() != 1 && a.cols() != 1) {
    throw DataError(what + ": expected a single row or column");
  }
  return std::vector<double>(a.data().begin(), a.data().end());
}

std::string format_rel(double v) {
  std::ostringstream s;
  s.precision(10);
  s << v;
  return s.str();
}

// ---------------------------------------------------------------- factorize

struct FactorizeArgs {
  std::string input;
  int rank = 0;
  double lambda = 1.0;
  std::string solver = "scd";
  std::string init = "hals:10";
  std::uint64_t seed = 0;
  double tol = 1e-6;
  int max_sweeps = 1000;
  double time_limit = std::numeric_limits<double>::infinity();
  int threads = 1;
  int restarts = 1;
  std::string out_w;
  std::string out_h;
  std::string trace;
};

void add_factorize(CLI::App& app, FactorizeArgs& a) {
  auto* c = app.add_subcommand("factorize", "Factorize a MatrixMarket matrix");
  c->add_option("--input", a.input, "Input matrix (.mtx)")->required();
  c->add_option("--rank", a.rank, "Factorization rank")->required();
  c->add_option("--lambda", a.lambda, "Weight of zero entries in [0, 1]")
      ->capture_default_str();
  c->add_option("--solver", a.solver, "scd | cd-dense | hals")
      ->check(CLI::IsMember({"scd", "cd-dense", "hals"}))
      ->capture_default_str();
  c->add_option("--init", a.init, "random | hals:K")->capture_default_str();
  c->add_option("--seed", a.seed, "Random seed")->capture_default_str();
  c->add_option("--tol", a.tol, "Tolerance on the relative error change")
      ->capture_default_str();
  c->add_option("--max-sweeps", a.max_sweeps, "Sweep budget")
      ->capture_default_str();
  c->add_option("--time-limit", a.time_limit, "Wall-clock budget in seconds");
  c->add_option("--threads", a.threads, "Worker threads")->capture_default_str();
  c->add_option("--restarts", a.restarts,
                "Run seeds seed..seed+N-1 and keep the lowest objective")
      ->capture_default_str();
  c->add_option("--out-w", a.out_w, "Write W as CSV");
  c->add_option("--out-h", a.out_h, "Write H as CSV");
  c->add_option("--trace", a.trace, "Write the per-sweep trace as CSV");
}

int run_factorize(const FactorizeArgs& a, std::ostream& out,
                  std::ostream& err) {
  if (a.restarts < 1) throw InvalidArgument("--restarts must be >= 1");
  WL1Problem problem;
  problem.x = read_matrix_market(a.input);
  problem.rank = a.rank;
  problem.lambda = a.lambda;
  problem.init = parse_init(a.init);
  problem.stop.tolerance = a.tol;
  problem.stop.max_sweeps = a.max_sweeps;
  problem.stop.time_limit_seconds = a.time_limit;
  problem.threads = a.threads;

  std::optional<SolveResult> best;
  std::uint64_t best_seed = a.seed;
  double best_obj = 0.0;
  for (int k = 0; k < a.restarts; ++k) {
    problem.seed = a.seed + static_cast<std::uint64_t>(k);
    SolveResult r = a.solver == "scd"        ? scd(problem)
                    : a.solver == "cd-dense" ? cd_dense(problem)
                                             : hals_solve(problem);
    const double obj = objective(problem.x, r.factors.w, r.factors.h,
                                 problem.lambda);
    err << "seed " << problem.seed << ": objective " << format_rel(obj)
        << " after " << r.trace.sweeps.size() << " sweeps ("
        << to_string(r.trace.stop_reason) << ")\n";
    if (!best || obj < best_obj) {
      best = std::move(r);
      best_obj = obj;
      best_seed = problem.seed;
    }
  }
  for (const auto& w : best->trace.warnings) err << "warning: " << w << "\n";

  if (!a.out_w.empty()) write_dense_csv(best->factors.w, a.out_w);
  if (!a.out_h.empty()) write_dense_csv(best->factors.h, a.out_h);
  if (!a.trace.empty()) write_trace_csv(best->trace, a.trace);

  const ErrorReport rep = error_report(problem.x, nullptr, best->factors.w,
                                       best->factors.h, problem.lambda);
  out << "seed " << best_seed << "\n"
      << "objective " << format_rel(best_obj) << "\n"
      << "rel_l1 " << format_rel(rep.rel_l1) << "\n"
      << "w_sparsity " << format_rel(rep.w_sparsity) << "\n"
      << "h_sparsity " << format_rel(rep.h_sparsity) << "\n"
      << "sweeps " << best->trace.sweeps.size() << "\n"
      << "stop " << to_string(best->trace.stop_reason) << "\n";
  return kOk;
}

// ---------------------------------------------------------------------- gen

struct GenArgs {
  int m = 0;
  int n = 0;
  double zero_frac = 0.0;
  double p = 0.5;
  int rank = 0;
  double sigma = 0.1;
  double q1 = 0.5;
  double q2 = 0.5;
  std::uint64_t seed = 0;
  std::string input;
  std::string out;
  std::string truth_out;
};

std::vector<std::string> provenance(const std::string& what,
                                    const GenArgs& a) {
  std::ostringstream s;
  s << "generator " << what << " seed " << a.seed;
  return {s.str(), std::string("rng ") + Rng::kFamily};
}

void report_nnz(const SparseNonnegMatrix& x, std::ostream& out,
                std::ostream& err) {
  out << "m " << x.rows() << "\nn " << x.cols() << "\nnnz " << x.nnz()
      << "\n";
  if (x.nnz() == 0) err << "warning: generated matrix is empty\n";
}

// ---------------------------------------------------------------------- prob

struct ProbArgs {
  std::string m_list = "1:400";
  std::string p_list = "0.1,0.3,0.5,0.8";
  long mc = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out;
};

int run_prob(const ProbArgs& a, std::ostream& out) {
  const auto ms = parse_int_list(a.m_list, "--m-list");
  const auto ps = parse_real_list(a.p_list, "--p-list");
  if (a.mc < 0) throw InvalidArgument("--mc must be >= 0");
  std::ofstream file;
  if (!a.out.empty()) {
    file.open(a.out, std::ios::binary);
    if (!file) throw DataError(a.out + ": cannot open for writing");
  }
  std::ostream& dst = a.out.empty() ? out : file;
  dst << "m,p,alpha1,alpha2";
  if (a.mc > 0) dst << ",alpha1_mc,alpha1_se,alpha2_mc,alpha2_se";
  dst << "\n";
  for (double p : ps) {
    for (int m : ms) {
      const BernoulliLADSetting s{m, p};
      dst << m << "," << format_real(p) << ","
          << format_real(prob_alpha1_positive(s)) << ","
          << format_real(prob_alpha2_positive(s));
      if (a.mc > 0) {
        const auto e1 = prob_mc_estimate(s, Estimator::kAlpha1, a.mc, a.seed,
                                         a.threads);
        const auto e2 = prob_mc_estimate(s, Estimator::kAlpha2, a.mc, a.seed,
                                         a.threads);
        dst << "," << format_real(e1.estimate) << ","
            << format_real(e1.std_error) << "," << format_real(e2.estimate)
            << "," << format_real(e2.std_error);
      }
      dst << "\n";
    }
  }
  if (!a.out.empty() && !file) throw DataError(a.out + ": write failed");
  return kOk;
}

// --------------------------------------------------------------------- bench

struct BenchArgs {
  std::string sizes = "100x200,300x400";
  std::string zero_fracs = "0.25,0.5,0.8";
  int rank = 20;
  int sweeps = 30;
  std::uint64_t seed = 0;
  int threads = 1;
};

bool same_objectives(const SolveTrace& a, const SolveTrace& b) {
  if (a.sweeps.size() != b.sweeps.size()) return false;
  for (std::size_t k = 0; k < a.sweeps.size(); ++k) {
    const double x = a.sweeps[k].objective;
    const double y = b.sweeps[k].objective;
    if (std::fabs(x - y) > 1e-9 * std::max(std::fabs(x), std::fabs(y))) {
      return false;
    }
  }
  return true;
}

int run_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  const auto zfs = parse_real_list(a.zero_fracs, "--zero-fracs");
  if (a.sweeps < 1) throw InvalidArgument("--sweeps must be >= 1");
  out << "m,n,zero_frac,nnz,scd_seconds_per_sweep,cd_seconds_per_sweep,"
         "sigma,gain,objectives_match\n";
  for (const auto& size : split(a.sizes, ',')) {
    const auto x_at = size.find('x');
    if (x_at == std::string::npos) {
      throw InvalidArgument("--sizes entries must look like MxN");
    }
    const int m = static_cast<int>(to_long(size.substr(0, x_at), "--sizes"));
    const int n = static_cast<int>(to_long(size.substr(x_at + 1), "--sizes"));
    for (double zf : zfs) {
      WL1Problem problem;
      problem.x = gen_uniform_sparse(m, n, zf, a.seed);
      problem.rank = a.rank;
      problem.lambda = 1.0;
      problem.seed = a.seed;
      problem.threads = a.threads;
      problem.stop.max_sweeps = a.sweeps;
      problem.stop.fixed_sweeps = true;
      problem.init = ExplicitInit{hals_init(problem, 10)};
      err << "bench " << m << "x" << n << " zero_frac " << zf << "\n";
      const SolveResult s = scd(problem);
      const SolveResult d = cd_dense(problem);
      const double ts = s.trace.sweeps.back().seconds / s.trace.sweeps.size();
      const double td = d.trace.sweeps.back().seconds / d.trace.sweeps.size();
      out << m << "," << n << "," << format_real(zf) << "," << problem.x.nnz()
          << "," << format_rel(ts) << "," << format_rel(td) << ","
          << format_rel(sigma_gain(m, n, problem.x.nnz())) << ","
          << format_rel(td / ts) << ","
          << (same_objectives(s.trace, d.trace) ? "yes" : "no") << "\n";
    }
  }
  return kOk;
}

// -------------------------------------------------------------------- reduce

struct ReduceArgs {
  std::string input;
  std::int64_t budget = 0;
  std::string out;
  std::string m;
  std::string x;
  std::string w;
  std::string h;
};

int run_reduce_encode(const ReduceArgs& a, std::ostream& out) {
  const DenseMatrix m = read_dense_csv(a.input);
  const ReducedInstance inst = encode(m, a.budget);
  std::ostringstream note;
  note << "budget " << inst.budget;
  write_matrix_market(from_dense(inst.x), a.out, {note.str()});
  out << "s " << m.rows() << "\nt " << m.cols() << "\nbudget " << inst.budget
      << "\n";
  return kOk;
}

int run_reduce_verify(const ReduceArgs& a, std::ostream& out) {
  if (a.m.empty() == a.x.empty()) {
    throw InvalidArgument("reduce verify needs exactly one of --m or --x");
  }
  const auto w = flatten_vector(read_dense_csv(a.w), a.w);
  const auto h = flatten_vector(read_dense_csv(a.h), a.h);
  if (!a.x.empty()) {
    const DenseMatrix x = read_dense_csv(a.x);
    const double e = rank1_l1_error(x, w, h);
    const BinaryRank1 b = best_binary_rank1(x);
    out << "error " << format_rel(e) << "\n"
        << "binary_optimum " << format_rel(b.error) << "\n"
        << "relation " << (e < b.error ? "below" : e == b.error ? "equal" : "above")
        << "\n";
    return kOk;
  }
  const DenseMatrix m = read_dense_csv(a.m);
  const ReducedInstance inst = encode(m, 0);
  const auto [u, v] = extract_solution(w, h);
  const double lhs = rank1_l1_error(inst.x, w, h);
  const double st = static_cast<double>(m.rows()) * m.cols();
  const double sign_err = rank1_l1_error(m, u, v);
  const double rhs = st + sign_err;
  out << "lhs " << format_rel(lhs) << "\n"
      << "st " << format_rel(st) << "\n"
      << "sign_error " << format_rel(sign_err) << "\n"
      << "rhs " << format_rel(rhs) << "\n"
      << "relation "
      << (lhs == rhs ? "equal" : lhs > rhs ? "greater" : "violated") << "\n";
  return kOk;
}

CLI::App* deepest(CLI::App* app) {
  for (auto* sub : app->get_subcommands()) return deepest(sub);
  return app;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Weighted L1 nonnegative matrix factorization", "wl1nmf"};
  app.require_subcommand(1);
  std::string isa;
  app.add_option("--isa", isa, "Kernel variant: scalar | avx2");

  FactorizeArgs fa;
  add_factorize(app, fa);

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Generate synthetic data");
  gen->require_subcommand(1);
  auto* g_uni = gen->add_subcommand("uniform", "Uniform values, exact zero count");
  g_uni->add_option("--m", ga.m)->required();
  g_uni->add_option("--n", ga.n)->required();
  g_uni->add_option("--zero-frac", ga.zero_frac)->required();
  auto* g_ber = gen->add_subcommand("bernoulli", "Binary Bernoulli(p) entries");
  g_ber->add_option("--m", ga.m)->required();
  g_ber->add_option("--n", ga.n)->required();
  g_ber->add_option("--p", ga.p)->required();
  auto* g_lfz = gen->add_subcommand("lowrank-fz",
                                    "Noisy low-rank matrix with false zeros");
  g_lfz->add_option("--m", ga.m)->required();
  g_lfz->add_option("--n", ga.n)->required();
  g_lfz->add_option("--rank", ga.rank)->required();
  g_lfz->add_option("--sigma", ga.sigma, "Laplace diversity")->capture_default_str();
  g_lfz->add_option("--q1", ga.q1)->capture_default_str();
  g_lfz->add_option("--q2", ga.q2)->capture_default_str();
  g_lfz->add_option("--truth-out", ga.truth_out, "Write the noiseless matrix as CSV");
  auto* g_sp = gen->add_subcommand("saltpepper", "Flip entries with probability p");
  g_sp->add_option("--input", ga.input)->required();
  g_sp->add_option("--p", ga.p)->required();
  for (auto* g : {g_uni, g_ber, g_lfz, g_sp}) {
    g->add_option("--seed", ga.seed)->capture_default_str();
    g->add_option("--out", ga.out, "Output matrix (.mtx)")->required();
  }

  ProbArgs pa;
  auto* prob = app.add_subcommand("prob", "Positivity probabilities of scalar fits");
  prob->add_option("--m-list", pa.m_list, "a:b or a,b,c")->capture_default_str();
  prob->add_option("--p-list", pa.p_list)->capture_default_str();
  prob->add_option("--mc", pa.mc, "Monte Carlo samples (0 = off)");
  prob->add_option("--seed", pa.seed)->capture_default_str();
  prob->add_option("--threads", pa.threads)->capture_default_str();
  prob->add_option("--out", pa.out, "CSV destination (default stdout)");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Sparse vs dense CD timing");
  bench->add_option("--sizes", ba.sizes)->capture_default_str();
  bench->add_option("--zero-fracs", ba.zero_fracs)->capture_default_str();
  bench->add_option("--rank", ba.rank)->capture_default_str();
  bench->add_option("--sweeps", ba.sweeps)->capture_default_str();
  bench->add_option("--seed", ba.seed)->capture_default_str();
  bench->add_option("--threads", ba.threads)->capture_default_str();

  ReduceArgs ra;
  auto* reduce = app.add_subcommand("reduce", "Sign-matrix reduction tools");
  reduce->require_subcommand(1);
  auto* r_enc = reduce->add_subcommand("encode", "Encode a +-1 CSV matrix");
  r_enc->add_option("--input", ra.input)->required();
  r_enc->add_option("--budget", ra.budget)->required();
  r_enc->add_option("--out", ra.out)->required();
  auto* r_ver = reduce->add_subcommand("verify", "Check a rank-one pair");
  r_ver->set_help_flag("--help", "Print this help message and exit");
  r_ver->add_option("--m", ra.m, "+-1 CSV matrix");
  r_ver->add_option("--x", ra.x, "Binary CSV matrix");
  r_ver->add_option("--w", ra.w)->required();
  r_ver->add_option("--h", ra.h)->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    err << deepest(&app)->help();
    return kUsage;
  }

  try {
    if (!isa.empty()) kernels::select(kernels::parse_isa(isa));
    if (app.got_subcommand("factorize")) return run_factorize(fa, out, err);
    if (g_uni->parsed()) {
      const auto x = gen_uniform_sparse(ga.m, ga.n, ga.zero_frac, ga.seed);
      write_matrix_market(x, ga.out, provenance("uniform", ga));
      report_nnz(x, out, err);
      return kOk;
    }
    if (g_ber->parsed()) {
      const auto x = gen_bernoulli(ga.m, ga.n, ga.p, ga.seed);
      write_matrix_market(x, ga.out, provenance("bernoulli", ga));
      report_nnz(x, out, err);
      return kOk;
    }
    if (g_lfz->parsed()) {
      const auto inst = gen_lowrank_falsezeros(ga.m, ga.n, ga.rank,
                                               LaplaceNoiseSpec{ga.sigma},
                                               FalseZeroSpec{ga.q1, ga.q2},
                                               ga.seed);
      write_matrix_market(inst.x, ga.out, provenance("lowrank-fz", ga));
      if (!ga.truth_out.empty()) write_dense_csv(inst.truth, ga.truth_out);
      report_nnz(inst.x, out, err);
      out << "clipped " << inst.clipped << "\ntype_one " << inst.type_one
          << "\ntype_two " << inst.type_two << "\n";
      return kOk;
    }
    if (g_sp->parsed()) {
      const auto x = gen_saltpepper(read_matrix_market(ga.input), ga.p, ga.seed);
      write_matrix_market(x, ga.out, provenance("saltpepper", ga));
      report_nnz(x, out, err);
      return kOk;
    }
    if (prob->parsed()) return run_prob(pa, out);
    if (bench->parsed()) return run_bench(ba, out, err);
    if (r_enc->parsed()) return run_reduce_encode(ra, out);
    if (r_ver->parsed()) return run_reduce_verify(ra, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kData;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  }
  err << app.help();
  return kUsage;
}

}  // namespace wl1nmf::cli
