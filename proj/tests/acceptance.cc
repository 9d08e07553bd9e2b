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

// Acceptance checks. Each criterion prints one line
//   criterion N: PASS|FAIL  <details>
// and the process exits nonzero if any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oracles.h"
#include "wl1nmf/analysis.h"
#include "wl1nmf/datagen.h"
#include "wl1nmf/dense_cd.h"
#include "wl1nmf/hals.h"
#include "wl1nmf/reduction.h"
#include "wl1nmf/scd.h"
#include "wl1nmf/weighted_median.h"

namespace wl1nmf {
namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string fmt(double v, int prec = 4) {
  std::ostringstream s;
  s.precision(prec);
  s << v;
  return s.str();
}

double sign_error(const DenseMatrix& m, const std::vector<double>& u,
                  const std::vector<double>& v) {
  double e = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) e += std::fabs(m(i, j) - u[i] * v[j]);
  }
  return e;
}

// ------------------------------------------------------------------------ 1

void criterion1(Outcome& o) {
  struct Row {
    long m, n;
    double zeros, sigma;
  };
  const Row rows[] = {
      {100, 200, 0.25, 1.37}, {100, 200, 0.50, 2.15}, {100, 200, 0.80, 5.97},
      {300, 400, 0.25, 1.37}, {300, 400, 0.50, 2.13}, {300, 400, 0.80, 5.80},
      {500, 600, 0.25, 1.36}, {500, 600, 0.50, 2.12}, {500, 600, 0.80, 5.73},
      {800, 1000, 0.25, 1.36}, {800, 1000, 0.50, 2.11}, {800, 1000, 0.80, 5.67}};
  double worst = 0.0;
  for (const Row& r : rows) {
    const long mn = r.m * r.n;
    const long nnz = std::lround((1.0 - r.zeros) * static_cast<double>(mn));
    const double s = sigma_gain(r.m, r.n, nnz);
    const double dev = std::fabs(s - r.sigma);
    worst = std::max(worst, dev);
    std::ostringstream what;
    what << r.m << "x" << r.n << "@" << r.zeros << " gives " << fmt(s);
    o.require(dev <= 0.01, what.str());
  }
  o.detail << "12 rows, max |sigma - table| = " << fmt(worst, 3);
}

// ------------------------------------------------------------------------ 2

void criterion2(Outcome& o) {
  const double needed[] = {1.15, 3.0};
  const double zeros[] = {0.25, 0.80};
  o.detail << "800x1000 r=20 30 sweeps:";
  for (int k = 0; k < 2; ++k) {
    WL1Problem p;
    p.x = gen_uniform_sparse(800, 1000, zeros[k], 2026);
    p.rank = 20;
    p.seed = 1;
    p.init = ExplicitInit{hals_init(p, 10)};
    p.stop.max_sweeps = 30;
    p.stop.fixed_sweeps = true;
    const SolveResult s = scd(p);
    const SolveResult d = cd_dense(p);
    const double ts = s.trace.sweeps.back().seconds / s.trace.sweeps.size();
    const double td = d.trace.sweeps.back().seconds / d.trace.sweeps.size();
    const double ratio = td / ts;
    o.detail << " zeros " << zeros[k] << ": sCD " << fmt(ts, 3) << " s, CD "
             << fmt(td, 3) << " s, ratio " << fmt(ratio, 3) << " (need >= "
             << needed[k] << ");";
    o.require(ratio >= needed[k], "speed ratio at " + fmt(zeros[k]));
  }
}

// ------------------------------------------------------------------------ 3

void criterion3(Outcome& o) {
  double worst = 0.0;
  bool iterates = true;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    WL1Problem p;
    p.x = gen_uniform_sparse(50, 40, 0.2 + 0.06 * static_cast<double>(seed),
                             100 + seed);
    p.rank = 5;
    p.seed = seed;
    p.init = RandomInit{};
    p.stop.max_sweeps = 20;
    p.stop.fixed_sweeps = true;
    const SolveResult s = scd(p);
    const SolveResult d = cd_dense(p);
    o.require(s.trace.sweeps.size() == 20 && d.trace.sweeps.size() == 20,
              "sweep counts");
    for (std::size_t k = 0; k < std::min(s.trace.sweeps.size(),
                                         d.trace.sweeps.size());
         ++k) {
      const double a = s.trace.sweeps[k].objective;
      const double b = d.trace.sweeps[k].objective;
      worst = std::max(worst, std::fabs(a - b) / std::max(std::fabs(b), 1e-300));
    }
    iterates = iterates && s.factors.w == d.factors.w && s.factors.h == d.factors.h;
    // Intermediate iterates: truncated runs from the same start.
    for (int k = 1; k < 20; k += 3) {
      WL1Problem q = p;
      q.stop.max_sweeps = k;
      const SolveResult sk = scd(q);
      const SolveResult dk = cd_dense(q);
      iterates = iterates && sk.factors.w == dk.factors.w &&
                 sk.factors.h == dk.factors.h;
    }
  }
  o.require(worst <= 1e-9, "objective sequences");
  o.require(iterates, "identical iterates");
  o.detail << "10 instances 50x40 r=5, 20 sweeps: max rel objective gap "
           << fmt(worst, 3) << ", iterates "
           << (iterates ? "identical" : "differ");
}

// ------------------------------------------------------------------------ 4

void criterion4(Outcome& o) {
  const auto x = from_dense(DenseMatrix::FromRows(
      {{1, 1, 0, 0}, {0, 0, 0, 1}, {1, 0, 1, 0}, {0, 0, 1, 0}}));
  const DenseMatrix w(4, 1, {1, 2.5, 1, 2});
  struct Case {
    double lambda;
    std::vector<double> expected;
  };
  const Case cases[] = {{1.0, {0, 0, 0, 0}},
                        {0.85, {0, 0, 0.5, 0}},
                        {0.4, {1, 0, 0.5, 0}}};
  for (const Case& c : cases) {
    DenseMatrix h(1, 4, 0.3);
    update_h(x, w, h, c.lambda);
    const std::vector<double> got(h.data().begin(), h.data().end());
    o.detail << " lambda " << c.lambda << " -> (";
    for (std::size_t j = 0; j < got.size(); ++j) {
      o.detail << (j ? "," : "") << got[j];
    }
    o.detail << ")";
    o.require(got == c.expected, "lambda " + fmt(c.lambda));
  }
}

// ------------------------------------------------------------------------ 5

void criterion5(Outcome& o) {
  const DenseMatrix xd = DenseMatrix::FromRows({{1, 1, 1, 0, 0, 1},
                                                {1, 1, 1, 0, 0, 0},
                                                {1, 1, 1, 0, 1, 0},
                                                {0, 1, 0, 1, 1, 1},
                                                {0, 0, 0, 1, 1, 1},
                                                {1, 0, 0, 1, 1, 1}});
  DenseMatrix block(6, 6, 0.0);
  for (Index i = 0; i < 6; ++i) {
    for (Index j = 0; j < 6; ++j) block(i, j) = (i < 3) == (j < 3) ? 1.0 : 0.0;
  }
  WL1Problem p;
  p.x = from_dense(xd);
  p.rank = 2;
  p.lambda = 1.0;
  p.init = HalsInit{3};
  double best = std::numeric_limits<double>::infinity();
  DenseMatrix best_wh;
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    p.seed = seed;
    const SolveResult r = scd(p);
    const DenseMatrix wh = r.factors.product();
    const double e = oracle::weighted_l1(xd, r.factors.w, r.factors.h, 1.0);
    if (std::fabs(e - 4.0) < 1e-9) ++hits;
    if (e < best) {
      best = e;
      best_wh = wh;
    }
  }
  const double block_gap = oracle::frobenius(best_wh, block);
  o.detail << "best ||X - WH||_1 = " << fmt(best, 10) << " (" << hits
           << "/10 seeds at 4), ||WH - block||_F = " << fmt(block_gap, 3);
  o.require(std::fabs(best - 4.0) < 1e-9, "best error 4");
  o.require(block_gap < 1e-9, "block structure");
}

// ------------------------------------------------------------------------ 6

void criterion6(Outcome& o) {
  double worst_exact = 0.0;
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 9; ++k) {
      const BernoulliLADSetting s{m, 0.1 * k};
      worst_exact = std::max(
          {worst_exact,
           std::fabs(prob_alpha1_positive(s) - oracle::enumerate_positive(m, s.p, true)),
           std::fabs(prob_alpha2_positive(s) - oracle::enumerate_positive(m, s.p, false))});
    }
  }
  o.require(worst_exact <= 1e-12, "enumeration match");

  double worst_z = 0.0;
  std::uint64_t seed = 500;
  for (int m : {5, 10, 50}) {
    for (double p : {0.3, 0.5, 0.8}) {
      const BernoulliLADSetting s{m, p};
      for (Estimator which : {Estimator::kAlpha1, Estimator::kAlpha2}) {
        const double exact = which == Estimator::kAlpha1 ? prob_alpha1_positive(s)
                                                        : prob_alpha2_positive(s);
        const McEstimate e = prob_mc_estimate(s, which, 100000, seed++, 4);
        const double se = std::sqrt(exact * (1.0 - exact) / 1e5);
        const double gap = std::fabs(e.estimate - exact);
        if (gap > 3.0 * se) {
          o.require(false, "MC m=" + std::to_string(m) + " p=" + fmt(p));
        }
        if (se > 0.0) worst_z = std::max(worst_z, gap / se);
      }
    }
  }

  const double a03 = prob_alpha1_positive({400, 0.3});
  const double a05 = prob_alpha1_positive({400, 0.5});
  const double a08 = prob_alpha1_positive({400, 0.8});
  o.require(a03 < 0.01, "alpha1 m=400 p=0.3");
  o.require(a08 > 0.99, "alpha1 m=400 p=0.8");
  o.require(std::fabs(a05 - 0.5) <= 0.05, "alpha1 m=400 p=0.5");
  double min_a2 = 1.0;
  for (double p : {0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
    min_a2 = std::min(min_a2, prob_alpha2_positive({400, p}));
  }
  o.require(min_a2 > 0.99, "alpha2 m=400");
  o.detail << "enumeration max gap " << fmt(worst_exact, 3)
           << "; MC max |z| " << fmt(worst_z, 3) << " (limit 3); m=400: a1(0.3)="
           << fmt(a03, 3) << " a1(0.5)=" << fmt(a05, 4) << " a1(0.8)=" << fmt(a08, 6)
           << " min a2(p>=0.3)=" << fmt(min_a2, 6);
}

// ------------------------------------------------------------------------ 7

void criterion7(Outcome& o) {
  std::mt19937_64 gen(7007);
  std::bernoulli_distribution coin(0.5);
  std::uniform_real_distribution<double> mag(0.0, 2.0);
  long instances = 0, eq_checks = 0, ineq_checks = 0;
  bool eq_ok = true, ineq_ok = true;
  for (int s = 1; s <= 3; ++s) {
    for (int t = 1; t <= 3; ++t) {
      const int cells = s * t;
      for (long bits = 0; bits < (1L << cells); ++bits) {
        DenseMatrix m(s, t);
        for (int e = 0; e < cells; ++e) {
          m(e / t, e % t) = (bits >> e) & 1 ? 1.0 : -1.0;
        }
        const DenseMatrix x = encode(m, 0).x;
        ++instances;
        for (int k = 0; k < 100; ++k) {
          std::vector<double> u(s), v(t);
          for (double& e : u) e = coin(gen) ? 1.0 : -1.0;
          for (double& e : v) e = coin(gen) ? 1.0 : -1.0;
          const auto [w, h] = embed_solution(u, v);
          eq_ok = eq_ok && rank1_l1_error(x, w, h) == cells + sign_error(m, u, v);
          ++eq_checks;
        }
        std::vector<double> w(2 * s), h(2 * t);
        for (int k = 0; k < 10000; ++k) {
          for (double& e : w) e = coin(gen) ? 0.0 : mag(gen);
          for (double& e : h) e = coin(gen) ? 0.0 : mag(gen);
          const auto [u, v] = extract_solution(w, h);
          ineq_ok = ineq_ok &&
                    rank1_l1_error(x, w, h) + 1e-12 >= cells + sign_error(m, u, v);
          ++ineq_checks;
        }
      }
    }
  }
  o.require(eq_ok, "equality");
  o.require(ineq_ok, "inequality");

  const DenseMatrix cx = DenseMatrix::FromRows(
      {{1, 1, 0, 1, 0}, {0, 1, 0, 1, 1}, {0, 1, 1, 1, 0}, {1, 0, 1, 1, 1}});
  const double a = std::sqrt(1.5), b = std::sqrt(2.0 / 3.0);
  const double e = rank1_l1_error(cx, {1, 1, 1, a}, {b, 1, b, 1, b});
  const BinaryRank1 opt = best_binary_rank1(cx);
  o.require(std::fabs(e - 6.899) <= 1e-3, "counterexample value");
  o.require(opt.error == 7.0, "binary optimum");
  o.detail << instances << " sign matrices, " << eq_checks << " equalities, "
           << ineq_checks << " inequalities; counterexample " << fmt(e, 6)
           << " vs binary optimum " << opt.error;
}

// ------------------------------------------------------------------------ 8

void criterion8(Outcome& o) {
  const double lambdas[] = {0.0, 0.05, 0.25, 1.0};
  double mean[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const FalseZeroInstance inst =
        gen_lowrank_falsezeros(100, 50, 20, {0.1}, {0.5, 0.5}, 800 + seed);
    for (int k = 0; k < 4; ++k) {
      WL1Problem p;
      p.x = inst.x;
      p.rank = 20;
      p.lambda = lambdas[k];
      p.seed = seed;
      const SolveResult r = scd(p);
      const ErrorReport rep =
          error_report(p.x, &inst.truth, r.factors.w, r.factors.h, p.lambda);
      mean[k] += *rep.rel_fro_vs_truth / 10.0;
    }
  }
  o.detail << "mean rel Frobenius vs truth:";
  for (int k = 0; k < 4; ++k) o.detail << " lambda " << lambdas[k] << " " << fmt(mean[k]);
  o.require(mean[1] < mean[3], "err(0.05) < err(1)");
  o.require(mean[1] < mean[0], "err(0.05) < err(0)");
}

// ------------------------------------------------------------------------ 9

DenseMatrix random_factor(Index m, Index n, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  DenseMatrix a(m, n);
  for (double& v : a.data()) v = u(gen) < 0.2 ? 0.0 : u(gen);
  return a;
}

void criterion9(Outcome& o) {
  std::mt19937_64 gen(9009);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_int_distribution<int> dim(2, 30);
  std::uniform_int_distribution<int> rank(1, 6);

  // Descent per half-sweep.
  int descent_fail = 0;
  long half_sweeps = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index m = dim(gen), n = dim(gen), r = rank(gen);
    const double lambda = trial % 5 == 0 ? 1.0 : u01(gen);
    const auto x = from_dense(oracle::random_dense(m, n, 0.9 * u01(gen), gen));
    const auto xt = transpose(x);
    DenseMatrix w = random_factor(m, r, gen), h = random_factor(r, n, gen);
    double prev = objective(x, w, h, lambda);
    for (int sweep = 0; sweep < 5; ++sweep) {
      DenseMatrix wt = w.transposed(), ht = h.transposed();
      update_h(xt, ht, wt, lambda);
      w = wt.transposed();
      double cur = objective(x, w, h, lambda);
      descent_fail += cur > prev * (1 + 1e-12) + 1e-12;
      prev = cur;
      update_h(x, w, h, lambda);
      cur = objective(x, w, h, lambda);
      descent_fail += cur > prev * (1 + 1e-12) + 1e-12;
      prev = cur;
      half_sweeps += 2;
    }
  }
  o.require(descent_fail == 0, "descent");

  // Binary closure.
  int nonbinary = 0;
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 20; ++trial) {
    const Index m = dim(gen), n = dim(gen), r = rank(gen);
    DenseMatrix xd(m, n), w(m, r), h(r, n);
    for (double& v : xd.data()) v = coin(gen);
    for (double& v : w.data()) v = coin(gen);
    for (double& v : h.data()) v = coin(gen);
    WL1Problem p;
    p.x = from_dense(xd);
    p.rank = r;
    p.init = ExplicitInit{{w, h}};
    p.stop.max_sweeps = 20;
    const SolveResult res = scd(p);
    for (const DenseMatrix* f : {&res.factors.w, &res.factors.h}) {
      for (double v : f->data()) nonbinary += !(v == 0.0 || v == 1.0);
    }
  }
  o.require(nonbinary == 0, "binary closure");

  // Predicate implies a zero median.
  int fired = 0, predicate_fail = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int q = 1 + trial % 12;
    std::vector<double> x(q), y(q);
    for (int s = 0; s < q; ++s) {
      x[s] = u01(gen) - 0.5;
      y[s] = u01(gen);
    }
    const double c = 2.0 * u01(gen);
    if (zero_update_predicate(x, y, c)) {
      ++fired;
      const auto med = constrained_weighted_median({x, y, c});
      predicate_fail += !(med && *med == 0.0);
    }
  }
  o.require(predicate_fail == 0 && fired > 0, "predicate");

  // Median vs breakpoint enumeration.
  int median_fail = 0;
  std::uniform_int_distribution<int> len(1, 16);
  for (int trial = 0; trial < 100000; ++trial) {
    const int q = len(gen);
    std::vector<double> x(q), y(q);
    for (int s = 0; s < q; ++s) {
      x[s] = 4.0 * u01(gen) - 1.0;
      y[s] = u01(gen) < 0.1 ? 0.0 : u01(gen);
    }
    const double c = u01(gen) < 0.3 ? 0.0 : 3.0 * u01(gen);
    const auto med = constrained_weighted_median({x, y, c});
    const oracle::ScalarMin best = oracle::lad_min(x, y, c);
    if (!med) {
      bool all_zero = c == 0.0;
      for (double v : y) all_zero = all_zero && v == 0.0;
      median_fail += !all_zero;
      continue;
    }
    const double f = oracle::lad(x, y, c, *med);
    median_fail += !(*med >= 0.0 && f <= best.value + 1e-12 * (1.0 + best.value));
  }
  o.require(median_fail == 0, "weighted median");

  // Sparse vs dense objective.
  double worst_obj = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Index m = dim(gen), n = dim(gen), r = rank(gen);
    const double lambda = u01(gen);
    const DenseMatrix xd = oracle::random_dense(m, n, u01(gen), gen);
    const DenseMatrix w = random_factor(m, r, gen), h = random_factor(r, n, gen);
    const double ref = oracle::weighted_l1(xd, w, h, lambda);
    const double got = objective(from_dense(xd), w, h, lambda);
    worst_obj = std::max(worst_obj, std::fabs(got - ref) / std::max(ref, 1e-300));
  }
  o.require(worst_obj <= 1e-10, "objective");

  o.detail << half_sweeps << " half-sweeps (" << descent_fail
           << " increases); 20 binary runs (" << nonbinary
           << " non-binary entries); predicate fired " << fired << "/10000 ("
           << predicate_fail << " nonzero medians); 100000 medians ("
           << median_fail << " mismatches); objective max rel gap "
           << fmt(worst_obj, 3);
}

// ----------------------------------------------------------------------- 10

void criterion10(Outcome& o) {
  const double lambdas[] = {0.0, 0.05, 0.25, 1.0};
  double mean[4] = {0, 0, 0, 0};
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    WL1Problem p;
    p.x = gen_uniform_sparse(200, 100, 0.7, 1000 + seed);
    p.rank = 10;
    p.seed = seed;
    for (int k = 0; k < 4; ++k) {
      p.lambda = lambdas[k];
      const SolveResult r = scd(p);
      mean[k] += 0.5 * (factor_sparsity(r.factors.w) + factor_sparsity(r.factors.h)) / 10.0;
    }
  }
  o.detail << "mean factor sparsity:";
  for (int k = 0; k < 4; ++k) o.detail << " lambda " << lambdas[k] << " " << fmt(mean[k]);
  for (int k = 1; k < 4; ++k) {
    o.require(mean[k] >= mean[k - 1], "nondecreasing at lambda " + fmt(lambdas[k]));
  }
}

}  // namespace
}  // namespace wl1nmf

int main(int argc, char** argv) {
  using wl1nmf::Outcome;
  const std::vector<std::function<void(Outcome&)>> criteria = {
      wl1nmf::criterion1, wl1nmf::criterion2, wl1nmf::criterion3,
      wl1nmf::criterion4, wl1nmf::criterion5, wl1nmf::criterion6,
      wl1nmf::criterion7, wl1nmf::criterion8, wl1nmf::criterion9,
      wl1nmf::criterion10};

  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  app.add_option("--criterion", selected, "Criteria to run (default: all)")
      ->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) {
    for (int k = 1; k <= 10; ++k) selected.push_back(k);
  }

  bool all = true;
  for (int k : selected) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k - 1](o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d: %s  %s (%.1f s)\n", k, o.pass ? "PASS" : "FAIL",
                o.detail.str().c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
