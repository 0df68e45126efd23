// Copyright 2026 The multicover Authors
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

// Acceptance harness. Prints one PASS/FAIL line per criterion and exits
// with the number of failed criteria. All tolerances are pinned here:
// bound comparisons allow 1e-9 on the bound side, float LP agreement 1e-6.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "multicover/bounds.hpp"
#include "multicover/exact.hpp"
#include "multicover/generators.hpp"
#include "multicover/geometry.hpp"
#include "multicover/greedy.hpp"
#include "multicover/hypergraph.hpp"
#include "multicover/lp.hpp"
#include "multicover/rational.hpp"

namespace mc = multicover;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kBoundTol = 1e-9;
constexpr double kFloatTol = 1e-6;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// The shared 500-instance corpus: every seventh instance is small enough for
// the exact oracles, the rest range up to n=200, m=500 with edge sizes 1-8.
std::vector<mc::Hypergraph> build_corpus() {
  std::vector<mc::Hypergraph> corpus;
  corpus.reserve(500);
  for (int i = 0; i < 500; ++i) {
    mc::SplitMix64 rng(0xC0FFEE + static_cast<std::uint64_t>(i));
    int n, m, smax;
    if (i % 7 == 0) {
      n = 3 + static_cast<int>(rng.below(28));   // 3..30
      m = 1 + static_cast<int>(rng.below(28));   // 1..28
      smax = 4;
    } else {
      n = 5 + static_cast<int>(rng.below(196));  // 5..200
      m = 1 + static_cast<int>(rng.below(500));  // 1..500
      smax = 8;
    }
    corpus.push_back(mc::gen_random(n, m, 1, smax, rng.next()));
  }
  return corpus;
}

const std::vector<int> kSuiteFolds = {1, 2, 5, 10};
const std::vector<mc::RationalLambda> kSuiteLambdas = {
    mc::RationalLambda(1, 2), mc::RationalLambda(1, 3), mc::RationalLambda(2, 7)};

// Results of the single pass over corpus x folds x lambdas feeding
// criteria 1, 2, 3, and 5.
struct SuiteOutcome {
  long runs = 0;
  long valid = 0;
  long bound_ok = 0;
  long replay_ok = 0;
  long gap_ok = 0;
  long exact_eq = 0;
  long exact_checked = 0;
  double solve_seconds = 0.0;
  double lp_seconds = 0.0;
  double replay_seconds = 0.0;
};

SuiteOutcome run_suite(const std::vector<mc::Hypergraph>& corpus) {
  SuiteOutcome out;
  for (const mc::Hypergraph& hg : corpus) {
    Clock::time_point lp_start = Clock::now();
    double tau_star = mc::fractional_transversal(hg, mc::LpMode::kFloat).objective_f;
    double nu_star = mc::fractional_matching(hg, mc::LpMode::kFloat).objective_f;
    out.lp_seconds += seconds_since(lp_start);
    if (std::abs(tau_star - nu_star) <= kFloatTol) ++out.gap_ok;

    if (hg.vertex_count() + hg.edge_count() <= 60) {
      ++out.exact_checked;
      mpq_class t = mc::fractional_transversal(hg, mc::LpMode::kExact).objective;
      mpq_class v = mc::fractional_matching(hg, mc::LpMode::kExact).objective;
      if (t == v) ++out.exact_eq;
    }

    int delta = mc::max_degree(hg);
    for (int fold : kSuiteFolds) {
      for (const mc::RationalLambda& lambda : kSuiteLambdas) {
        ++out.runs;
        Clock::time_point solve_start = Clock::now();
        mc::GreedyResult g = mc::greedy_solve(hg, fold, lambda);
        out.solve_seconds += seconds_since(solve_start);

        if (mc::is_f_fold_transversal(hg, g.cover, fold)) ++out.valid;

        double bound = mc::theorem1_bound(tau_star, delta, fold, lambda.value());
        if (static_cast<double>(g.trace.picks.size()) <= bound + kBoundTol) ++out.bound_ok;

        Clock::time_point replay_start = Clock::now();
        bool replay_good = false;
        try {
          mc::replay_trace(hg, fold, lambda, g.trace);
          mpz_class scale = mc::payout_scale(lambda, fold);
          mpz_class p_pow;
          mpz_pow_ui(p_pow.get_mpz_t(), mpz_class(lambda.num).get_mpz_t(),
                     static_cast<unsigned long>(fold - 1));
          replay_good = g.trace.group_count == scale * delta - p_pow + 1;
        } catch (const std::exception&) {
          replay_good = false;
        }
        out.replay_seconds += seconds_since(replay_start);
        if (replay_good) ++out.replay_ok;
      }
    }
  }
  return out;
}

bool criterion4(std::string* detail) {
  Clock::time_point start = Clock::now();
  const mc::RationalLambda lambda(1, 2);
  long boundaries = 0, total_ok = 0, nu_ok = 0;
  for (int i = 0; i < 30; ++i) {
    mc::SplitMix64 rng(0xABCD00 + static_cast<std::uint64_t>(i));
    int n = 4 + static_cast<int>(rng.below(37));  // 4..40
    int m = 1 + static_cast<int>(rng.below(60));  // 1..60
    mc::Hypergraph hg = mc::gen_random(n, m, 1, 5, rng.next());
    mpq_class nu = mc::fractional_matching(hg, mc::LpMode::kExact).objective;
    mpq_class nu_cap = nu + mpq_class(1, 1000000);
    for (int fold : {1, 2, 3}) {
      mc::GreedyResult g = mc::greedy_solve(hg, fold, lambda);
      mc::ReplayResult rep = mc::replay_trace(hg, fold, lambda, g.trace);
      mpq_class geo(mpz_class(0), mpz_class(1));
      for (int k = 0; k < fold; ++k) geo += mpq_class(mc::texp(lambda, k, fold));
      geo /= mpq_class(g.trace.scale);
      for (mpz_class j = 0; j < g.trace.group_count; ++j) {
        ++boundaries;
        mpz_class z = g.trace.z_of(j + 1);
        mc::FractionalSolution cert =
            mc::matching_certificate(hg, rep.state_at(j), z, lambda, fold);
        mpq_class expected =
            mpq_class(g.trace.remaining_after(j)) / (mpq_class(z) * geo);
        if (cert.objective == expected) ++total_ok;
        if (cert.objective <= nu_cap) ++nu_ok;
      }
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "%ld boundary certificates: %ld exact totals, %ld within nu*+1e-6 (%.1f s)",
                boundaries, total_ok, nu_ok, seconds_since(start));
  *detail = buf;
  return total_ok == boundaries && nu_ok == boundaries;
}

bool criterion5(const SuiteOutcome& suite, std::string* detail) {
  mpq_class single = mc::fractional_transversal(mc::Hypergraph(3, {{0, 1, 2}}),
                                                mc::LpMode::kExact)
                         .objective;
  mpq_class triangle =
      mc::fractional_transversal(mc::gen_triangle(), mc::LpMode::kExact).objective;
  mpq_class fano =
      mc::fractional_transversal(mc::gen_fano(), mc::LpMode::kExact).objective;
  bool fixed = single == 1 && triangle == mpq_class(3, 2) && fano == mpq_class(7, 3);

  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "exact nu*=tau* on %ld/%ld small instances, float gap <= 1e-6 on %ld/500, "
                "fixed values (1, 3/2, 7/3) %s",
                suite.exact_eq, suite.exact_checked, suite.gap_ok,
                fixed ? "reproduced" : "WRONG");
  *detail = buf;
  return suite.exact_eq == suite.exact_checked && suite.gap_ok == 500 && fixed;
}

bool criterion6(std::string* detail) {
  Clock::time_point start = Clock::now();
  long checks = 0, ok = 0;
  for (int i = 0; i < 50; ++i) {
    mc::SplitMix64 rng(0xBEEF00 + static_cast<std::uint64_t>(i));
    int n = 3 + static_cast<int>(rng.below(8));   // 3..10
    int m = 1 + static_cast<int>(rng.below(15));  // 1..15
    mc::Hypergraph hg = mc::gen_random(n, m, 1, 4, rng.next());
    for (int fold : {1, 2, 3}) {
      ++checks;
      if (mc::sandwich_check(hg, fold, mc::RationalLambda(2, 7)).ok) ++ok;
    }
  }
  mc::SandwichReport fixture =
      mc::sandwich_check(mc::Hypergraph(2, {{0, 1}, {0}, {1}}), 2, mc::RationalLambda(1, 2));
  bool fixture_ok = fixture.ok && fixture.f_tau_star == 4 && fixture.tau_f == 4 &&
                    fixture.greedy_size == 4;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "f*tau* <= tau_f <= greedy on %ld/%ld runs, fixture (4, 4, 4) %s (%.1f s)",
                ok, checks, fixture_ok ? "exact" : "WRONG", seconds_since(start));
  *detail = buf;
  return ok == checks && fixture_ok;
}

bool criterion7(std::string* detail) {
  Clock::time_point start = Clock::now();
  mc::CorollaryScanReport rep = mc::verify_corollary_constant();
  double elapsed = seconds_since(start);
  char buf[320];
  std::snprintf(buf, sizeof(buf),
                "max ratio %.9f at f=%d, lnD=%.2f; below 1: %s, reaches 0.999: %s (%.1f s)",
                rep.max_ratio, rep.argmax_fold, rep.argmax_log_delta,
                rep.all_below_one ? "yes" : "NO", rep.tight ? "yes" : "NO", elapsed);
  *detail = buf;
  return rep.all_below_one && rep.tight && elapsed <= 30.0;
}

bool criterion8(std::string* detail) {
  Clock::time_point start = Clock::now();
  long checks = 0, ok = 0;
  for (int i = 0; i < 20; ++i) {
    mc::SplitMix64 rng(0xFEED00 + static_cast<std::uint64_t>(i));
    int n = 5 + static_cast<int>(rng.below(36));  // 5..40
    int m = 2 + static_cast<int>(rng.below(79));  // 2..80
    mc::Hypergraph hg = mc::gen_random(n, m, 2, 5, rng.next());
    double tau_star = mc::fractional_transversal(hg, mc::LpMode::kFloat).objective_f;
    int delta = mc::max_degree(hg);
    for (double eps : {1.0, 0.5}) {
      ++checks;
      mc::Schedule sched = mc::convergence_schedule(eps, static_cast<double>(delta));
      mc::GreedyResult g = mc::greedy_solve(hg, sched.fold, sched.lambda);
      double per_fold = static_cast<double>(g.trace.picks.size()) / sched.fold;
      if (per_fold <= (1.0 + eps) * tau_star + kFloatTol) ++ok;
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf), "greedy size/f <= (1+eps) tau* on %ld/%ld schedule runs (%.1f s)",
                ok, checks, seconds_since(start));
  *detail = buf;
  return ok == checks;
}

bool criterion9(const std::vector<mc::Hypergraph>& corpus, std::string* detail) {
  Clock::time_point start = Clock::now();
  long checked = 0, ok = 0;
  for (const mc::Hypergraph& hg : corpus) {
    ++checked;
    // Reference unweighted greedy: most uncovered edges, lowest id on ties.
    std::vector<char> covered(hg.edge_count(), 0);
    std::vector<int> reference;
    int remaining = hg.edge_count();
    while (remaining > 0) {
      int best = -1, best_count = 0;
      for (int v = 0; v < hg.vertex_count(); ++v) {
        int count = 0;
        for (int e : hg.incident_edges(v)) count += covered[e] ? 0 : 1;
        if (count > best_count) {
          best = v;
          best_count = count;
        }
      }
      reference.push_back(best);
      for (int e : hg.incident_edges(best)) {
        if (!covered[e]) {
          covered[e] = 1;
          --remaining;
        }
      }
    }
    bool same = true;
    for (const mc::RationalLambda& lambda : kSuiteLambdas) {
      same = same && mc::greedy_solve(hg, 1, lambda).trace.picks == reference;
    }
    if (same) ++ok;
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "f=1 picks match the unweighted greedy for all lambdas on %ld/%ld instances (%.1f s)",
                ok, checked, seconds_since(start));
  *detail = buf;
  return ok == checked;
}

bool criterion10(std::string* detail) {
  Clock::time_point start = Clock::now();
  mc::GeometricInstance inst{mc::ConvexBody::box(0.5, 0.5), 4.0, 0.25, 1};
  inst.grid_h = 0.05;

  std::vector<mc::Point> packing = mc::saturated_packing(
      inst.a, inst.k, inst.delta, inst.resolved_pitch(), inst.grid_h);
  int cap = mc::max_window_count(packing, mc::minkowski_difference(inst.k, inst.delta),
                                 inst.a, inst.grid_h);

  bool covers_ok = true;
  std::ostringstream sizes;
  for (int fold : {1, 3}) {
    inst.fold = fold;
    mc::CoverResult r = mc::f_fold_cover(inst, mc::RationalLambda(2, 7));
    bool one = r.verified && r.density >= fold - kBoundTol &&
               static_cast<double>(r.n_f) <= std::ceil(r.bound) + kBoundTol;
    covers_ok = covers_ok && one;
    sizes << " f=" << fold << ": N_f=" << r.n_f << " density=" << r.density
          << " bound=" << std::ceil(r.bound) << (one ? "" : " VIOLATED");
  }
  double elapsed = seconds_since(start);
  char buf[320];
  std::snprintf(buf, sizeof(buf), "|Lambda|=%zu, window cap %d <= 64;%s (%.1f s)",
                packing.size(), cap, sizes.str().c_str(), elapsed);
  *detail = buf;
  return covers_ok && cap <= 64 && elapsed <= 120.0;
}

bool criterion11(std::string* detail) {
  namespace fs = std::filesystem;
  fs::path csv = fs::temp_directory_path() / "multicover_acceptance_bench.csv";
  std::string cmd = std::string(MULTICOVER_BIN) + " bench --suite default --out " +
                    csv.string() + " > /dev/null 2>&1";
  Clock::time_point start = Clock::now();
  int status = std::system(cmd.c_str());
  double elapsed = seconds_since(start);
  if (WEXITSTATUS(status) != 0) {
    *detail = "bench exited nonzero";
    return false;
  }

  // Fit check: the per-solve constant time / (max{ln D, f} * D * n * m) must
  // not grow past twice the constant observed on the smallest instance.
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  double c_first = -1.0, c_worst_ratio = 0.0;
  long rows = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (fields.size() != 10) continue;
    double n = std::stod(fields[1]), m = std::stod(fields[2]);
    double delta = std::stod(fields[3]), f = std::stod(fields[4]);
    double time_ms = std::stod(fields[9]);
    double model = std::max(std::log(delta), f) * delta * n * m;
    double c = std::max(time_ms, 1e-3) / model;
    if (c_first < 0) c_first = c;
    c_worst_ratio = std::max(c_worst_ratio, c / c_first);
    ++rows;
  }
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "default suite (%ld rows) in %.1f s; constant drift vs smallest instance %.2fx "
                "(informational cap 2x)",
                rows, elapsed, c_worst_ratio);
  *detail = buf;
  return elapsed < 60.0 && rows == 12 && c_worst_ratio <= 2.0;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&failures](int index, bool pass, const std::string& detail) {
    std::printf("[%2d] %s %s\n", index, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++failures;
    std::fflush(stdout);
  };

  std::vector<mc::Hypergraph> corpus = build_corpus();

  SuiteOutcome suite = run_suite(corpus);
  {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "validity: %ld/%ld greedy runs are f-fold transversals (solve %.1f s)",
                  suite.valid, suite.runs, suite.solve_seconds);
    report(1, suite.valid == suite.runs && suite.solve_seconds <= 300.0, buf);
    std::snprintf(buf, sizeof(buf),
                  "theorem 1 bound: greedy size <= bound + 1e-9 on %ld/%ld runs (LP %.1f s)",
                  suite.bound_ok, suite.runs, suite.lp_seconds);
    report(2, suite.bound_ok == suite.runs, buf);
    std::snprintf(buf, sizeof(buf),
                  "telescoping and group count: %ld/%ld replays exact (replay %.1f s)",
                  suite.replay_ok, suite.runs, suite.replay_seconds);
    report(3, suite.replay_ok == suite.runs, buf);
  }

  std::string detail;
  bool ok4 = criterion4(&detail);
  report(4, ok4, "matching certificate: " + detail);

  bool ok5 = criterion5(suite, &detail);
  report(5, ok5, "LP duality: " + detail);

  bool ok6 = criterion6(&detail);
  report(6, ok6, "sandwich: " + detail);

  bool ok7 = criterion7(&detail);
  report(7, ok7, "corollary constant scan: " + detail);

  bool ok8 = criterion8(&detail);
  report(8, ok8, "convergence schedule: " + detail);

  bool ok9 = criterion9(corpus, &detail);
  report(9, ok9, "f=1 degeneration: " + detail);

  bool ok10 = criterion10(&detail);
  report(10, ok10, "geometry pipeline: " + detail);

  bool ok11 = criterion11(&detail);
  report(11, ok11, "performance: " + detail);

  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
