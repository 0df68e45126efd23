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

// multicover CLI: generators, the weighted greedy solver, LP and exact
// oracles, bound verification, the geometric covering pipeline, and a
// benchmark suite.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "multicover/bounds.hpp"
#include "multicover/exact.hpp"
#include "multicover/generators.hpp"
#include "multicover/geometry.hpp"
#include "multicover/greedy.hpp"
#include "multicover/hypergraph.hpp"
#include "multicover/io.hpp"
#include "multicover/lp.hpp"
#include "multicover/rational.hpp"

namespace {

namespace mc = multicover;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    mc::write_file(out_path, text + "\n");
  }
}

mc::Hypergraph load_hypergraph(const std::string& path) {
  return mc::parse_hypergraph(mc::read_file(path));
}

mc::LpMode parse_mode(const std::string& mode) {
  if (mode == "exact") return mc::LpMode::kExact;
  if (mode == "float") return mc::LpMode::kFloat;
  throw std::invalid_argument("mode must be exact or float");
}

int run_gen(const std::string& kind, int n, int m, int smin, int smax,
            std::uint64_t seed, double a, double delta, int fold, double grid_h,
            const std::string& out) {
  std::string text;
  if (kind == "random") {
    text = mc::serialize_hypergraph(mc::gen_random(n, m, smin, smax, seed));
  } else if (kind == "fano") {
    text = mc::serialize_hypergraph(mc::gen_fano());
  } else if (kind == "triangle") {
    text = mc::serialize_hypergraph(mc::gen_triangle());
  } else if (kind == "graph") {
    text = mc::serialize_hypergraph(mc::gen_complete_graph(n));
  } else if (kind == "geometric") {
    mc::GeometricInstance inst{mc::ConvexBody::box(0.5, 0.5), a, delta, fold};
    inst.grid_h = grid_h;
    text = mc::serialize_geometric_instance(inst);
  } else {
    throw std::invalid_argument("unknown kind " + kind);
  }
  emit(text, out);
  return 0;
}

int run_solve(const std::string& input, int fold, const std::string& lambda,
              const std::string& out) {
  mc::GreedyResult result =
      mc::greedy_solve(load_hypergraph(input), fold, mc::RationalLambda::parse(lambda));
  emit(mc::serialize_solution(result), out);
  return 0;
}

int run_lp(const std::string& input, const std::string& mode, const std::string& side,
           const std::string& out) {
  mc::Hypergraph hg = load_hypergraph(input);
  mc::LpMode lp_mode = parse_mode(mode);
  if (side == "transversal") {
    emit(mc::serialize_lp(mc::fractional_transversal(hg, lp_mode)), out);
  } else if (side == "matching") {
    emit(mc::serialize_lp(mc::fractional_matching(hg, lp_mode)), out);
  } else if (side == "gap") {
    mpq_class gap = mc::duality_gap(hg, lp_mode);
    emit("{\"gap\":\"" + gap.get_str() + "\"}", out);
  } else {
    throw std::invalid_argument("side must be transversal, matching, or gap");
  }
  return 0;
}

int run_exact(const std::string& input, int fold, std::int64_t budget,
              const std::string& out) {
  emit(mc::serialize_exact(mc::exact_tau_f(load_hypergraph(input), fold, budget)), out);
  return 0;
}

int run_verify(const std::string& input, int fold, const std::string& lambda,
               const std::string& mode, const std::string& out) {
  mc::BoundReport report = mc::verify_instance(
      load_hypergraph(input), fold, mc::RationalLambda::parse(lambda), parse_mode(mode));
  emit(mc::serialize_bound_report(report), out);
  return report.satisfied ? 0 : 1;
}

int run_cover(const std::string& input, const std::string& lambda,
              const std::string& out) {
  mc::GeometricInstance inst = mc::parse_geometric_instance(mc::read_file(input));
  mc::CoverResult result = mc::f_fold_cover(inst, mc::RationalLambda::parse(lambda));
  emit(mc::serialize_cover_result(result), out);
  return result.verified ? 0 : 1;
}

struct BenchCase {
  int n;
  int m;
  int smin;
  int smax;
  std::uint64_t seed;
};

// Float LP is affordable up to roughly this many rows + columns; larger
// instances report the greedy certificate |A|/f, a valid upper bound on
// tau* that keeps the printed bound above the greedy size.
constexpr int kBenchLpLimit = 1200;

int run_bench(const std::string& suite, const std::string& out) {
  if (suite != "default") throw std::invalid_argument("unknown suite " + suite);
  const std::vector<BenchCase> cases = {
      {50, 100, 1, 6, 11},  {100, 250, 1, 6, 12},  {200, 500, 1, 8, 13},
      {400, 1000, 2, 8, 14}, {700, 2500, 2, 8, 15}, {1000, 5000, 2, 8, 16},
  };
  const mc::RationalLambda lambda(2, 7);
  std::ostringstream csv;
  csv << "instance,n,m,delta,f,lambda,greedy_size,tau_star,bound,time_ms\n";
  for (const BenchCase& c : cases) {
    mc::Hypergraph hg = mc::gen_random(c.n, c.m, c.smin, c.smax, c.seed);
    int delta = mc::max_degree(hg);
    for (int fold : {1, 8}) {
      auto start = std::chrono::steady_clock::now();
      mc::GreedyResult result = mc::greedy_solve(hg, fold, lambda);
      auto stop = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(stop - start).count();
      auto size = static_cast<std::int64_t>(result.trace.picks.size());
      double tau_star;
      if (c.n + c.m <= kBenchLpLimit) {
        tau_star = mc::fractional_transversal(hg, mc::LpMode::kFloat).objective_value();
      } else {
        tau_star = static_cast<double>(size) / fold;
      }
      double bound = mc::theorem1_bound(tau_star, delta, fold, lambda.value());
      char row[256];
      std::snprintf(row, sizeof(row), "random_n%d_m%d_seed%llu,%d,%d,%d,%d,%s,%lld,%.6f,%.6f,%.3f\n",
                    c.n, c.m, static_cast<unsigned long long>(c.seed), c.n,
                    static_cast<int>(hg.edge_count()), delta, fold, lambda.str().c_str(),
                    static_cast<long long>(size), tau_star, bound, ms);
      csv << row;
    }
  }
  std::string text = csv.str();
  if (out.empty()) {
    std::cout << text;
  } else {
    mc::write_file(out, text);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"f-fold transversal solver and verification toolkit"};
  app.require_subcommand(1);

  std::string kind = "random";
  int gen_n = 20, gen_m = 30, gen_smin = 2, gen_smax = 5;
  std::uint64_t seed = 1;
  double geo_a = 4.0, geo_delta = 0.25, geo_grid_h = 0.05;
  int geo_fold = 1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance file");
  gen->add_option("--kind", kind, "random|fano|triangle|graph|geometric")
      ->default_val("random");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--m", gen_m, "edge count");
  gen->add_option("--smin", gen_smin, "minimum edge size");
  gen->add_option("--smax", gen_smax, "maximum edge size");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--a", geo_a, "half-width of C = [-a,a]^2");
  gen->add_option("--delta", geo_delta, "shrink parameter");
  gen->add_option("--f", geo_fold, "coverage multiplicity");
  gen->add_option("--grid-h", geo_grid_h, "verification grid pitch");
  gen->add_option("--out", gen_out, "output path (stdout if omitted)");

  std::string solve_in, solve_lambda = "2/7", solve_out;
  int solve_fold = 1;
  CLI::App* solve = app.add_subcommand("solve", "run the weighted greedy");
  solve->add_option("input", solve_in, "hypergraph JSON")->required();
  solve->add_option("--f", solve_fold, "coverage multiplicity");
  solve->add_option("--lambda", solve_lambda, "decay factor, p/q or decimal");
  solve->add_option("--out", solve_out, "output path (stdout if omitted)");

  std::string lp_in, lp_mode = "exact", lp_side = "transversal", lp_out;
  CLI::App* lp = app.add_subcommand("lp", "fractional transversal/matching");
  lp->add_option("input", lp_in, "hypergraph JSON")->required();
  lp->add_option("--mode", lp_mode, "exact|float");
  lp->add_option("--side", lp_side, "transversal|matching|gap");
  lp->add_option("--out", lp_out, "output path (stdout if omitted)");

  std::string exact_in, exact_out;
  int exact_fold = 1;
  std::int64_t exact_budget = 20000000;
  CLI::App* exact = app.add_subcommand("exact", "branch-and-bound tau_f");
  exact->add_option("input", exact_in, "hypergraph JSON")->required();
  exact->add_option("--f", exact_fold, "coverage multiplicity");
  exact->add_option("--budget", exact_budget, "node budget");
  exact->add_option("--out", exact_out, "output path (stdout if omitted)");

  std::string verify_in, verify_lambda = "2/7", verify_mode = "exact", verify_out;
  int verify_fold = 1;
  CLI::App* verify = app.add_subcommand("verify", "check greedy size against the bound");
  verify->add_option("input", verify_in, "hypergraph JSON")->required();
  verify->add_option("--f", verify_fold, "coverage multiplicity");
  verify->add_option("--lambda", verify_lambda, "decay factor");
  verify->add_option("--mode", verify_mode, "exact|float");
  verify->add_option("--out", verify_out, "output path (stdout if omitted)");

  std::string cover_in, cover_lambda = "2/7", cover_out;
  CLI::App* cover = app.add_subcommand("cover", "geometric f-fold covering pipeline");
  cover->add_option("input", cover_in, "geometric instance JSON")->required();
  cover->add_option("--lambda", cover_lambda, "decay factor");
  cover->add_option("--out", cover_out, "output path (stdout if omitted)");

  std::string bench_suite = "default", bench_out;
  CLI::App* bench = app.add_subcommand("bench", "timing suite, CSV output");
  bench->add_option("--suite", bench_suite, "suite name");
  bench->add_option("--out", bench_out, "CSV path (stdout if omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(gen)) {
      return run_gen(kind, gen_n, gen_m, gen_smin, gen_smax, seed, geo_a, geo_delta,
                     geo_fold, geo_grid_h, gen_out);
    }
    if (app.got_subcommand(solve)) {
      return run_solve(solve_in, solve_fold, solve_lambda, solve_out);
    }
    if (app.got_subcommand(lp)) return run_lp(lp_in, lp_mode, lp_side, lp_out);
    if (app.got_subcommand(exact)) {
      return run_exact(exact_in, exact_fold, exact_budget, exact_out);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(verify_in, verify_fold, verify_lambda, verify_mode, verify_out);
    }
    if (app.got_subcommand(cover)) return run_cover(cover_in, cover_lambda, cover_out);
    if (app.got_subcommand(bench)) return run_bench(bench_suite, bench_out);
  } catch (const mc::NodeBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << " (incumbent " << e.incumbent
              << ", lower bound " << e.lower_bound << ")\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
