// SPDX-License-Identifier: Apache-2.0
// Command line front end. Exit codes: 10 satisfiable (incl. unique),
// 20 unsatisfiable, 0 unknown or informational output, 1 usage and input errors.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ixsat/bench.hpp"
#include "ixsat/combinatorics.hpp"
#include "ixsat/dimacs.hpp"
#include "ixsat/engine.hpp"
#include "ixsat/generator.hpp"
#include "ixsat/oracle.hpp"
#include "ixsat/solutions.hpp"

namespace {

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;

ixsat::Formula load_or_die(const std::string& path) {
  ixsat::ParseResult res = ixsat::parse_dimacs_file(path);
  for (const auto& w : res.warnings)
    std::cerr << "c warning: line " << w.line << ": " << w.text << "\n";
  for (const auto& e : res.errors)
    std::cerr << "error: line " << e.line << ": " << e.text << "\n";
  if (!res.ok()) {
    std::cerr << "error: cannot use " << path << "\n";
    std::exit(1);
  }
  return std::move(*res.formula);
}

void print_stats(const ixsat::RunStats& st) {
  std::cout << "stats.clauses_processed " << st.clauses_processed << "\n"
            << "stats.pattern_store_size " << st.pattern_store_size << "\n"
            << "stats.overlap_count " << st.overlap_count << "\n"
            << "stats.merges_attempted " << st.merges_attempted << "\n"
            << "stats.merge_literal_scans " << st.merge_literal_scans << "\n"
            << "stats.empty_merges " << st.empty_merges << "\n"
            << "stats.empty_merge_scans " << st.empty_merge_scans << "\n"
            << "stats.early_terminated " << (st.early_terminated ? 1 : 0)
            << "\n";
}

int verdict_exit(ixsat::Verdict v) {
  return v == ixsat::Verdict::UNSAT ? kExitUnsat : kExitSat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"model counter driven by unsatisfiability pattern overlap"};
  app.require_subcommand(1);

  std::string file;
  int threads = 1;
  bool show_stats = false;
  std::optional<uint64_t> max_patterns;

  auto* count = app.add_subcommand("count", "count satisfying assignments");
  count->add_option("file", file, "DIMACS CNF input")->required();
  count->add_flag("--stats", show_stats, "print run statistics");
  count->add_option("--max-patterns", max_patterns,
                    "abort when the pattern store would exceed this size");
  count->add_option("--threads", threads, "worker threads, 0 means all");

  uint64_t solve_seed = 1;
  std::string priority_str;
  auto* solve = app.add_subcommand("solve", "extract one satisfying assignment");
  solve->add_option("file", file)->required();
  auto* seed_opt = solve->add_option("--seed", solve_seed,
                                     "seed for the random literal priority");
  auto* prio_opt = solve->add_option(
      "--priority", priority_str,
      "explicit priority list, one literal per variable, e.g. \"1 -2 3\"");
  prio_opt->excludes(seed_opt);
  solve->add_option("--threads", threads, "worker threads, 0 means all");

  auto* lits = app.add_subcommand("lits", "count models per fixed literal");
  lits->add_option("file", file)->required();
  lits->add_option("--threads", threads, "worker threads, 0 means all");

  int gen_n = 0, gen_m = 0;
  std::optional<int> gen_k;
  std::string gen_density;
  uint64_t gen_seed = 1;
  bool gen_best = false, gen_worst = false;
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "generate a random k-SAT instance");
  gen->add_option("--n", gen_n, "variable count")->required();
  gen->add_option("--m", gen_m, "clause count");
  gen->add_option("--k", gen_k, "literals per clause");
  gen->add_option("--density-type", gen_density,
                  "one of 0.9N 7RootN 6RootN 5RootN 4RootN 3RootN");
  gen->add_option("--seed", gen_seed, "generator seed");
  gen->add_flag("--best-case", gen_best,
                "structured instance with pairwise disjoint overlap patterns");
  gen->add_flag("--worst-case", gen_worst,
                "structured instance whose pattern store reaches 2^m - 1");
  gen->add_option("-o,--output", out_path, "write DIMACS here, default stdout");

  int oracle_max_n = 24;
  bool oracle_models = false;
  auto* oracle = app.add_subcommand("oracle", "brute force check, small n only");
  oracle->add_option("file", file)->required();
  oracle->add_option("--max-n", oracle_max_n, "refuse instances above this n");
  oracle->add_flag("--models", oracle_models, "list every model");

  ixsat::OverlapQuery oq;
  std::optional<int64_t> oq_kd, oq_m;
  int tuple_size = 2;
  auto* pov = app.add_subcommand("poverlap",
                                 "overlap probability for random clause pairs");
  pov->add_option("--n", oq.n, "variable count")->required();
  pov->add_option("--kc", oq.k_c, "clause length")->required();
  pov->add_option("--kd", oq_kd, "second clause length, default kc");
  pov->add_option("--m", oq_m, "clause count for the expectation");
  pov->add_option("--tuple-size", tuple_size, "2 for pairs, 3 for triples");

  ixsat::BenchGrid grid;
  std::vector<std::string> type_names;
  auto* bench = app.add_subcommand("bench", "run the benchmark grid");
  bench->add_option("--ns", grid.ns, "variable counts")->delimiter(',');
  bench->add_option("--ms", grid.ms, "clause counts")->delimiter(',');
  bench->add_option("--types", type_names, "density types")->delimiter(',');
  bench->add_option("--repeats", grid.repeats, "instances per cell");
  bench->add_option("--seed", grid.seed, "master seed");
  bench->add_option("--threads", threads, "worker threads, 0 means all");
  bench->add_option("-o,--output", out_path, "CSV output, default stdout");

  std::string csv_path;
  auto* report = app.add_subcommand("report", "scaling report from a bench CSV");
  report->add_option("csv", csv_path, "CSV written by the bench subcommand")
      ->required();

  CLI11_PARSE(app, argc, argv);

  ixsat::EngineConfig cfg;
  cfg.threads = threads;
  cfg.max_pattern_store = max_patterns;

  try {
    if (count->parsed()) {
      ixsat::Formula f = load_or_die(file);
      try {
        ixsat::ModelCount mc = ixsat::count_models(f, cfg);
        std::cout << "solutions " << mc.solutions.get_str() << "\n"
                  << "verdict " << to_string(mc.verdict) << "\n";
        if (show_stats) print_stats(mc.stats);
        return verdict_exit(mc.verdict);
      } catch (const ixsat::resource_limit_error& e) {
        std::cout << "verdict UNKNOWN\n";
        std::cerr << "c " << e.what() << "\n";
        return 0;
      }
    }

    if (solve->parsed()) {
      ixsat::Formula f = load_or_die(file);
      std::vector<ixsat::Lit> prio;
      if (prio_opt->count()) {
        std::istringstream ss(priority_str);
        ixsat::Lit l;
        while (ss >> l) prio.push_back(l);
      } else {
        prio = ixsat::random_priority(f.n, solve_seed);
      }
      try {
        std::vector<ixsat::Lit> sol = ixsat::find_solution(f, prio, cfg);
        std::cout << "s SATISFIABLE\nv";
        for (ixsat::Lit l : sol) std::cout << ' ' << l;
        std::cout << " 0\n";
        return kExitSat;
      } catch (const ixsat::unsat_input_error&) {
        std::cout << "s UNSATISFIABLE\n";
        return kExitUnsat;
      }
    }

    if (lits->parsed()) {
      ixsat::Formula f = load_or_die(file);
      ixsat::LiteralCountReport rep = ixsat::per_literal_counts(f, cfg);
      for (int v = 1; v <= rep.n; ++v) {
        std::cout << -v << ' ' << rep.count(-v).get_str() << "\n"
                  << v << ' ' << rep.count(v).get_str() << "\n";
      }
      std::cout << "total " << rep.total.get_str() << "\n";
      return 0;
    }

    if (gen->parsed()) {
      if (gen_best && gen_worst) {
        std::cerr << "error: pick one of --best-case, --worst-case\n";
        return 1;
      }
      ixsat::Formula f;
      if (gen_worst) {
        if (!gen_k) {
          std::cerr << "error: --worst-case needs --k\n";
          return 1;
        }
        f = ixsat::worst_case_instance(gen_n, *gen_k);
      } else if (gen_best) {
        if (!gen_k) {
          std::cerr << "error: --best-case needs --k\n";
          return 1;
        }
        f = ixsat::best_case_instance(gen_n, *gen_k, gen_m, gen_seed);
      } else {
        ixsat::GenSpec spec;
        spec.n = gen_n;
        spec.m = gen_m;
        spec.k = gen_k;
        spec.seed = gen_seed;
        if (!gen_density.empty()) {
          spec.density = ixsat::parse_density_type(gen_density);
          if (!spec.density) {
            std::cerr << "error: unknown density type " << gen_density << "\n";
            return 1;
          }
        }
        f = ixsat::random_instance(spec);
      }
      if (out_path.empty())
        std::cout << ixsat::write_dimacs(f);
      else
        ixsat::write_dimacs_file(f, out_path);
      return 0;
    }

    if (oracle->parsed()) {
      ixsat::Formula f = load_or_die(file);
      ixsat::OracleLimit lim;
      lim.max_n = oracle_max_n;
      mpz_class cnt = ixsat::brute_force_count(f, lim);
      std::cout << "solutions " << cnt.get_str() << "\n";
      if (oracle_models) {
        for (const ixsat::Assignment& a : ixsat::brute_force_models(f, lim)) {
          std::cout << "v";
          for (int v = 1; v <= f.n; ++v)
            std::cout << ' ' << (a[v - 1] ? v : -v);
          std::cout << " 0\n";
        }
      }
      return cnt == 0 ? kExitUnsat : kExitSat;
    }

    if (pov->parsed()) {
      oq.k_d = oq_kd.value_or(oq.k_c);
      oq.m = oq_m;
      mpq_class p = ixsat::p_overlap(oq);
      std::cout << "p_overlap " << p.get_str() << " = " << p.get_d() << "\n";
      if (oq_m) {
        mpq_class e = ixsat::expected_overlaps(oq, tuple_size);
        std::cout << "expected_overlaps " << e.get_str() << " = " << e.get_d()
                  << "\n";
      }
      return 0;
    }

    if (bench->parsed()) {
      if (!type_names.empty()) {
        grid.types.clear();
        for (const std::string& name : type_names) {
          auto t = ixsat::parse_density_type(name);
          if (!t) {
            std::cerr << "error: unknown density type " << name << "\n";
            return 1;
          }
          grid.types.push_back(*t);
        }
      }
      std::vector<ixsat::BenchRow> rows = ixsat::run_bench(grid, cfg, &std::cerr);
      if (out_path.empty()) {
        ixsat::write_csv(std::cout, rows);
      } else {
        std::ofstream out(out_path);
        if (!out) {
          std::cerr << "error: cannot write " << out_path << "\n";
          return 1;
        }
        ixsat::write_csv(out, rows);
      }
      return 0;
    }

    if (report->parsed()) {
      std::ifstream in(csv_path);
      if (!in) {
        std::cerr << "error: cannot read " << csv_path << "\n";
        return 1;
      }
      std::vector<ixsat::BenchRow> rows = ixsat::read_csv(in);
      std::cout << ixsat::scaling_report(rows).text();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
