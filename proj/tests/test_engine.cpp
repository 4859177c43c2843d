// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <algorithm>
#include <random>

#include "common.hpp"
#include "ixsat/engine.hpp"
#include "ixsat/generator.hpp"
#include "ixsat/reference.hpp"

using namespace ixsat;

TEST_CASE("intersect merges sorted literal lists") {
  uint64_t scans = 0;
  auto r = intersect({-1, 2}, {2, 3}, &scans);
  REQUIRE(r.has_value());
  CHECK(*r == Clause{-1, 2, 3});
  CHECK(scans == 2);

  scans = 0;
  CHECK(intersect({1}, {3}, &scans) == Clause{1, 3});
  CHECK(scans == 1);  // the tail copy after one side runs out is free

  CHECK(intersect({-1, 2}, {-1, 2}) == Clause{-1, 2});
  CHECK(intersect({}, {5, 7}) == Clause{5, 7});
}

TEST_CASE("intersect detects complementary literals") {
  uint64_t scans = 0;
  CHECK(!intersect({1}, {-1}, &scans));
  CHECK(scans == 1);

  scans = 0;
  CHECK(!intersect({-2, -3}, {-1, 2}, &scans));
  CHECK(scans == 2);
  CHECK(!intersect({1, -2, 3}, {-2, -3}));
}

TEST_CASE("cardinality") {
  CHECK(cardinality({-1, 2}, 3) == 2);
  CHECK(cardinality({1, 2, 3}, 3) == 1);
  CHECK(cardinality({}, 3) == 8);
  CHECK(cardinality({4}, 40) == pow2(39));
  CHECK_THROWS_AS(cardinality({1, 2}, 1), std::invalid_argument);
}

TEST_CASE("k1 count and statistics") {
  ModelCount mc = count_models(k1());
  CHECK(mc.solutions == 2);
  CHECK(mc.verdict == Verdict::SAT);
  CHECK(!mc.stats.early_terminated);
  CHECK(mc.stats.clauses_processed == 4);
  CHECK(mc.stats.pattern_store_size == 5);
  CHECK(mc.stats.overlap_count == 1);
  CHECK(mc.stats.merges_attempted == 8);
  CHECK(mc.stats.empty_merges == 7);
}

TEST_CASE("k2 terminates early on the final clause") {
  ModelCount mc = count_models(k2());
  CHECK(mc.solutions == 0);
  CHECK(mc.verdict == Verdict::UNSAT);
  CHECK(mc.stats.early_terminated);
  CHECK(mc.stats.clauses_processed == 6);
  CHECK(mc.stats.pattern_store_size == 9);
  CHECK(mc.stats.overlap_count == 3);
}

TEST_CASE("edge formulas") {
  CHECK(count_models(make_formula(5, {})).solutions == 32);
  ModelCount none = count_models(make_formula(0, {}));
  CHECK(none.solutions == 1);
  CHECK(none.verdict == Verdict::UNIQUE);

  ModelCount one = count_models(make_formula(4, {{1, 2, 3, 4}}));
  CHECK(one.solutions == 15);

  ModelCount uniq = count_models(make_formula(2, {{1}, {2}}));
  CHECK(uniq.solutions == 1);
  CHECK(uniq.verdict == Verdict::UNIQUE);
}

TEST_CASE("repeated clauses cancel instead of double counting") {
  ModelCount mc = count_models(make_formula(1, {{1}, {1}}));
  CHECK(mc.solutions == 1);
  CHECK(mc.verdict == Verdict::UNIQUE);
  CHECK(!mc.stats.early_terminated);
  CHECK(mc.stats.pattern_store_size == 3);

  Formula f = k1();
  f.clauses.push_back(f.clauses[1]);
  CHECK(count_models(f).solutions == 2);
}

TEST_CASE("an empty clause empties the space at once") {
  std::vector<Clause> cls = {Clause{}};
  ModelCount mc = count_models_over(cls, 3);
  CHECK(mc.solutions == 0);
  CHECK(mc.verdict == Verdict::UNSAT);
  CHECK(mc.stats.early_terminated);
  CHECK(mc.stats.clauses_processed == 1);
}

TEST_CASE("count_models_over keeps foreign variable numbering") {
  std::vector<Clause> cls = {Clause{5}, Clause{7}};
  ModelCount mc = count_models_over(cls, 2);
  CHECK(mc.solutions == 1);
  CHECK(mc.verdict == Verdict::UNIQUE);
}

TEST_CASE("count_models_over rejects width violations") {
  std::vector<Clause> wide = {Clause{5, 7}};
  CHECK_THROWS_AS(count_models_over(wide, 1), std::invalid_argument);
  // three distinct unit variables cannot fit in two free variables
  std::vector<Clause> units = {Clause{1}, Clause{2}, Clause{3}};
  CHECK_THROWS_AS(count_models_over(units, 2), std::invalid_argument);
  CHECK_THROWS_AS(count_models_over({}, -1), std::invalid_argument);
}

TEST_CASE("clause order does not change the count") {
  Formula f = k1();
  std::mt19937 rng(99);
  for (int rep = 0; rep < 10; ++rep) {
    std::shuffle(f.clauses.begin(), f.clauses.end(), rng);
    ModelCount mc = count_models(f);
    CHECK(mc.solutions == 2);
    CHECK(mc.stats.pattern_store_size == 5);
  }
}

TEST_CASE("adding clauses never adds models") {
  GenSpec spec;
  spec.n = 9;
  spec.m = 12;
  spec.k = 3;
  spec.seed = 5;
  Formula f = random_instance(spec);
  mpz_class prev = pow2(9);
  for (size_t i = 1; i <= f.clauses.size(); ++i) {
    mpz_class cur =
        count_models_over({f.clauses.data(), i}, f.n).solutions;
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("early exit happens exactly on unsatisfiable inputs") {
  SplitMix64 seeds(404);
  for (int i = 0; i < 40; ++i) {
    GenSpec spec;
    spec.n = 4 + (int)seeds.below(6);
    spec.m = 1 + (int)seeds.below(25);
    spec.k = 1 + (int)seeds.below(3);
    spec.seed = seeds.next();
    Formula f = random_instance(spec);
    ModelCount mc = count_models(f);
    CHECK(mc.stats.early_terminated == (mc.solutions == 0));
    if (mc.stats.early_terminated)
      CHECK(mc.stats.clauses_processed <= f.clauses.size());
    else
      CHECK(mc.stats.clauses_processed == f.clauses.size());
  }
}

TEST_CASE("pattern store limit") {
  Formula w = worst_case_instance(6, 3);  // store peaks at 15
  EngineConfig tight;
  tight.max_pattern_store = 14;
  CHECK_THROWS_AS(count_models(w, tight), resource_limit_error);
  try {
    count_models(w, tight);
  } catch (const resource_limit_error& e) {
    CHECK(e.clause_index == 4);
  }
  EngineConfig enough;
  enough.max_pattern_store = 15;
  CHECK(count_models(w, enough).stats.pattern_store_size == 15);

  EngineConfig k1cap;
  k1cap.max_pattern_store = 4;
  CHECK_THROWS_AS(count_models(k1(), k1cap), resource_limit_error);
  k1cap.max_pattern_store = 5;
  CHECK(count_models(k1(), k1cap).solutions == 2);
}

TEST_CASE("collect_stats off still reports termination facts") {
  EngineConfig cfg;
  cfg.collect_stats = false;
  ModelCount mc = count_models(k2(), cfg);
  CHECK(mc.solutions == 0);
  CHECK(mc.stats.early_terminated);
  CHECK(mc.stats.clauses_processed == 6);
  CHECK(mc.stats.merges_attempted == 0);
  CHECK(mc.stats.pattern_store_size == 0);
}

namespace {

bool same_result(const ModelCount& a, const ModelCount& b) {
  return a.solutions == b.solutions && a.verdict == b.verdict &&
         a.stats.merges_attempted == b.stats.merges_attempted &&
         a.stats.merge_literal_scans == b.stats.merge_literal_scans &&
         a.stats.empty_merges == b.stats.empty_merges &&
         a.stats.empty_merge_scans == b.stats.empty_merge_scans &&
         a.stats.overlap_count == b.stats.overlap_count &&
         a.stats.pattern_store_size == b.stats.pattern_store_size &&
         a.stats.clauses_processed == b.stats.clauses_processed &&
         a.stats.early_terminated == b.stats.early_terminated;
}

}  // namespace

TEST_CASE("kernel matches the reference implementation") {
  SplitMix64 seeds(2718);
  for (int i = 0; i < 60; ++i) {
    GenSpec spec;
    spec.n = 1 + (int)seeds.below(12);
    spec.m = 1 + (int)seeds.below(20);
    spec.k = 1 + (int)seeds.below((uint64_t)spec.n);
    spec.seed = seeds.next();
    Formula f = random_instance(spec);
    if (i % 3 == 0) f.clauses.push_back(f.clauses[0]);  // duplicates too
    ModelCount a = count_models(f);
    ModelCount b = reference_count(f);
    CHECK(same_result(a, b));
  }
  CHECK(same_result(count_models(k1()), reference_count(k1())));
  CHECK(same_result(count_models(k2()), reference_count(k2())));
}

TEST_CASE("thread count does not change the result") {
  // store grows to 8191 entries so the last sweeps take the parallel path
  Formula w = worst_case_instance(14, 2);
  EngineConfig serial;
  serial.threads = 1;
  EngineConfig two;
  two.threads = 2;
  EngineConfig all;
  all.threads = 0;

  ModelCount a = count_models(w, serial);
  ModelCount b = count_models(w, two);
  ModelCount c = count_models(w, all);
  ModelCount r = reference_count(w, serial);

  CHECK(a.solutions == mpz_class(8193));
  CHECK(a.stats.pattern_store_size == 8191);
  CHECK(same_result(a, b));
  CHECK(same_result(a, c));
  CHECK(same_result(a, r));

  GenSpec spec;
  spec.n = 14;
  spec.m = 40;
  spec.k = 3;
  spec.seed = 77;
  Formula f = random_instance(spec);
  CHECK(same_result(count_models(f, serial), count_models(f, two)));
}
