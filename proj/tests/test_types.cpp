// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "common.hpp"
#include "ixsat/types.hpp"

using namespace ixsat;

TEST_CASE("make_clause sorts by variable and keeps signs") {
  Clause c = make_clause({3, -1, 2});
  CHECK(c == Clause{-1, 2, 3});
  CHECK(make_clause({-7}) == Clause{-7});
}

TEST_CASE("make_clause drops duplicate literals") {
  CHECK(make_clause({2, 2, 3}) == Clause{2, 3});
  CHECK(make_clause({-4, -4, -4}) == Clause{-4});
}

TEST_CASE("make_clause rejects degenerate input") {
  // the empty clause itself is legal, it denotes the always-false clause
  CHECK(make_clause({}).empty());
  CHECK_THROWS_AS(make_clause({1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(make_clause({2, -2, 5}), std::invalid_argument);
  CHECK_THROWS_AS(make_clause({0}), std::invalid_argument);
}

TEST_CASE("var_of strips the sign") {
  CHECK(var_of(5) == 5);
  CHECK(var_of(-5) == 5);
}

TEST_CASE("make_formula validates the variable range") {
  Formula f = make_formula(3, {{1, -3}});
  CHECK(f.n == 3);
  CHECK(f.clauses.size() == 1);
  CHECK_THROWS_AS(make_formula(2, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_formula(-1, {}), std::invalid_argument);
  CHECK(make_formula(0, {}).clauses.empty());
}

TEST_CASE("evaluate agrees with the truth table of k1") {
  Formula f = k1();
  int models = 0;
  for (int a = 0; a < 8; ++a) {
    Assignment asg = {(uint8_t)((a >> 2) & 1), (uint8_t)((a >> 1) & 1),
                      (uint8_t)(a & 1)};
    bool sat = evaluate(f, asg);
    bool expect = (a == 0b001) || (a == 0b110);
    CHECK(sat == expect);
    models += sat;
  }
  CHECK(models == 2);
}

TEST_CASE("evaluate on edge formulas") {
  CHECK(evaluate(make_formula(2, {}), {0, 1}));
  CHECK(evaluate(make_formula(0, {}), {}));
  CHECK_THROWS_AS(evaluate(k1(), {1, 0}), std::invalid_argument);
}

TEST_CASE("pow2") {
  CHECK(pow2(0) == 1);
  CHECK(pow2(3) == 8);
  CHECK(pow2(64) == mpz_class("18446744073709551616"));
}

TEST_CASE("verdict names") {
  CHECK(std::string(to_string(Verdict::SAT)) == "SAT");
  CHECK(std::string(to_string(Verdict::UNSAT)) == "UNSAT");
  CHECK(std::string(to_string(Verdict::UNIQUE)) == "UNIQUE");
}

TEST_CASE("resource_limit_error carries the clause index") {
  resource_limit_error e(7, 100);
  CHECK(e.clause_index == 7);
  CHECK(std::string(e.what()).find("100") != std::string::npos);
  CHECK(std::string(e.what()).find("7") != std::string::npos);
}
