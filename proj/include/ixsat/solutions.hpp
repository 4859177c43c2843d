// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ixsat/engine.hpp"
#include "ixsat/types.hpp"

namespace ixsat {

// Residual of asserting a literal: clauses containing it vanish, occurrences
// of its complement are deleted. The formula keeps its variable numbering.
// conflict means some clause became empty, so no model has the literal true.
struct Residual {
  bool conflict = false;
  Formula formula;
};

Residual filter_clauses(const Formula& f, Lit lit);

// Thrown when an operation that requires a satisfiable input receives an
// unsatisfiable formula.
struct unsat_input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SolveTrace {
  uint64_t count_calls = 0;  // full counting runs, at most one per variable
};

// One literal per variable, in trial order: the polarity to try first.
std::vector<Lit> index_priority(int n);               // 1, 2, ..., n
std::vector<Lit> random_priority(int n, uint64_t seed);  // seeded coin per var

// Extracts a satisfying assignment of a satisfiable formula: walk the
// priority literals, keep one when its residual has no empty clause and
// still counts models, otherwise keep the complement; once every clause is
// satisfied the remaining literals are kept as given. Returns the n
// decisions sorted by variable index. Throws unsat_input_error when the
// formula has no model.
std::vector<Lit> find_solution(const Formula& f,
                               const std::vector<Lit>& priority,
                               const EngineConfig& cfg = {},
                               SolveTrace* trace = nullptr);

// Same with a seeded random polarity per variable in index order.
std::vector<Lit> find_solution_random(const Formula& f, uint64_t seed,
                                      const EngineConfig& cfg = {},
                                      SolveTrace* trace = nullptr);

Assignment to_assignment(const std::vector<Lit>& decisions);

// Model count of the formula for each literal asserted true, computed in the
// order not(x1), x1, not(x2), x2, ... For every variable the two counts sum
// to the formula's model count; an unsatisfiable input yields all zeros.
struct LiteralCountReport {
  int n = 0;
  std::vector<mpz_class> counts;  // index 2*(v-1) + (literal positive)
  mpz_class total;                // model count of the whole formula
  const mpz_class& count(Lit l) const;
};

LiteralCountReport per_literal_counts(const Formula& f,
                                      const EngineConfig& cfg = {});

}  // namespace ixsat
