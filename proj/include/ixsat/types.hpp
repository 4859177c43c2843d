// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ixsat {

// DIMACS-style literal: nonzero signed integer, |v| is the variable index,
// sign is the polarity.
using Lit = int32_t;

inline int32_t var_of(Lit l) { return l < 0 ? -l : l; }

// A clause is a strictly var-sorted literal sequence over distinct variables.
// It doubles as an unsatisfiability pattern: the set of assignments falsifying
// the clause, which merges and counts exactly like the clause itself.
using Clause = std::vector<Lit>;

// Sorts by variable, drops duplicate identical literals, rejects zero literals
// and complementary pairs (throws std::invalid_argument).
Clause make_clause(std::vector<Lit> lits);

struct Formula {
  int n = 0;
  std::vector<Clause> clauses;
  bool operator==(const Formula&) const = default;
};

// Validates n >= 0, normalizes every clause, checks variable indices <= n.
Formula make_formula(int n, std::vector<std::vector<Lit>> raw_clauses);

enum class Verdict { UNSAT, SAT, UNIQUE };
const char* to_string(Verdict v);

struct RunStats {
  uint64_t merges_attempted = 0;
  // One scan = one iteration of the two-pointer merge loop (a shared literal
  // consumes one scan, tail copies after a side is exhausted are free).
  uint64_t merge_literal_scans = 0;
  uint64_t empty_merges = 0;       // merges ended by a complementary pair
  uint64_t empty_merge_scans = 0;  // scans spent in those merges
  uint64_t overlap_count = 0;      // non-empty intersection patterns created
  uint64_t pattern_store_size = 0;
  uint64_t clauses_processed = 0;
  bool early_terminated = false;  // unsat count hit 2^n and the run stopped
};

struct ModelCount {
  mpz_class solutions;
  Verdict verdict = Verdict::UNSAT;
  RunStats stats;
};

struct resource_limit_error : std::runtime_error {
  uint64_t clause_index;  // 1-based clause being processed when the cap broke
  resource_limit_error(uint64_t clause_index_, uint64_t cap);
};

// One value per variable; index 0 holds variable 1.
using Assignment = std::vector<uint8_t>;

// True iff every clause has a satisfied literal. Throws on length mismatch.
bool evaluate(const Formula& f, const Assignment& a);

mpz_class pow2(uint64_t e);

}  // namespace ixsat
