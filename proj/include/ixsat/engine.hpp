// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>

#include "ixsat/types.hpp"

namespace ixsat {

struct EngineConfig {
  // Cap on the number of stored patterns. Unset means unbounded; exact
  // counting is the contract and a silent default cap would turn legitimate
  // inputs into errors. Set it when worst-case blow-up is a concern.
  std::optional<uint64_t> max_pattern_store;
  bool collect_stats = true;
  // 1 = serial, 0 = all hardware threads, >1 = that many. The parallel path
  // splits each clause's sweep over the pattern store into contiguous chunks
  // and produces bit-identical counts, store order and stats.
  int threads = 1;
};

// Sorted merge of two patterns, or nullopt when a variable carries opposite
// polarities in c and d (the merge stops at the first such pair). If scans is
// given, the number of merge-loop iterations is added to it.
std::optional<Clause> intersect(const Clause& c, const Clause& d,
                                uint64_t* scans = nullptr);

// 2^(var_count - |p|): the number of assignments falsified by pattern p.
// Throws when |p| > var_count.
mpz_class cardinality(const Clause& p, int var_count);

// Counts assignments over var_count variables that satisfy every clause, by
// inclusion-exclusion over the falsified-assignment sets: each clause's
// pattern contributes 2^(var_count-k), every surviving intersection of
// patterns contributes with alternating sign, and the run stops as soon as
// the unsatisfied count reaches 2^var_count.
//
// Clause variable indices need not lie in [1, var_count]; residual formulas
// keep their original numbering. Required instead: clauses are valid
// (var-sorted, no complementary pair) and mention at most var_count distinct
// variables in total.
//
// Throws resource_limit_error when cfg.max_pattern_store is exceeded.
ModelCount count_models_over(std::span<const Clause> clauses, int var_count,
                             const EngineConfig& cfg = {});

ModelCount count_models(const Formula& f, const EngineConfig& cfg = {});

}  // namespace ixsat
