// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace ixsat {

// C(a, b); 0 when b > a, so infeasible summands vanish.
mpz_class binom(uint64_t a, uint64_t b);

struct OverlapQuery {
  int64_t n = 0;
  int64_t k_c = 0;  // literals of the first clause
  int64_t k_d = 0;  // literals of the second clause
  std::optional<int64_t> m;  // clause count, for expectations
};

// Probability that two uniform random clauses with k_c and k_d literals over
// n variables have no variable with opposite polarities, i.e. that their
// patterns intersect:
//   sum_{i=0}^{k_d} C(n-k_c, k_d-i) * 2^(k_d-i) * C(k_c, i)
//   ------------------------------------------------------
//                  C(n, k_d) * 2^k_d
// Exact rational; throws when k_c or k_d is outside [0, n].
mpq_class p_overlap(const OverlapQuery& q);

// C(m, tuple_size) * p_overlap. tuple_size 2 uses the query as given;
// tuple_size 3 models the pairwise intersections as clauses with
// floor(1.5 * k_c) literals (they average 50% more literals) and keeps k_c.
// Requires m >= tuple_size.
mpq_class expected_overlaps(const OverlapQuery& q, int tuple_size);

struct DensityReport {
  mpq_class ratio;    // k^2 / 2n
  bool dense = false; // ratio >= 25: pairwise overlap is negligible
  mpq_class density;  // k / n
};

DensityReport classify_density(int64_t n, int64_t k);

// Geometric-model estimate of literals scanned before a merge hits a
// complementary pair: 2n/k. An upper estimate; the true expectation is lower.
mpq_class expected_merge_scan(int64_t n, int64_t k);

}  // namespace ixsat
