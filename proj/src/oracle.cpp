// SPDX-License-Identifier: Apache-2.0
#include "ixsat/oracle.hpp"

namespace ixsat {

namespace {

// Clause as bitmasks over assignment words: assignment bit (n - v) holds
// variable v, so ascending words enumerate assignments in lexicographic
// order with variable 1 as the most significant bit. A clause is falsified
// exactly when every literal is false: (a & vars) == negs, where negs marks
// the negated literals.
struct MaskClause {
  uint32_t vars = 0, negs = 0;
};

std::vector<MaskClause> to_masks(const Formula& f) {
  std::vector<MaskClause> mc;
  mc.reserve(f.clauses.size());
  for (const Clause& c : f.clauses) {
    MaskClause m;
    for (Lit l : c) {
      uint32_t bit = 1u << (f.n - var_of(l));
      m.vars |= bit;
      if (l < 0) m.negs |= bit;
    }
    mc.push_back(m);
  }
  return mc;
}

void check_limit(const Formula& f, const OracleLimit& limit) {
  if (limit.max_n > 30)
    throw std::invalid_argument("oracle hard ceiling is n=30");
  if (f.n > limit.max_n)
    throw oracle_limit_error("refusing brute force over n=" +
                             std::to_string(f.n) + " (limit " +
                             std::to_string(limit.max_n) + ")");
}

inline bool sat_word(const std::vector<MaskClause>& mc, uint32_t a) {
  for (const MaskClause& m : mc)
    if ((a & m.vars) == m.negs) return false;
  return true;
}

}  // namespace

mpz_class brute_force_count(const Formula& f, OracleLimit limit) {
  check_limit(f, limit);
  const auto mc = to_masks(f);
  const int64_t total = int64_t(1) << f.n;
  uint64_t count = 0;
#pragma omp parallel for schedule(static) reduction(+ : count)
  for (int64_t a = 0; a < total; ++a)
    if (sat_word(mc, (uint32_t)a)) ++count;
  return mpz_class(count);
}

std::vector<Assignment> brute_force_models(const Formula& f,
                                           OracleLimit limit) {
  check_limit(f, limit);
  const auto mc = to_masks(f);
  const int64_t total = int64_t(1) << f.n;
  std::vector<Assignment> models;
  for (int64_t a = 0; a < total; ++a) {
    if (!sat_word(mc, (uint32_t)a)) continue;
    Assignment as(f.n);
    for (int v = 1; v <= f.n; ++v)
      as[v - 1] = (a >> (f.n - v)) & 1;
    models.push_back(std::move(as));
  }
  return models;
}

}  // namespace ixsat
