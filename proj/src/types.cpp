// SPDX-License-Identifier: Apache-2.0
#include "ixsat/types.hpp"

#include <algorithm>

namespace ixsat {

Clause make_clause(std::vector<Lit> lits) {
  for (Lit l : lits) {
    if (l == 0) throw std::invalid_argument("literal 0 is not allowed");
  }
  std::sort(lits.begin(), lits.end(),
            [](Lit a, Lit b) { return var_of(a) < var_of(b); });
  Clause out;
  out.reserve(lits.size());
  for (Lit l : lits) {
    if (!out.empty() && var_of(out.back()) == var_of(l)) {
      if (out.back() == l) continue;  // duplicate literal
      throw std::invalid_argument("complementary literals in one clause: " +
                                  std::to_string(var_of(l)));
    }
    out.push_back(l);
  }
  return out;
}

Formula make_formula(int n, std::vector<std::vector<Lit>> raw_clauses) {
  if (n < 0) throw std::invalid_argument("negative variable count");
  Formula f;
  f.n = n;
  f.clauses.reserve(raw_clauses.size());
  for (auto& raw : raw_clauses) {
    Clause c = make_clause(std::move(raw));
    if (!c.empty() && var_of(c.back()) > n)
      throw std::invalid_argument("variable " + std::to_string(var_of(c.back())) +
                                  " out of range, n=" + std::to_string(n));
    f.clauses.push_back(std::move(c));
  }
  return f;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::UNSAT: return "UNSAT";
    case Verdict::SAT: return "SAT";
    case Verdict::UNIQUE: return "UNIQUE";
  }
  return "?";
}

resource_limit_error::resource_limit_error(uint64_t clause_index_, uint64_t cap)
    : std::runtime_error("pattern store limit " + std::to_string(cap) +
                         " exceeded while processing clause " +
                         std::to_string(clause_index_)),
      clause_index(clause_index_) {}

bool evaluate(const Formula& f, const Assignment& a) {
  if ((int)a.size() != f.n)
    throw std::invalid_argument("assignment length " + std::to_string(a.size()) +
                                " does not match n=" + std::to_string(f.n));
  for (const Clause& c : f.clauses) {
    bool sat = false;
    for (Lit l : c) {
      bool val = a[var_of(l) - 1] != 0;
      if (l > 0 ? val : !val) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

mpz_class pow2(uint64_t e) {
  mpz_class r;
  mpz_set_ui(r.get_mpz_t(), 1);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

}  // namespace ixsat
