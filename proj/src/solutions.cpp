// SPDX-License-Identifier: Apache-2.0
#include "ixsat/solutions.hpp"

#include <omp.h>

#include <algorithm>

#include "ixsat/generator.hpp"

namespace ixsat {

namespace {

// filter into out; true on conflict (some clause became empty)
bool filter_vec(const std::vector<Clause>& clauses, Lit lit,
                std::vector<Clause>& out) {
  out.clear();
  for (const Clause& c : clauses) {
    bool has_lit = false, has_comp = false;
    for (Lit l : c) {
      if (l == lit) has_lit = true;
      else if (l == -lit) has_comp = true;
    }
    if (has_lit) continue;
    if (!has_comp) {
      out.push_back(c);
      continue;
    }
    if (c.size() == 1) return true;  // clause reduces to empty
    Clause d;
    d.reserve(c.size() - 1);
    for (Lit l : c)
      if (l != -lit) d.push_back(l);
    out.push_back(std::move(d));
  }
  return false;
}

void check_priority(int n, const std::vector<Lit>& priority) {
  if ((int)priority.size() != n)
    throw std::invalid_argument("priority must hold one literal per variable");
  std::vector<char> seen(n + 1, 0);
  for (Lit l : priority) {
    int v = var_of(l);
    if (l == 0 || v > n || seen[v])
      throw std::invalid_argument("priority must mention each variable once");
    seen[v] = 1;
  }
}

}  // namespace

Residual filter_clauses(const Formula& f, Lit lit) {
  if (var_of(lit) > f.n || lit == 0)
    throw std::invalid_argument("literal out of range");
  Residual r;
  r.formula.n = f.n;
  if (filter_vec(f.clauses, lit, r.formula.clauses)) {
    r.conflict = true;
    r.formula.clauses.clear();
  }
  return r;
}

std::vector<Lit> index_priority(int n) {
  std::vector<Lit> p(n);
  for (int v = 1; v <= n; ++v) p[v - 1] = v;
  return p;
}

std::vector<Lit> random_priority(int n, uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<Lit> p(n);
  for (int v = 1; v <= n; ++v) p[v - 1] = rng.coin() ? -v : v;
  return p;
}

std::vector<Lit> find_solution(const Formula& f,
                               const std::vector<Lit>& priority,
                               const EngineConfig& cfg, SolveTrace* trace) {
  check_priority(f.n, priority);
  std::vector<Lit> decisions;
  decisions.reserve(f.n);
  std::vector<Clause> cur = f.clauses, trial, other;
  int free_vars = f.n;
  uint64_t calls = 0;

  for (size_t i = 0; i < priority.size(); ++i) {
    if (cur.empty()) {
      // every clause satisfied; the rest keep their trial polarity
      decisions.insert(decisions.end(), priority.begin() + i, priority.end());
      break;
    }
    const Lit lit = priority[i];
    bool keep = false;
    if (!filter_vec(cur, lit, trial)) {
      ++calls;
      keep = count_models_over(std::span<const Clause>(trial), free_vars - 1,
                               cfg)
                 .solutions > 0;
    }
    if (keep) {
      decisions.push_back(lit);
      cur.swap(trial);
    } else {
      // all remaining models set the complement; no recount needed
      if (filter_vec(cur, -lit, other))
        throw unsat_input_error("formula has no model");
      decisions.push_back(-lit);
      cur.swap(other);
    }
    --free_vars;
  }

  if (trace) trace->count_calls = calls;
  std::sort(decisions.begin(), decisions.end(),
            [](Lit a, Lit b) { return var_of(a) < var_of(b); });
  if (!evaluate(f, to_assignment(decisions)))
    throw unsat_input_error("formula has no model");
  return decisions;
}

std::vector<Lit> find_solution_random(const Formula& f, uint64_t seed,
                                      const EngineConfig& cfg,
                                      SolveTrace* trace) {
  return find_solution(f, random_priority(f.n, seed), cfg, trace);
}

Assignment to_assignment(const std::vector<Lit>& decisions) {
  Assignment a(decisions.size(), 0);
  for (Lit l : decisions) {
    size_t v = var_of(l);
    if (v == 0 || v > decisions.size())
      throw std::invalid_argument("decisions must cover variables 1..n");
    a[v - 1] = l > 0;
  }
  return a;
}

const mpz_class& LiteralCountReport::count(Lit l) const {
  int v = var_of(l);
  if (l == 0 || v > n) throw std::invalid_argument("literal out of range");
  return counts[2 * (v - 1) + (l > 0)];
}

LiteralCountReport per_literal_counts(const Formula& f,
                                      const EngineConfig& cfg) {
  LiteralCountReport rep;
  rep.n = f.n;
  rep.counts.resize(2 * (size_t)f.n);
  if (f.n == 0) {
    rep.total = count_models(f, cfg).solutions;
    return rep;
  }

  EngineConfig inner = cfg;
  inner.threads = 1;  // the residual counts below are the parallel axis
  int lanes = cfg.threads == 0 ? omp_get_max_threads() : cfg.threads;
  if (lanes < 1) lanes = 1;
#pragma omp parallel for schedule(dynamic) num_threads(lanes) if (lanes > 1)
  for (int idx = 0; idx < 2 * f.n; ++idx) {
    const int v = idx / 2 + 1;
    const Lit lit = (idx % 2 == 0) ? -v : v;
    Residual r = filter_clauses(f, lit);
    if (r.conflict) {
      rep.counts[idx] = 0;
    } else {
      rep.counts[idx] =
          count_models_over(std::span<const Clause>(r.formula.clauses),
                            f.n - 1, inner)
              .solutions;
    }
  }
  rep.total = rep.counts[0] + rep.counts[1];
  return rep;
}

}  // namespace ixsat
