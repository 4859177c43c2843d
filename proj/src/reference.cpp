// SPDX-License-Identifier: Apache-2.0
#include "ixsat/reference.hpp"

#include <utility>

namespace ixsat {

ModelCount reference_count_over(std::span<const Clause> clauses, int var_count,
                                const EngineConfig& cfg) {
  if (var_count < 0) throw std::invalid_argument("negative variable count");
  for (const Clause& c : clauses)
    if ((int)c.size() > var_count)
      throw std::invalid_argument("clause longer than the variable count");
  const uint64_t cap =
      cfg.max_pattern_store ? *cfg.max_pattern_store : UINT64_MAX;

  const mpz_class full = pow2((uint64_t)var_count);
  mpz_class u = 0;
  std::vector<std::pair<int, Clause>> store;  // sign, pattern
  RunStats st;

  bool early = false;
  size_t ci = 0;
  for (; ci < clauses.size(); ++ci) {
    const Clause& cl = clauses[ci];
    u += cardinality(cl, var_count);
    std::vector<std::pair<int, Clause>> fresh;
    fresh.emplace_back(-1, cl);
    if (store.size() + fresh.size() > cap)
      throw resource_limit_error(ci + 1, cap);
    for (const auto& [sign, p] : store) {
      uint64_t ms = 0;
      auto ip = intersect(cl, p, &ms);
      ++st.merges_attempted;
      st.merge_literal_scans += ms;
      if (!ip) {
        ++st.empty_merges;
        st.empty_merge_scans += ms;
        continue;
      }
      if ((int)ip->size() > var_count)
        throw std::invalid_argument(
            "clauses mention more distinct variables than the variable count");
      if (sign > 0)
        u += cardinality(*ip, var_count);
      else
        u -= cardinality(*ip, var_count);
      fresh.emplace_back(-sign, std::move(*ip));
      if (store.size() + fresh.size() > cap)
        throw resource_limit_error(ci + 1, cap);
    }
    for (auto& sp : fresh) store.push_back(std::move(sp));
    if (u == full) {
      early = true;
      ++ci;
      break;
    }
  }

  ModelCount out;
  st.clauses_processed = ci;
  st.pattern_store_size = store.size();
  st.overlap_count = store.size() - ci;
  st.early_terminated = early;
  if (early) {
    out.solutions = 0;
    out.verdict = Verdict::UNSAT;
  } else {
    out.solutions = full - u;
    out.verdict = out.solutions == 1 ? Verdict::UNIQUE : Verdict::SAT;
  }
  if (cfg.collect_stats) {
    out.stats = st;
  } else {
    out.stats.clauses_processed = st.clauses_processed;
    out.stats.early_terminated = st.early_terminated;
  }
  return out;
}

ModelCount reference_count(const Formula& f, const EngineConfig& cfg) {
  return reference_count_over(std::span<const Clause>(f.clauses), f.n, cfg);
}

}  // namespace ixsat
