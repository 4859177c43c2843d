// SPDX-License-Identifier: Apache-2.0
//
// Inclusion-exclusion model counter. Every clause falsifies exactly
// 2^(n-k) assignments (its pattern); the count of unsatisfying assignments is
// the size of the union of all patterns, accumulated clause by clause: add the
// new clause's pattern, then correct with every stored signed pattern whose
// merge with it survives, appending each surviving merge with the contrary
// sign for later clauses. The merge walks both var-sorted literal sequences
// and bails at the first complementary pair, which for dense clauses happens
// after ~2n/k literals, so the common case does no allocation at all.
//
// The pattern store is a flat literal arena plus (offset, length, sign)
// entries. The sweep of one clause against the store prefix has no
// loop-carried dependence, so it can be chunked across OpenMP threads; each
// thread appends survivors to a private buffer and accumulates an exact
// partial sum, and buffers are folded back in chunk order, keeping counts,
// store order and stats identical to the serial sweep.

#include "ixsat/engine.hpp"

#include <omp.h>

#include <atomic>

namespace ixsat {

namespace {

// below this store size the per-clause sweep stays serial; a region spawn
// costs more than the merges it would split
constexpr size_t kParallelThreshold = 2048;

// Writes the sorted union of c and d into out (capacity cn+dn) and returns
// its length, or -1 when a variable appears with opposite signs in both.
// scans counts loop iterations, the unit of all merge instrumentation.
inline int merge_core(const Lit* c, int cn, const Lit* d, int dn, Lit* out,
                      uint64_t& scans) {
  int i = 0, j = 0, o = 0;
  uint64_t s = 0;
  while (i < cn && j < dn) {
    ++s;
    const Lit a = c[i], b = d[j];
    if (a == -b) {
      scans += s;
      return -1;
    }
    if (a == b) {
      out[o++] = a;
      ++i;
      ++j;
    } else if (var_of(a) < var_of(b)) {
      out[o++] = a;
      ++i;
    } else {
      out[o++] = b;
      ++j;
    }
  }
  scans += s;
  while (i < cn) out[o++] = c[i++];
  while (j < dn) out[o++] = d[j++];
  return o;
}

struct Entry {
  uint64_t off;
  uint32_t len;
  // sign applied to u when a later clause's merge with this pattern survives;
  // the surviving merge is stored with the contrary sign
  int32_t sign;
};

// u += sign * 2^e, reusing scratch so the hot path never allocates
inline void add_pow2(mpz_class& u, mpz_class& scratch, uint64_t e, int sign) {
  mpz_set_ui(scratch.get_mpz_t(), 1);
  mpz_mul_2exp(scratch.get_mpz_t(), scratch.get_mpz_t(), e);
  if (sign > 0)
    mpz_add(u.get_mpz_t(), u.get_mpz_t(), scratch.get_mpz_t());
  else
    mpz_sub(u.get_mpz_t(), u.get_mpz_t(), scratch.get_mpz_t());
}

struct ThreadBuf {
  mpz_class u, scratch;
  std::vector<Lit> arena;
  std::vector<Entry> entries;  // offsets relative to the local arena
  std::vector<Lit> mergebuf;
  uint64_t merges = 0, scans = 0, empty = 0, empty_scans = 0;
};

}  // namespace

std::optional<Clause> intersect(const Clause& c, const Clause& d,
                                uint64_t* scans) {
  Clause out(c.size() + d.size());
  uint64_t s = 0;
  int len = merge_core(c.data(), (int)c.size(), d.data(), (int)d.size(),
                       out.data(), s);
  if (scans) *scans += s;
  if (len < 0) return std::nullopt;
  out.resize(len);
  return out;
}

mpz_class cardinality(const Clause& p, int var_count) {
  if (var_count < 0 || (int)p.size() > var_count)
    throw std::invalid_argument("pattern longer than the variable count");
  return pow2((uint64_t)(var_count - (int)p.size()));
}

ModelCount count_models_over(std::span<const Clause> clauses, int var_count,
                             const EngineConfig& cfg) {
  if (var_count < 0) throw std::invalid_argument("negative variable count");
  const uint64_t n = (uint64_t)var_count;
  const size_t m = clauses.size();
  for (const Clause& c : clauses)
    if ((int)c.size() > var_count)
      throw std::invalid_argument("clause longer than the variable count");

  int threads = cfg.threads == 0 ? omp_get_max_threads() : cfg.threads;
  if (threads < 1) threads = 1;
  const uint64_t cap =
      cfg.max_pattern_store ? *cfg.max_pattern_store : UINT64_MAX;

  const mpz_class full = pow2(n);
  mpz_class u = 0, scratch;
  std::vector<Lit> arena;
  std::vector<Entry> entries;
  std::vector<Lit> mergebuf;
  RunStats st;

  {
    size_t lits = 0;
    for (const Clause& c : clauses) lits += c.size();
    arena.reserve(lits);
    entries.reserve(m);
  }

  std::vector<ThreadBuf> tb;
  if (threads > 1) tb.resize(threads);

  bool early = false;
  size_t ci = 0;
  for (; ci < m; ++ci) {
    const Clause& cl = clauses[ci];
    const Lit* cp = cl.data();
    const int cn = (int)cl.size();
    const size_t base = entries.size();

    add_pow2(u, scratch, n - cn, +1);
    entries.push_back({arena.size(), (uint32_t)cn, -1});
    arena.insert(arena.end(), cl.begin(), cl.end());
    if (entries.size() > cap) throw resource_limit_error(ci + 1, cap);

    if (threads == 1 || base < kParallelThreshold) {
      for (size_t j = 0; j < base; ++j) {
        const Entry e = entries[j];
        if (mergebuf.size() < (size_t)cn + e.len)
          mergebuf.resize((size_t)cn + e.len);
        uint64_t ms = 0;
        // appends may move the arena, so the read pointer is refetched here
        int len = merge_core(cp, cn, arena.data() + e.off, (int)e.len,
                             mergebuf.data(), ms);
        ++st.merges_attempted;
        st.merge_literal_scans += ms;
        if (len < 0) {
          ++st.empty_merges;
          st.empty_merge_scans += ms;
          continue;
        }
        if (len > var_count)
          throw std::invalid_argument(
              "clauses mention more distinct variables than the variable "
              "count");
        add_pow2(u, scratch, n - (uint64_t)len, e.sign);
        entries.push_back({arena.size(), (uint32_t)len, -e.sign});
        arena.insert(arena.end(), mergebuf.begin(), mergebuf.begin() + len);
        if (entries.size() > cap) throw resource_limit_error(ci + 1, cap);
      }
    } else {
      std::atomic<uint64_t> produced{entries.size()};
      std::atomic<bool> over{false};
      std::atomic<bool> bad_width{false};
      int t_used = 1;
#pragma omp parallel num_threads(threads)
      {
        const int t = omp_get_thread_num();
        const int tn = omp_get_num_threads();
#pragma omp master
        t_used = tn;
        ThreadBuf& b = tb[t];
        const size_t lo = base * (size_t)t / tn;
        const size_t hi = base * (size_t)(t + 1) / tn;
        const Lit* ar = arena.data();  // stable: the region only reads it
        for (size_t j = lo; j < hi; ++j) {
          if (over.load(std::memory_order_relaxed) ||
              bad_width.load(std::memory_order_relaxed))
            break;
          const Entry e = entries[j];
          if (b.mergebuf.size() < (size_t)cn + e.len)
            b.mergebuf.resize((size_t)cn + e.len);
          uint64_t ms = 0;
          int len =
              merge_core(cp, cn, ar + e.off, (int)e.len, b.mergebuf.data(), ms);
          ++b.merges;
          b.scans += ms;
          if (len < 0) {
            ++b.empty;
            b.empty_scans += ms;
            continue;
          }
          if (len > var_count) {
            bad_width.store(true, std::memory_order_relaxed);
            break;
          }
          add_pow2(b.u, b.scratch, n - (uint64_t)len, e.sign);
          b.entries.push_back({b.arena.size(), (uint32_t)len, -e.sign});
          b.arena.insert(b.arena.end(), b.mergebuf.begin(),
                         b.mergebuf.begin() + len);
          if (produced.fetch_add(1, std::memory_order_relaxed) + 1 > cap)
            over.store(true, std::memory_order_relaxed);
        }
      }
      if (bad_width.load())
        throw std::invalid_argument(
            "clauses mention more distinct variables than the variable count");
      if (over.load()) throw resource_limit_error(ci + 1, cap);
      for (int t = 0; t < t_used; ++t) {
        ThreadBuf& b = tb[t];
        mpz_add(u.get_mpz_t(), u.get_mpz_t(), b.u.get_mpz_t());
        b.u = 0;
        st.merges_attempted += b.merges;
        st.merge_literal_scans += b.scans;
        st.empty_merges += b.empty;
        st.empty_merge_scans += b.empty_scans;
        b.merges = b.scans = b.empty = b.empty_scans = 0;
        const uint64_t off0 = arena.size();
        arena.insert(arena.end(), b.arena.begin(), b.arena.end());
        for (const Entry& e : b.entries)
          entries.push_back({e.off + off0, e.len, e.sign});
        b.arena.clear();
        b.entries.clear();
      }
    }

    if (mpz_cmp(u.get_mpz_t(), full.get_mpz_t()) == 0) {
      early = true;
      ++ci;
      break;
    }
  }

  ModelCount out;
  st.clauses_processed = ci;
  st.pattern_store_size = entries.size();
  st.overlap_count = entries.size() - ci;
  st.early_terminated = early;
  if (early) {
    out.solutions = 0;
    out.verdict = Verdict::UNSAT;
  } else {
    out.solutions = full - u;
    out.verdict =
        out.solutions == 1 ? Verdict::UNIQUE : Verdict::SAT;
  }
  if (cfg.collect_stats) {
    out.stats = st;
  } else {
    out.stats.clauses_processed = st.clauses_processed;
    out.stats.early_terminated = st.early_terminated;
  }
  return out;
}

ModelCount count_models(const Formula& f, const EngineConfig& cfg) {
  return count_models_over(std::span<const Clause>(f.clauses), f.n, cfg);
}

}  // namespace ixsat
