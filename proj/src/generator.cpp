// SPDX-License-Identifier: Apache-2.0
#include "ixsat/generator.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ixsat {

uint64_t isqrt64(uint64_t x) {
  if (x == 0) return 0;
  const uint64_t cap = 4294967295ull;  // floor(sqrt(2^64 - 1))
  uint64_t r = (uint64_t)__builtin_sqrt((double)x);
  if (r > cap) r = cap;
  while (r > 0 && r * r > x) --r;
  while (r < cap && (r + 1) * (r + 1) <= x) ++r;
  return r;
}

const char* to_string(DensityType t) {
  switch (t) {
    case DensityType::D09N: return "0.9N";
    case DensityType::D7RootN: return "7RootN";
    case DensityType::D6RootN: return "6RootN";
    case DensityType::D5RootN: return "5RootN";
    case DensityType::D4RootN: return "4RootN";
    case DensityType::D3RootN: return "3RootN";
  }
  return "?";
}

std::optional<DensityType> parse_density_type(const std::string& s) {
  for (DensityType t :
       {DensityType::D09N, DensityType::D7RootN, DensityType::D6RootN,
        DensityType::D5RootN, DensityType::D4RootN, DensityType::D3RootN})
    if (s == to_string(t)) return t;
  return std::nullopt;
}

int density_k(int n, DensityType t) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  auto root = [n](uint64_t x) {
    return (int)isqrt64(x * x * (uint64_t)n);  // floor(x * sqrt(n)), exact
  };
  switch (t) {
    case DensityType::D09N: return (int)((9ll * n) / 10);
    case DensityType::D7RootN: return root(7);
    case DensityType::D6RootN: return root(6);
    case DensityType::D5RootN: return root(5);
    case DensityType::D4RootN: return root(4);
    case DensityType::D3RootN: return root(3);
  }
  throw std::invalid_argument("unknown density type");
}

int resolved_k(const GenSpec& spec) {
  if (spec.k) return *spec.k;
  if (spec.density) return density_k(spec.n, *spec.density);
  throw std::invalid_argument("spec needs k or a density type");
}

namespace {

// k distinct variables via partial Fisher-Yates on a persistent pool; the
// pool stays permuted between clauses, which keeps every draw uniform
// without an O(n) reset.
void draw_vars(std::vector<int>& pool, int k, SplitMix64& rng,
               std::vector<int>& out) {
  const int n = (int)pool.size();
  out.clear();
  for (int j = 0; j < k; ++j) {
    int r = j + (int)rng.below((uint64_t)(n - j));
    std::swap(pool[j], pool[r]);
    out.push_back(pool[j]);
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

Formula random_instance(const GenSpec& spec) {
  const int k = resolved_k(spec);
  if (spec.n < 1 || spec.m < 0)
    throw std::invalid_argument("need n >= 1 and m >= 0");
  if (k < 1 || k > spec.n)
    throw std::invalid_argument("resolved k=" + std::to_string(k) +
                                " outside [1, n=" + std::to_string(spec.n) +
                                "]");
  SplitMix64 rng(spec.seed);
  std::vector<int> pool(spec.n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> vars;

  Formula f;
  f.n = spec.n;
  f.clauses.reserve(spec.m);
  for (int i = 0; i < spec.m; ++i) {
    draw_vars(pool, k, rng, vars);
    Clause c;
    c.reserve(k);
    for (int v : vars) c.push_back(rng.coin() ? -v : v);
    f.clauses.push_back(std::move(c));
  }
  return f;
}

Formula best_case_instance(int n, int k, int m, uint64_t seed) {
  if (n < 1 || k < 1 || m < 1 || m > k || k > n)
    throw std::invalid_argument("need 1 <= m <= k <= n");
  SplitMix64 rng(seed);
  Formula f;
  f.n = n;
  f.clauses.reserve(m);
  std::vector<int> vars;
  for (int i = 1; i <= m; ++i) {
    Clause c;
    c.reserve(k);
    for (int v = 1; v < i; ++v) c.push_back(-v);
    c.push_back(i);
    // tail on distinct variables above i keeps the guaranteed complementary
    // pair with every other clause at the smaller clause index
    std::vector<int> pool(n - i);
    std::iota(pool.begin(), pool.end(), i + 1);
    draw_vars(pool, k - i, rng, vars);
    for (int v : vars) c.push_back(rng.coin() ? -v : v);
    f.clauses.push_back(std::move(c));
  }
  return f;
}

Formula worst_case_instance(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("need 1 <= k <= n");
  const int m = n - k + 1;
  Formula f;
  f.n = n;
  f.clauses.reserve(m);
  for (int i = 1; i <= m; ++i) {
    Clause c;
    c.reserve(k);
    for (int v = 1; v < k; ++v) c.push_back(v);
    c.push_back(k - 1 + i);
    f.clauses.push_back(c);
  }
  return f;
}

}  // namespace ixsat
