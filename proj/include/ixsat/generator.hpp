// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ixsat/types.hpp"

namespace ixsat {

// SplitMix64 (Steele, Lea, Flood 2014): tiny, splittable, reproducible across
// languages. Draw rules used throughout the repo: below(b) = next() % b,
// coin() = next() & 1.
struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t bound) { return next() % bound; }
  bool coin() { return next() & 1; }
};

// floor(sqrt(x)) for 64-bit x, exact.
uint64_t isqrt64(uint64_t x);

// The experiment families: 0.9N fixes density at 0.9, xRootN fixes
// k = floor(x * sqrt(n)) so density falls as n grows.
enum class DensityType { D09N, D7RootN, D6RootN, D5RootN, D4RootN, D3RootN };

const char* to_string(DensityType t);
std::optional<DensityType> parse_density_type(const std::string& s);

// k for the family at n: (9n)/10 or isqrt(x^2 * n), all in integers.
int density_k(int n, DensityType t);

struct GenSpec {
  int n = 0;
  int m = 0;
  std::optional<int> k;
  std::optional<DensityType> density;  // used when k is not set
  uint64_t seed = 0;
};

int resolved_k(const GenSpec& spec);

// m clauses, each k distinct uniform variables (drawn without replacement)
// with independent fair-coin polarities assigned in ascending variable
// order. Deterministic per seed; clauses are not deduplicated.
Formula random_instance(const GenSpec& spec);

// Clause i of m (m <= k) is not(x1) ... not(x_{i-1}), x_i plus k-i random
// polarity literals on distinct variables above i: any two clauses carry a
// complementary pair at the smaller index, so every merge dies immediately.
Formula best_case_instance(int n, int k, int m, uint64_t seed);

// n-k+1 clauses sharing positive literals x1..x_{k-1}, clause i adding
// x_{k-1+i}: every clause subset has a surviving intersection, so the store
// grows to 2^m - 1 patterns.
Formula worst_case_instance(int n, int k);

}  // namespace ixsat
