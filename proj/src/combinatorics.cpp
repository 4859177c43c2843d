// SPDX-License-Identifier: Apache-2.0
#include "ixsat/combinatorics.hpp"

#include <stdexcept>

namespace ixsat {

mpz_class binom(uint64_t a, uint64_t b) {
  mpz_class r;
  if (b > a) return r;  // 0
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return r;
}

mpq_class p_overlap(const OverlapQuery& q) {
  if (q.n < 0 || q.k_c < 0 || q.k_d < 0 || q.k_c > q.n || q.k_d > q.n)
    throw std::invalid_argument("clause sizes must lie in [0, n]");
  const uint64_t n = q.n, kc = q.k_c, kd = q.k_d;
  mpz_class num = 0, term;
  for (uint64_t i = 0; i <= kd; ++i) {
    term = binom(n - kc, kd - i) * binom(kc, i);
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), kd - i);
    num += term;
  }
  mpz_class den = binom(n, kd);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), kd);
  mpq_class p(num, den);
  p.canonicalize();
  return p;
}

mpq_class expected_overlaps(const OverlapQuery& q, int tuple_size) {
  if (tuple_size != 2 && tuple_size != 3)
    throw std::invalid_argument("tuple_size must be 2 or 3");
  if (!q.m) throw std::invalid_argument("expectation needs the clause count m");
  if (*q.m < tuple_size)
    throw std::invalid_argument("m must be at least tuple_size");
  OverlapQuery eff = q;
  if (tuple_size == 3) eff.k_d = 3 * q.k_c / 2;
  mpq_class e(binom((uint64_t)*q.m, (uint64_t)tuple_size));
  e *= p_overlap(eff);
  e.canonicalize();
  return e;
}

DensityReport classify_density(int64_t n, int64_t k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("need 1 <= k <= n");
  DensityReport r;
  r.ratio = mpq_class(mpz_class(k) * k, mpz_class(2) * n);
  r.ratio.canonicalize();
  r.dense = r.ratio >= 25;
  r.density = mpq_class(mpz_class(k), mpz_class(n));
  r.density.canonicalize();
  return r;
}

mpq_class expected_merge_scan(int64_t n, int64_t k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("need 1 <= k <= n");
  mpq_class r(mpz_class(2) * n, mpz_class(k));
  r.canonicalize();
  return r;
}

}  // namespace ixsat
