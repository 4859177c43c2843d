// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "ixsat/types.hpp"

namespace ixsat {

// Deliberately naive ground truth: enumerate all 2^n assignments.
struct OracleLimit {
  int max_n = 24;  // refuse larger n; hard ceiling 30
};

struct oracle_limit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

mpz_class brute_force_count(const Formula& f, OracleLimit limit = {});

// Models in lexicographic order with variable 1 as the most significant bit.
std::vector<Assignment> brute_force_models(const Formula& f,
                                           OracleLimit limit = {});

}  // namespace ixsat
