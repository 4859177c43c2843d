// SPDX-License-Identifier: Apache-2.0
// Two small worked formulas used across the tests. k1 has exactly the models
// 001 and 110, k2 extends it into an unsatisfiable formula whose final clause
// pushes the engine to the full-space early exit.
#pragma once
#include "ixsat/types.hpp"

inline ixsat::Formula k1() {
  return ixsat::make_formula(3, {{-1, 2}, {2, 3}, {-2, -3}, {1, -2, 3}});
}

inline ixsat::Formula k2() {
  return ixsat::make_formula(
      3, {{-1, 2}, {2, 3}, {-2, -3}, {1, -2, 3}, {1, 2}, {-1, -2}});
}
