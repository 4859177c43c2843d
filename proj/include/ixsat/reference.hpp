// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "ixsat/types.hpp"
#include "ixsat/engine.hpp"

namespace ixsat {

// Straight-line single-threaded counterpart of count_models_over, kept as the
// baseline for differential tests and the kernel benchmark: a plain signed
// pattern list, allocating merges, no arena, no chunking. Produces identical
// ModelCount values including stats.
ModelCount reference_count_over(std::span<const Clause> clauses, int var_count,
                                const EngineConfig& cfg = {});

ModelCount reference_count(const Formula& f, const EngineConfig& cfg = {});

}  // namespace ixsat
