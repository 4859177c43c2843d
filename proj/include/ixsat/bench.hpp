// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ixsat/engine.hpp"
#include "ixsat/generator.hpp"

namespace ixsat {

// One timed counting run on one generated instance. mean_merge_scan averages
// over the merges that died at a complementary pair; those are the ones the
// 2n/k geometric model describes.
struct BenchRow {
  int n = 0;
  int m = 0;
  int k = 0;
  std::string density_type;
  uint64_t seed = 0;
  int run_index = 0;
  double wall_time_seconds = 0;
  std::string solutions;  // exact decimal count
  std::string verdict;
  uint64_t overlap_count = 0;
  double overlap_ratio = 0;  // overlap_count / m
  uint64_t pattern_store_size = 0;
  double mean_merge_scan = 0;
  bool early_terminated = false;
};

struct BenchGrid {
  std::vector<int> ns{100, 200, 800};
  std::vector<int> ms{100, 1000, 2000};
  std::vector<DensityType> types{DensityType::D09N,    DensityType::D7RootN,
                                 DensityType::D6RootN, DensityType::D5RootN,
                                 DensityType::D4RootN, DensityType::D3RootN};
  int repeats = 3;
  uint64_t seed = 1;
};

// Runs the grid cell by cell. Per-run seeds come from one master stream in
// fixed enumeration order (n, type, m, repeat), so a rerun with the same grid
// and seed reproduces every instance; a cell whose density type resolves to
// an invalid k for its n is skipped (its seeds are still drawn, keeping the
// assignment stable). Timing wraps the count alone. progress, when given,
// receives one line per finished run.
std::vector<BenchRow> run_bench(const BenchGrid& grid, const EngineConfig& cfg,
                                std::ostream* progress = nullptr);

// Times one instance and fills everything but the grid bookkeeping fields.
BenchRow bench_one(const Formula& f, const EngineConfig& cfg);

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);
std::vector<BenchRow> read_csv(std::istream& in);

// Checks measured scaling against the cost model O(m^2 * n/k), the way the
// desk experiments do: time ratios between m levels against (m2/m1)^2, time
// ratios against the 0.9N baseline at the same n and m against n/k, and
// mean merge scans against twice the 2n/k estimate. A measurement is called
// compatible inside [0.5x, 2x] of its prediction.
struct MScalingCell {
  int n;
  std::string density_type;
  int m_lo, m_hi;
  double measured, expected;
  bool compatible;
};
struct NKCell {
  int n, m;
  std::string density_type;
  double measured, expected;  // expected = n/k
  bool compatible;
};
struct ScanCell {
  int n, m;
  std::string density_type;
  double mean_scan, bound;  // bound = 2 * (2n/k)
  bool within;
};
struct ScalingReport {
  std::vector<MScalingCell> m_scaling;
  std::vector<NKCell> nk;
  std::vector<ScanCell> scans;
  std::vector<std::string> absent;  // comparisons with too few rows
  std::string text() const;
};

ScalingReport scaling_report(const std::vector<BenchRow>& rows);

}  // namespace ixsat
