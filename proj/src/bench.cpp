// SPDX-License-Identifier: Apache-2.0
#include "ixsat/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ixsat {

BenchRow bench_one(const Formula& f, const EngineConfig& cfg) {
  BenchRow row;
  row.n = f.n;
  row.m = (int)f.clauses.size();
  auto t0 = std::chrono::steady_clock::now();
  ModelCount mc = count_models(f, cfg);
  auto t1 = std::chrono::steady_clock::now();
  row.wall_time_seconds =
      std::max(std::chrono::duration<double>(t1 - t0).count(), 1e-9);
  row.solutions = mc.solutions.get_str();
  row.verdict = to_string(mc.verdict);
  row.overlap_count = mc.stats.overlap_count;
  row.overlap_ratio = row.m ? (double)mc.stats.overlap_count / row.m : 0.0;
  row.pattern_store_size = mc.stats.pattern_store_size;
  row.mean_merge_scan =
      mc.stats.empty_merges
          ? (double)mc.stats.empty_merge_scans / mc.stats.empty_merges
          : 0.0;
  row.early_terminated = mc.stats.early_terminated;
  return row;
}

std::vector<BenchRow> run_bench(const BenchGrid& grid, const EngineConfig& cfg,
                                std::ostream* progress) {
  SplitMix64 master(grid.seed);
  std::vector<BenchRow> rows;
  for (int n : grid.ns) {
    for (DensityType t : grid.types) {
      int k = -1;
      try {
        k = density_k(n, t);
      } catch (const std::invalid_argument&) {
      }
      const bool feasible = k >= 1 && k <= n;
      for (int m : grid.ms) {
        for (int rep = 0; rep < grid.repeats; ++rep) {
          const uint64_t seed = master.next();  // drawn even when skipped
          if (!feasible) continue;
          GenSpec spec;
          spec.n = n;
          spec.m = m;
          spec.k = k;
          spec.seed = seed;
          Formula f = random_instance(spec);
          BenchRow row = bench_one(f, cfg);
          row.k = k;
          row.density_type = to_string(t);
          row.seed = seed;
          row.run_index = rep;
          if (progress)
            (*progress) << "n=" << n << " m=" << m << " " << row.density_type
                        << " rep=" << rep << " time=" << row.wall_time_seconds
                        << "s verdict=" << row.verdict << "\n";
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

namespace {

const char* kCsvHeader =
    "n,m,k,density_type,seed,run_index,wall_time_seconds,solutions,verdict,"
    "overlap_count,overlap_ratio,pattern_store_size,mean_merge_scan,"
    "early_terminated";

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kCsvHeader << "\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.m << ',' << r.k << ',' << r.density_type << ','
        << r.seed << ',' << r.run_index << ',' << fmt_double(r.wall_time_seconds)
        << ',' << r.solutions << ',' << r.verdict << ',' << r.overlap_count
        << ',' << fmt_double(r.overlap_ratio) << ',' << r.pattern_store_size
        << ',' << fmt_double(r.mean_merge_scan) << ','
        << (r.early_terminated ? 1 : 0) << "\n";
  }
}

std::vector<BenchRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("n,m,k,", 0) != 0)
    throw std::runtime_error("not a bench CSV: missing header row");
  std::vector<BenchRow> rows;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) f.push_back(cell);
    if (f.size() != 14)
      throw std::runtime_error("bad CSV row at line " + std::to_string(lineno));
    try {
      BenchRow r;
      r.n = std::stoi(f[0]);
      r.m = std::stoi(f[1]);
      r.k = std::stoi(f[2]);
      r.density_type = f[3];
      r.seed = std::stoull(f[4]);
      r.run_index = std::stoi(f[5]);
      r.wall_time_seconds = std::stod(f[6]);
      r.solutions = f[7];
      r.verdict = f[8];
      r.overlap_count = std::stoull(f[9]);
      r.overlap_ratio = std::stod(f[10]);
      r.pattern_store_size = std::stoull(f[11]);
      r.mean_merge_scan = std::stod(f[12]);
      r.early_terminated = f[13] == "1" || f[13] == "true";
      rows.push_back(std::move(r));
    } catch (const std::exception&) {
      throw std::runtime_error("bad CSV value at line " + std::to_string(lineno));
    }
  }
  return rows;
}

namespace {

struct Key {
  int n, m;
  std::string dt;
  bool operator<(const Key& o) const {
    return std::tie(n, dt, m) < std::tie(o.n, o.dt, o.m);
  }
};

struct Agg {
  double time_sum = 0, scan_sum = 0;
  int k = 0, count = 0;
  double mean_time() const { return time_sum / count; }
  double mean_scan() const { return scan_sum / count; }
};

bool compat(double measured, double expected) {
  return measured >= 0.5 * expected && measured <= 2.0 * expected;
}

}  // namespace

ScalingReport scaling_report(const std::vector<BenchRow>& rows) {
  std::map<Key, Agg> agg;
  for (const BenchRow& r : rows) {
    Agg& a = agg[{r.n, r.m, r.density_type}];
    a.time_sum += r.wall_time_seconds;
    a.scan_sum += r.mean_merge_scan;
    a.k = r.k;
    a.count += 1;
  }

  ScalingReport rep;

  // time(m_hi) / time(m_lo) against (m_hi/m_lo)^2 per (n, density type)
  std::map<std::pair<int, std::string>, std::vector<std::pair<int, const Agg*>>>
      by_series;
  for (const auto& [key, a] : agg)
    by_series[{key.n, key.dt}].push_back({key.m, &a});
  for (auto& [series, levels] : by_series) {
    std::sort(levels.begin(), levels.end());
    if (levels.size() < 2) {
      rep.absent.push_back("m-scaling n=" + std::to_string(series.first) +
                           " " + series.second + ": single m level");
      continue;
    }
    for (size_t i = 1; i < levels.size(); ++i) {
      double ratio = (double)levels[i].first / levels[i - 1].first;
      MScalingCell c;
      c.n = series.first;
      c.density_type = series.second;
      c.m_lo = levels[i - 1].first;
      c.m_hi = levels[i].first;
      c.measured = levels[i].second->mean_time() / levels[i - 1].second->mean_time();
      c.expected = ratio * ratio;
      c.compatible = compat(c.measured, c.expected);
      rep.m_scaling.push_back(c);
    }
  }

  // time(type) / time(0.9N) against n/k at the same (n, m)
  for (const auto& [key, a] : agg) {
    if (key.dt == to_string(DensityType::D09N)) continue;
    auto base = agg.find({key.n, key.m, to_string(DensityType::D09N)});
    if (base == agg.end()) {
      rep.absent.push_back("n/k baseline 0.9N missing for n=" +
                           std::to_string(key.n) + " m=" + std::to_string(key.m));
      continue;
    }
    NKCell c;
    c.n = key.n;
    c.m = key.m;
    c.density_type = key.dt;
    c.measured = a.mean_time() / base->second.mean_time();
    c.expected = (double)key.n / a.k;
    c.compatible = compat(c.measured, c.expected);
    rep.nk.push_back(c);
  }

  // merge scans against twice the 2n/k estimate
  for (const auto& [key, a] : agg) {
    ScanCell c;
    c.n = key.n;
    c.m = key.m;
    c.density_type = key.dt;
    c.mean_scan = a.mean_scan();
    c.bound = 2.0 * (2.0 * key.n / a.k);
    c.within = c.mean_scan <= c.bound;
    rep.scans.push_back(c);
  }

  return rep;
}

std::string ScalingReport::text() const {
  std::ostringstream out;
  out << "time vs m^2 (band [0.5x, 2x] of expected)\n";
  for (const auto& c : m_scaling)
    out << "  n=" << c.n << " " << c.density_type << " m " << c.m_lo << "->"
        << c.m_hi << ": measured " << fmt_double(c.measured) << " expected "
        << fmt_double(c.expected) << (c.compatible ? " yes" : " NO") << "\n";
  out << "time vs n/k against the 0.9N baseline\n";
  for (const auto& c : nk)
    out << "  n=" << c.n << " m=" << c.m << " " << c.density_type
        << ": measured " << fmt_double(c.measured) << " expected "
        << fmt_double(c.expected) << (c.compatible ? " yes" : " NO") << "\n";
  out << "mean merge scan vs 2*(2n/k)\n";
  for (const auto& c : scans)
    out << "  n=" << c.n << " m=" << c.m << " " << c.density_type << ": "
        << fmt_double(c.mean_scan) << " bound " << fmt_double(c.bound)
        << (c.within ? " yes" : " NO") << "\n";
  for (const auto& a : absent) out << "absent: " << a << "\n";
  return out.str();
}

}  // namespace ixsat
