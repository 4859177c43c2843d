// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <sstream>

#include "common.hpp"
#include "ixsat/bench.hpp"

using namespace ixsat;

TEST_CASE("bench_one fills the measured fields") {
  BenchRow r = bench_one(k1(), {});
  CHECK(r.n == 3);
  CHECK(r.m == 4);
  CHECK(r.solutions == "2");
  CHECK(r.verdict == "SAT");
  CHECK(r.overlap_count == 1);
  CHECK(r.overlap_ratio == 0.25);
  CHECK(r.pattern_store_size == 5);
  CHECK(!r.early_terminated);
  CHECK(r.wall_time_seconds > 0);
}

namespace {

bool same_but_time(const BenchRow& a, const BenchRow& b) {
  return a.n == b.n && a.m == b.m && a.k == b.k &&
         a.density_type == b.density_type && a.seed == b.seed &&
         a.run_index == b.run_index && a.solutions == b.solutions &&
         a.verdict == b.verdict && a.overlap_count == b.overlap_count &&
         a.pattern_store_size == b.pattern_store_size &&
         a.early_terminated == b.early_terminated;
}

}  // namespace

TEST_CASE("run_bench enumerates the grid deterministically") {
  BenchGrid grid;
  grid.ns = {8};
  grid.ms = {5, 10};
  grid.types = {DensityType::D09N, DensityType::D3RootN};
  grid.repeats = 2;
  grid.seed = 7;
  auto rows = run_bench(grid, {});
  REQUIRE(rows.size() == 8);
  for (const BenchRow& r : rows) {
    CHECK(r.n == 8);
    CHECK((r.m == 5 || r.m == 10));
    if (r.density_type == "0.9N") CHECK(r.k == 7);
    if (r.density_type == "3RootN") CHECK(r.k == 8);
    CHECK((r.run_index == 0 || r.run_index == 1));
  }
  auto again = run_bench(grid, {});
  REQUIRE(again.size() == rows.size());
  for (size_t i = 0; i < rows.size(); ++i)
    CHECK(same_but_time(rows[i], again[i]));
}

TEST_CASE("infeasible grid cells are skipped but keep their seed draws") {
  BenchGrid grid;
  grid.ns = {4};
  grid.ms = {3};
  grid.types = {DensityType::D7RootN};  // k = 14 > 4
  grid.repeats = 2;
  CHECK(run_bench(grid, {}).empty());

  grid.ns = {8};
  grid.types = {DensityType::D7RootN, DensityType::D3RootN};
  grid.repeats = 1;
  grid.seed = 3;
  auto rows = run_bench(grid, {});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].density_type == "3RootN");
  SplitMix64 master(3);
  master.next();  // the infeasible 7RootN cell consumed this one
  CHECK(rows[0].seed == master.next());
}

TEST_CASE("CSV round trip is exact") {
  BenchGrid grid;
  grid.ns = {6};
  grid.ms = {4};
  grid.types = {DensityType::D09N};
  grid.repeats = 2;
  auto rows = run_bench(grid, {});
  std::ostringstream first;
  write_csv(first, rows);
  std::istringstream in(first.str());
  auto back = read_csv(in);
  std::ostringstream second;
  write_csv(second, back);
  CHECK(first.str() == second.str());
}

TEST_CASE("read_csv rejects foreign input") {
  std::istringstream junk("hello\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(junk), std::runtime_error);
  std::istringstream short_row(
      "n,m,k,density_type,seed,run_index,wall_time_seconds,solutions,verdict,"
      "overlap_count,overlap_ratio,pattern_store_size,mean_merge_scan,"
      "early_terminated\n1,2,3\n");
  CHECK_THROWS_AS(read_csv(short_row), std::runtime_error);
}

namespace {

BenchRow mk(int n, int m, int k, const char* dt, double t, double scan) {
  BenchRow r;
  r.n = n;
  r.m = m;
  r.k = k;
  r.density_type = dt;
  r.seed = 0;
  r.run_index = 0;
  r.wall_time_seconds = t;
  r.solutions = "1";
  r.verdict = "SAT";
  r.overlap_count = 0;
  r.overlap_ratio = 0;
  r.pattern_store_size = m;
  r.mean_merge_scan = scan;
  r.early_terminated = false;
  return r;
}

}  // namespace

TEST_CASE("scaling report on synthetic rows") {
  std::vector<BenchRow> rows = {
      mk(100, 10, 90, "0.9N", 0.8, 3.0),
      mk(100, 10, 90, "0.9N", 1.2, 3.0),
      mk(100, 100, 90, "0.9N", 96.0, 3.0),
      mk(100, 10, 70, "7RootN", 1.4, 5.0),
      mk(100, 100, 70, "7RootN", 300.0, 5.0),
      mk(100, 7, 30, "3RootN", 2.0, 14.0),
  };
  ScalingReport rep = scaling_report(rows);

  REQUIRE(rep.m_scaling.size() == 2);
  CHECK(rep.m_scaling[0].density_type == "0.9N");
  CHECK(rep.m_scaling[0].measured == doctest::Approx(96.0));
  CHECK(rep.m_scaling[0].expected == doctest::Approx(100.0));
  CHECK(rep.m_scaling[0].compatible);  // 96 sits inside [50, 200]
  CHECK(rep.m_scaling[1].density_type == "7RootN");
  CHECK(!rep.m_scaling[1].compatible);  // 214 is above 2x

  REQUIRE(rep.nk.size() == 2);
  CHECK(rep.nk[0].m == 10);
  CHECK(rep.nk[0].measured == doctest::Approx(1.4));
  CHECK(rep.nk[0].expected == doctest::Approx(100.0 / 70.0));
  CHECK(rep.nk[0].compatible);
  CHECK(rep.nk[1].m == 100);
  CHECK(!rep.nk[1].compatible);

  REQUIRE(rep.scans.size() == 5);
  int bad = 0;
  for (const auto& c : rep.scans) bad += !c.within;
  CHECK(bad == 1);  // only the 3RootN row breaks its bound

  REQUIRE(rep.absent.size() == 2);
  CHECK(rep.absent[0].find("3RootN") != std::string::npos);
  CHECK(rep.absent[1].find("baseline") != std::string::npos);

  std::string text = rep.text();
  CHECK(text.find(" NO") != std::string::npos);
  CHECK(text.find("absent:") != std::string::npos);
}
