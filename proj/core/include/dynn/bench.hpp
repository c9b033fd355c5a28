#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dynn {

// Timing harness behind the CLI bench subcommand. For every (punctures,
// range) cell it draws the sample laminations up front, runs 10 discarded
// warm-up counts, then times count_components alone (steady_clock, no I/O,
// no parsing, no trace).
struct BenchConfig {
  std::vector<int> punctures;
  std::vector<std::int64_t> ranges;
  int samples = 100;
  std::uint64_t seed = 0;
};

struct BenchCell {
  int punctures;
  std::int64_t range;
  int samples;
  double mean_s;
  double median_s;
  double max_s;
  std::uint64_t total_moves;
  int max_int_bits;  // bit length of the largest |coordinate| seen
};

struct BenchReport {
  std::vector<BenchCell> cells;
};

BenchReport run_bench(const BenchConfig& config);

// Machine-readable form, one row per cell:
// n,range,samples,mean_s,median_s,max_s,total_moves,max_int_bits
std::string to_csv(const BenchReport& report);

// Aligned human-readable table.
std::string to_table(const BenchReport& report);

}  // namespace dynn
