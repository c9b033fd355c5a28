#include "dynn/bench.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>

#include "dynn/random.hpp"
#include "dynn/reduction.hpp"

namespace dynn {

namespace {

constexpr int kWarmup = 10;

double seconds_format_guard(double v) { return v < 0 ? 0.0 : v; }

std::string format_seconds(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9f", seconds_format_guard(v));
  return buf;
}

BenchCell run_cell(int punctures, std::int64_t range, int samples,
                   std::uint64_t seed) {
  Sampler sampler(mix_seed(seed, static_cast<std::uint64_t>(punctures),
                           static_cast<std::uint64_t>(range)));
  std::vector<DynnikovCoordinates> warm;
  warm.reserve(kWarmup);
  for (int k = 0; k < kWarmup; ++k)
    warm.push_back(sampler.lamination(punctures, range));
  std::vector<DynnikovCoordinates> corpus;
  corpus.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k)
    corpus.push_back(sampler.lamination(punctures, range));

  for (const DynnikovCoordinates& c : warm) count_components(c);

  std::vector<double> times;
  times.reserve(corpus.size());
  std::uint64_t total_moves = 0;
  std::int64_t max_entry = 0;
  for (const DynnikovCoordinates& c : corpus) {
    const auto start = std::chrono::steady_clock::now();
    const CountResult r = count_components(c);
    const auto stop = std::chrono::steady_clock::now();
    times.push_back(std::chrono::duration<double>(stop - start).count());
    total_moves += r.stats.moves;
    max_entry = std::max(max_entry, r.stats.max_entry);
  }

  BenchCell cell;
  cell.punctures = punctures;
  cell.range = range;
  cell.samples = samples;
  double sum = 0;
  double worst = 0;
  for (double t : times) {
    sum += t;
    worst = std::max(worst, t);
  }
  cell.mean_s = sum / static_cast<double>(times.size());
  cell.max_s = worst;
  std::vector<double> sorted = times;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  cell.median_s = sorted.size() % 2 == 1
                      ? sorted[mid]
                      : (sorted[mid - 1] + sorted[mid]) / 2;
  cell.total_moves = total_moves;
  cell.max_int_bits =
      std::bit_width(static_cast<std::uint64_t>(max_entry));
  return cell;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  if (config.samples < 1)
    throw InputError("bench needs at least one sample per cell");
  if (config.punctures.empty() || config.ranges.empty())
    throw InputError("bench needs at least one puncture count and one range");
  for (int n : config.punctures)
    if (n < 3) throw InputError("bench puncture counts must be >= 3");
  for (std::int64_t r : config.ranges)
    if (r < 1) throw InputError("bench ranges must be >= 1");

  BenchReport report;
  for (int n : config.punctures)
    for (std::int64_t r : config.ranges)
      report.cells.push_back(run_cell(n, r, config.samples, config.seed));
  return report;
}

std::string to_csv(const BenchReport& report) {
  std::string out = "n,range,samples,mean_s,median_s,max_s,total_moves,max_int_bits\n";
  for (const BenchCell& c : report.cells) {
    out += std::to_string(c.punctures) + "," + std::to_string(c.range) + "," +
           std::to_string(c.samples) + "," + format_seconds(c.mean_s) + "," +
           format_seconds(c.median_s) + "," + format_seconds(c.max_s) + "," +
           std::to_string(c.total_moves) + "," +
           std::to_string(c.max_int_bits) + "\n";
  }
  return out;
}

std::string to_table(const BenchReport& report) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%6s %9s %8s %13s %13s %13s %12s %9s\n", "n",
                "range", "samples", "mean_s", "median_s", "max_s", "moves",
                "max_bits");
  out += buf;
  for (const BenchCell& c : report.cells) {
    std::snprintf(buf, sizeof(buf),
                  "%6d %9lld %8d %13.9f %13.9f %13.9f %12llu %9d\n",
                  c.punctures, static_cast<long long>(c.range), c.samples,
                  c.mean_s, c.median_s, c.max_s,
                  static_cast<unsigned long long>(c.total_moves),
                  c.max_int_bits);
    out += buf;
  }
  return out;
}

}  // namespace dynn
