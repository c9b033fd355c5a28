#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynn/bench.hpp"
#include "dynn/braid.hpp"
#include "dynn/coords.hpp"
#include "dynn/random.hpp"
#include "dynn/reduction.hpp"
#include "dynn/tracer.hpp"

namespace {

// Coordinates come either from the single argument or one vector per line on
// standard input; blank lines are skipped.
std::vector<std::string> coordinate_lines(const std::string& arg) {
  if (!arg.empty()) return {arg};
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  if (lines.empty())
    throw dynn::InputError("no coordinates given (argument or stdin)");
  return lines;
}

int cmd_count(const std::string& arg, bool trace) {
  for (const std::string& line : coordinate_lines(arg)) {
    const dynn::CountResult res =
        dynn::count_components(dynn::DynnikovCoordinates::parse(line), trace);
    if (trace) std::cout << dynn::to_text(*res.trace);
    std::cout << res.count << "\n";
  }
  return 0;
}

int cmd_oracle_count(const std::string& arg, bool dump) {
  for (const std::string& line : coordinate_lines(arg)) {
    const dynn::DynnikovCoordinates c = dynn::DynnikovCoordinates::parse(line);
    if (dump) {
      const dynn::CurveDiagram diagram = dynn::build_matchings(
          dynn::region_profiles(c), dynn::beta_numbers(c));
      std::cout << diagram.dump();
      std::cout << diagram.cycle_count() << "\n";
    } else {
      std::cout << dynn::oracle_count(c) << "\n";
    }
  }
  return 0;
}

int cmd_apply(const std::string& coords_arg, const std::string& word_arg) {
  const dynn::BraidWord word = dynn::parse_word(word_arg);
  for (const std::string& line : coordinate_lines(coords_arg)) {
    const dynn::DynnikovCoordinates c = dynn::DynnikovCoordinates::parse(line);
    std::cout << dynn::apply_word(c, word).to_text() << "\n";
  }
  return 0;
}

void print_joined(const char* label, const std::vector<std::int64_t>& v) {
  std::cout << label;
  for (std::size_t i = 0; i < v.size(); ++i)
    std::cout << (i ? "," : "") << v[i];
  std::cout << "\n";
}

int cmd_reconstruct(const std::string& arg) {
  for (const std::string& line : coordinate_lines(arg)) {
    const dynn::IntersectionNumbers numbers =
        dynn::intersection_numbers(dynn::DynnikovCoordinates::parse(line));
    print_joined("beta: ", numbers.beta);
    print_joined("alpha: ", numbers.alpha);
  }
  return 0;
}

int cmd_random(int punctures, std::int64_t range, int samples,
               std::uint64_t seed) {
  if (punctures < 3) throw dynn::InputError("--n must be >= 3");
  if (range < 1) throw dynn::InputError("--range must be >= 1");
  if (samples < 1) throw dynn::InputError("--samples must be >= 1");
  dynn::Sampler sampler(seed);
  for (int k = 0; k < samples; ++k)
    std::cout << sampler.lamination(punctures, range).to_text() << "\n";
  return 0;
}

int cmd_bench(const dynn::BenchConfig& config, const std::string& csv_path) {
  const dynn::BenchReport report = dynn::run_bench(config);
  std::cout << dynn::to_table(report);
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw dynn::InputError("cannot open CSV path " + csv_path);
    out << dynn::to_csv(report);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for integral laminations of the punctured disk in "
               "Dynnikov coordinates"};
  app.require_subcommand(1);

  std::string count_coords;
  bool count_trace = false;
  CLI::App* count = app.add_subcommand(
      "count", "Count the components of a lamination");
  count->add_option("coords", count_coords,
                    "coordinates a_1,..,a_k;b_1,..,b_k (default: stdin lines)");
  count->add_flag("--trace", count_trace, "print every reduction step");

  std::string oracle_coords;
  bool oracle_dump = false;
  CLI::App* oracle = app.add_subcommand(
      "oracle-count", "Count components by tracing the curve diagram");
  oracle->add_option("coords", oracle_coords,
                     "coordinates (default: stdin lines)");
  oracle->add_flag("--dump-diagram", oracle_dump,
                   "print the per-region matchings before the count");

  std::string apply_coords, apply_word;
  CLI::App* apply = app.add_subcommand(
      "apply", "Apply a braid word to coordinates");
  apply->add_option("coords", apply_coords, "coordinates")->required();
  apply->add_option("word", apply_word,
                    "braid word, signed generator indices (\"1 -2 1\"); when "
                    "omitted, the first argument is the word and coordinates "
                    "are read from stdin");

  std::string rec_coords;
  CLI::App* reconstruct = app.add_subcommand(
      "reconstruct", "Print the arc crossing numbers beta and alpha");
  reconstruct->add_option("coords", rec_coords,
                          "coordinates (default: stdin lines)");

  int random_n = 0;
  std::int64_t random_range = 0;
  int random_samples = 1;
  std::uint64_t random_seed = 0;
  CLI::App* random = app.add_subcommand(
      "random", "Draw uniform random coordinate vectors");
  random->add_option("--n", random_n, "number of punctures")->required();
  random->add_option("--range", random_range, "entries drawn from [-range, range]")
      ->required();
  random->add_option("--samples", random_samples, "vectors to draw (default 1)");
  random->add_option("--seed", random_seed, "RNG seed (default 0)");

  dynn::BenchConfig bench_config;
  std::string bench_csv;
  CLI::App* bench = app.add_subcommand(
      "bench", "Time component counting on random laminations");
  bench->add_option("--n", bench_config.punctures,
                    "puncture counts (repeatable; default 10 100)");
  bench->add_option("--range", bench_config.ranges,
                    "entry ranges (repeatable; default 10 1000)");
  bench->add_option("--samples", bench_config.samples,
                    "timed laminations per cell (default 100)");
  bench->add_option("--seed", bench_config.seed, "RNG seed (default 0)");
  bench->add_option("--csv", bench_csv, "write machine-readable results here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*count) return cmd_count(count_coords, count_trace);
    if (*oracle) return cmd_oracle_count(oracle_coords, oracle_dump);
    if (*apply) {
      if (apply->count("word") > 0) return cmd_apply(apply_coords, apply_word);
      return cmd_apply("", apply_coords);
    }
    if (*reconstruct) return cmd_reconstruct(rec_coords);
    if (*random)
      return cmd_random(random_n, random_range, random_samples, random_seed);
    if (*bench) {
      if (bench_config.punctures.empty()) bench_config.punctures = {10, 100};
      if (bench_config.ranges.empty()) bench_config.ranges = {10, 1000};
      return cmd_bench(bench_config, bench_csv);
    }
  } catch (const dynn::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dynn::Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
