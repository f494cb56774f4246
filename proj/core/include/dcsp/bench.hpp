#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dcsp/ga.hpp"
#include "dcsp/generate.hpp"

namespace dcsp {

/// One GA run of the benchmark harness.
struct RunRecord {
  std::string instance_id;
  int n = 0;
  int l_a = 0;
  int l_x = 0;
  int l_y = 0;
  double s = 0.0;
  std::uint64_t seed = 0;
  bool success = false;
  int generations = 0;
  std::int64_t time_ms = 0;
  int final_cost = 0;

  bool operator==(const RunRecord&) const = default;
};

/// Header row is mandatory; '#' metadata lines precede it. Reading back the
/// emitted CSV reproduces the records exactly.
void write_csv(std::ostream& out, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_csv(std::istream& in);

enum class Grouping { by_instance, by_s_interval };

/// Aggregates over the successful runs of a group; the s intervals are
/// half-open [lo, lo + 15).
struct SummaryStats {
  std::string key;
  int runs = 0;
  int successes = 0;
  double mean_g = 0.0;
  double mean_t = 0.0;      // seconds
  double stddev_g = 0.0;    // sample (n-1) convention; 0 for a single run
  double sec_per_gen = 0.0;
};

std::vector<SummaryStats> summarize(const std::vector<RunRecord>& records,
                                    Grouping grouping);
void write_summary(std::ostream& out, const std::vector<SummaryStats>& stats);

/// One `instance` line of a bench config: a fixed instance file, or a
/// generation recipe producing `count` instances; each instance is run
/// `repeat` times with derived seeds.
struct BenchLine {
  std::optional<std::string> file;
  InstanceSpec gen;
  int count = 1;
  int repeat = 1;
  std::uint64_t seed = 0;
};

/// Line-oriented suite file, '#' comments allowed:
///   pop 200
///   params 5,33,4,128,30,0
///   sigma 2000
///   init-len 1
///   group instance            # or: group s
///   instance file=inst.txt repeat=10 seed=7
///   instance rank=10 la=128 lx=16 ly=16 count=3 repeat=10 seed=42
struct BenchConfig {
  ParameterSet params;
  GaConfig ga;
  Grouping grouping = Grouping::by_instance;
  std::vector<BenchLine> lines;
};

BenchConfig parse_bench_config(std::istream& in);
BenchConfig load_bench_config(const std::string& path);

/// Runs the whole suite, `jobs` runs at a time, and returns the records
/// sorted by (instance_id, seed) so output order is deterministic.
std::vector<RunRecord> run_bench(const BenchConfig& config, int jobs = 1);

/// Deterministic seed derivation for instance/run fan-out.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace dcsp
