#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "icar/types.hpp"
#include "icar/world.hpp"

namespace icar {

// Per-run accuracy and safety tallies. A decision epoch is one car in one
// step; accuracy is the fraction of epochs where the car's decision matched
// the omniscient oracle on the same snapshot. An empty run (0 epochs) reports
// accuracy 1.0 by convention; consumers must check `epochs`.
struct MetricsReport {
  std::string run_id;
  std::uint64_t seed = 0;
  int car_count = 0;
  int decision_rounds = 0;
  std::int64_t steps = 0;
  std::int64_t epochs = 0;
  std::int64_t agreements = 0;
  double accuracy = 1.0;
  std::int64_t decisions_total = 0;  // non-Hold decisions
  std::vector<std::pair<std::int64_t, std::int64_t>> decisions_per_interval;
  std::int64_t collisions = 0;
  std::int64_t near_misses = 0;      // car-steps with true front gap < d_min
};

MetricsReport run_scenario(const WorldConfig& cfg, const ScenarioSpec& scenario,
                           std::int64_t steps, double interval = 1.0,
                           const std::string& run_id = "run");

// Paired seed vector shared by every grid point of a sweep.
std::vector<std::uint64_t> seed_vector(std::uint64_t base_seed, int count);

struct SweepPoint {
  std::int64_t grid_value = 0;   // rounds or car count
  std::uint64_t seed = 0;
  double accuracy = 1.0;
};

struct SweepResult {
  std::string grid_name;         // "rounds" or "cars"
  std::vector<std::uint64_t> seeds;
  std::vector<SweepPoint> points;            // grid-major, seed order within
  std::vector<std::pair<std::int64_t, double>> means;  // per grid value
};

// Fig-12-style sweep: same config and scenario at every rounds value, seeds
// paired across the grid.
SweepResult sweep_rounds(const WorldConfig& cfg, const ScenarioSpec& scenario,
                         const std::vector<int>& rounds_list, int n_seeds,
                         std::int64_t steps);

// Fig-13-style sweep: scenario regenerated per (count, seed) by uniform
// random placement respecting separation.
SweepResult sweep_cars(const WorldConfig& cfg, const std::vector<int>& counts_list,
                       int n_seeds, std::int64_t steps);

// Random placement helpers. Both are deterministic in (cfg, seed).
ScenarioSpec make_uniform_scenario(const WorldConfig& cfg, int count, std::uint64_t seed,
                                   double span, double speed_lo, double speed_hi,
                                   double min_gap);
// Same-lane gaps at least required_gap(follower speed); for safety runs.
ScenarioSpec make_safe_scenario(const WorldConfig& cfg, int count, std::uint64_t seed,
                                double speed_lo, double speed_hi);

// Non-Hold decision counts bucketed by time interval; conservation against
// MetricsReport.decisions_total holds by construction.
std::vector<std::pair<std::int64_t, std::int64_t>> decisions_timeline(
    const WorldConfig& cfg, const ScenarioSpec& scenario, std::int64_t steps,
    double interval);

// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& xs, const std::vector<double>& ys);

// CSV emitters. Every file starts with one '#' metadata line carrying the
// config hash and the seed vector, then a header row. Byte-deterministic.
std::string run_csv(const MetricsReport& report, const WorldConfig& cfg);
std::string sweep_csv(const SweepResult& result, const WorldConfig& cfg);
std::string timeline_csv(const std::vector<std::pair<std::int64_t, std::int64_t>>& buckets,
                         const WorldConfig& cfg, double interval);
void write_file(const std::string& path, const std::string& contents);

// The CLI entry point (subcommands run / sweep-rounds / sweep-cars /
// timeline). Returns the process exit code; prints a one-line diagnostic to
// stderr on input errors.
int cli_main(int argc, const char* const* argv);

}  // namespace icar
