#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scartest/labeling.hpp"
#include "scartest/scar_test.hpp"
#include "scartest/synthetic.hpp"

namespace scartest {

enum class GeneratorKind { kArt1, kArt2, kCsvOracle };

const char* generator_name(GeneratorKind kind);
GeneratorKind parse_generator(const std::string& name);

/// Labeling strategy requested for an experiment; beta/a are recalibrated on
/// every replication's data, so only the shape parameters live here.
struct StrategySpec {
  StrategyKind kind = StrategyKind::kS0;
  double c = 0.5;
  double g = 0.0;
};

/**
 * One rejection-probability experiment: `reps` independent replications of
 * (generate oracle data, apply labeling, run the test), estimating
 * P(reject). The per-replication seed is hash(master_seed, cell key, rep),
 * where the cell key covers every result-affecting field below; adding or
 * reordering cells in a grid therefore never changes existing cells.
 */
struct ExperimentConfig {
  GeneratorKind generator = GeneratorKind::kArt1;
  std::string csv_path;       // kCsvOracle: file with features and a y column
  std::string y_column = "y";
  std::size_t n = 1000;       // synthetic generators only
  std::size_t d = 2;
  double gen_prior = 0.5;     // class prior of the synthetic generators
  double shift = 1.0;         // positive-class mean shift of art1/art2
  StrategySpec strategy;
  int B = 300;
  double alpha = 0.05;
  /// Prior handed to the test: the data-generating prior scaled by
  /// prior_multiplier, or supplied_prior when set (CSV data, sweeps).
  double prior_multiplier = 1.0;
  std::optional<double> supplied_prior;
  int reps = 100;
  std::uint64_t master_seed = 1;
  ForestParams forest;
  PValueRule p_rule = PValueRule::kDirect;
  KlQuadratic kl_quad = KlQuadratic::kSample1;
  int threads = 0;            // 0 = hardware concurrency
  int max_labeling_retries = 100;

  /// Canonical text key of the (config, statistic) cell; seeds and the grid
  /// CSV echo derive from it.
  std::string cell_key(StatisticKind kind) const;
  double test_prior() const;
};

struct RejectionEstimate {
  StatisticKind kind = StatisticKind::kKs;
  double probability = 0.0;
  double se = 0.0;
  int reps = 0;
  int labeling_retries = 0;  // total across replications
  int failed_reps = 0;       // replications that errored (excluded)
  double wall_seconds = 0.0;
  ExperimentConfig config;
  std::string error;         // nonempty when the whole cell failed
};

/// Runs the replications for one statistic. Deterministic for a fixed
/// master seed, independent of thread count.
RejectionEstimate estimate_rejection(const ExperimentConfig& cfg,
                                     StatisticKind kind);

/**
 * Evaluates every (config x statistic) cell, emitting long-format CSV rows
 *   generator,strategy,g,c,n,statistic,probability,se
 * (plus wall_s when with_timings; timings are excluded by default so that
 * identical runs produce identical bytes). Per-cell failures are recorded in
 * the estimate and the grid continues. Progress goes to `progress` if given.
 */
std::vector<RejectionEstimate> run_grid(
    const std::vector<std::pair<ExperimentConfig, StatisticKind>>& cells,
    std::ostream* progress = nullptr);

std::string grid_to_csv(const std::vector<RejectionEstimate>& rows,
                        bool with_timings = false);

/**
 * Reruns the experiment with the test prior scaled by each multiplier.
 * Multipliers that push the prior out of (0, 1) are skipped with a reason
 * recorded in the estimate's error field.
 */
std::vector<RejectionEstimate> prior_misspecification_sweep(
    const ExperimentConfig& cfg, StatisticKind kind,
    std::span<const double> multipliers);

}  // namespace scartest
