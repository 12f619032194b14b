// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "evtrate/fitting.hpp"
#include "evtrate/power.hpp"
#include "evtrate/rate.hpp"
#include "evtrate/simulate.hpp"

namespace evtrate {

struct SegmentationConfig {
  std::size_t block_len = 1000;
  double floor = 0.0;  // linear
  int group = 1;       // group analysed
};

struct ThresholdConfig {
  ThresholdPolicy policy = AutoThreshold{};
  std::vector<double> candidates;  // explicit scan grid (linear); empty = automatic
  std::size_t candidate_count = 30;
  double max_tail_fraction = 0.2;
};

struct MonteCarloConfig {
  std::optional<std::size_t> test_samples;  // default: default_trials(eps)
  std::size_t bootstrap_replicas = 200;     // 0 disables the bootstrap
  std::optional<std::size_t> bootstrap_size;
  bool with_replacement = false;
};

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::optional<std::filesystem::path> trace_path;
  PowerUnit unit = PowerUnit::linear;
  std::optional<ChannelSpec> generator;
  std::size_t count = 0;  // generated record length
  std::optional<SegmentationConfig> segmentation;
  std::optional<std::size_t> run_length = kDefaultRunLength;
  ThresholdConfig threshold;
  std::vector<double> reliability_thresholds;  // extra thresholds (linear)
  std::size_t k_min = kDefaultMinTail;
  std::vector<double> eps = {1e-3};
  std::vector<RateMethod> methods = {RateMethod::gpd, RateMethod::rayleigh_extrapolated,
                                     RateMethod::rayleigh_mismatch};
  std::optional<std::size_t> training_size;
  std::size_t rayleigh_fit_size = 1000;
  MonteCarloConfig monte_carlo;
  std::vector<std::size_t> sweep_grid;
  std::optional<std::filesystem::path> output_dir;
  bool write_traces = true;

  /// Throws Error{config} when a field is out of range or inputs conflict.
  void validate() const;
};

struct PlanResult {
  double eps = 0.0;
  double threshold = 0.0;
  RatePlan plan;
  ValidationReport report;
};

struct SweepCurve {
  double eps = 0.0;
  RateMethod method = RateMethod::gpd;
  std::vector<SweepPoint> points;
};

struct BootstrapEntry {
  double eps = 0.0;
  BootstrapResult result;
};

struct ExperimentBundle {
  std::size_t record_count = 0;   // samples in the analysed record
  std::size_t training_count = 0;
  std::string record_digest;
  std::vector<double> record;     // analysed samples (after group selection)
  std::vector<int> record_groups; // labels of the full record when segmented
  std::vector<double> exceedances;
  std::optional<ThresholdScan> scan;
  double threshold = 0.0;
  GpdModel reference_model;
  GpdModel training_model;
  std::optional<RayleighModel> rayleigh_extrapolated;
  std::optional<RayleighModel> rayleigh_mismatch;
  std::vector<PlanResult> results;
  std::vector<BootstrapEntry> bootstrap;
  std::vector<SweepCurve> sweeps;
};

/// segment -> decluster -> threshold scan -> fit -> rate (all configured
/// methods) -> validate -> bootstrap -> sweep. Writes the bundle and a
/// manifest when the config names an output directory. Stage failures are
/// rethrown as StageError.
ExperimentBundle run_experiment(const ExperimentConfig& config);

}  // namespace evtrate
