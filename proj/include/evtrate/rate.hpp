// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evtrate/fitting.hpp"
#include "evtrate/gpd.hpp"
#include "evtrate/trace.hpp"

namespace evtrate {

enum class RateMethod { gpd, rayleigh_extrapolated, rayleigh_mismatch };

RateMethod parse_method(std::string_view name);
std::string_view to_string(RateMethod method);

/// Exponentially distributed received power (squared Rayleigh amplitude).
struct RayleighModel {
  double mean_power = 1.0;

  friend bool operator==(const RayleighModel&, const RayleighModel&) = default;
};

/// A transmission rate (bits/s per unit bandwidth) with the inputs that
/// produced it.
struct RatePlan {
  double rate = 0.0;
  double quantile = 0.0;      // power level q with rate = log2(1 + q)
  double target_eps = 0.0;    // reliability target
  double adjusted_eps = 0.0;  // level fed to the quantile
  RateMethod method = RateMethod::gpd;
  std::optional<GpdParams> model;        // estimated tail (gpd)
  std::optional<RayleighModel> rayleigh; // assumed law (Rayleigh methods)
  std::optional<GpdParams> true_params;  // tail the plan is judged against
};

/// Level at which the estimated tail must be read so that its quantile
/// matches the true tail's eps-quantile. Exponential limits apply when either
/// shape is near zero. Throws Error{quantile_unreachable} when the estimated
/// model cannot reach that quantile.
double epsilon_n(double eps, const GpdParams& est, const GpdParams& truth);

/// Outage under the true tail when the rate is chosen from `est` at level
/// eps_n. Inverse of epsilon_n in eps.
double predicted_outage(const GpdParams& est, const GpdParams& truth, double eps_n);

/// Fraction of tail samples of `truth` falling below `power_level`
/// (1 at or above the threshold, 0 below the power floor).
double tail_outage(const GpdParams& truth, double power_level);

/// rate = log2(1 + threshold + (scale/shape)(1 - eps_n^-shape)), floored at 0.
/// Throws Error{rate_undefined} when the quantile is at or below -1.
RatePlan select_rate(const GpdModel& model, double eps_n,
                     std::optional<double> target_eps = std::nullopt);

/// Mean received power of at least two positive samples.
RayleighModel fit_rayleigh(std::span<const double> samples);

/// eps-outage rate of exponential power: log2(1 + mean * ln(1 / (1 - eps))).
RatePlan rayleigh_rate(const RayleighModel& model, double eps);

/// Same rate as rayleigh_rate, tagged for evaluation against a GPD tail.
RatePlan mismatch_rate(const RayleighModel& model, double eps, const GpdParams& true_params);

struct SweepOptions {
  std::optional<std::size_t> run_len = kDefaultRunLength;
  std::size_t k_min = kDefaultMinTail;
};

struct SweepPoint {
  std::size_t n = 0;
  double rate = 0.0;
  double w = 0.0;  // rate / reference rate; NaN when the entry failed
  bool ok = false;
  std::string error;
};

/// Fits on the first n samples for every n in `n_grid` and normalizes the
/// resulting rate. GPD and extrapolated-Rayleigh rates are normalized by the
/// same method's full-trace rate; mismatch rates by the full-trace GPD rate.
std::vector<SweepPoint> normalized_rate_sweep(const PowerTrace& trace,
                                              std::span<const std::size_t> n_grid,
                                              double eps, double threshold,
                                              RateMethod method,
                                              const SweepOptions& options = {});

/// GPD fit of the first n samples at `threshold`, declustered per options.
GpdModel fit_trace_head(std::span<const double> samples, std::size_t n, double threshold,
                        const SweepOptions& options);

}  // namespace evtrate
