// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "evtrate/fitting.hpp"
#include "evtrate/gpd.hpp"
#include "evtrate/random.hpp"
#include "evtrate/rate.hpp"
#include "evtrate/trace.hpp"

namespace evtrate {

enum class ChannelKind { exponential_power, gpd_spliced, ar_correlated, two_group };

ChannelKind parse_channel_kind(std::string_view name);
std::string_view to_string(ChannelKind kind);

/// GPD lower tail grafted below the body's `tail_mass` quantile.
struct TailSplice {
  double shape = -0.3;
  double scale = 0.0;  // linear power units
  double tail_mass = 0.05;
};

/// Marginal law of received power: exponential body (mean `mean_power`),
/// optionally with a spliced GPD lower tail. The CDF is continuous at the
/// splice because the tail carries exactly the body's mass below it.
struct Marginal {
  double mean_power = 1.0;
  std::optional<TailSplice> tail;

  void validate() const;
  double splice_threshold() const;
  GpdParams tail_params() const;
  double cdf(double x) const;
  /// Inverse CDF; `upper` = 1 - p supplied separately to keep precision.
  double quantile(double p, double upper) const;
};

struct ChannelSpec {
  ChannelKind kind = ChannelKind::exponential_power;
  Marginal marginal;
  double rho = 0.0;                     // ar_correlated, in [0, 1)
  std::array<Marginal, 2> groups;       // two_group: group 1 and group 2 laws
  std::vector<std::size_t> schedule;    // two_group: alternating block lengths
  std::uint64_t seed = 0;

  /// Throws Error{config} on an inconsistent specification, including a
  /// spliced tail whose support reaches zero power.
  void validate() const;
};

/// Sequential sample source for a channel; generate() and streamed
/// validation draw identical values for the same seed.
class ChannelGenerator {
 public:
  explicit ChannelGenerator(const ChannelSpec& spec);
  ChannelGenerator(const ChannelSpec& spec, std::uint64_t seed);

  double next();
  int current_group() const { return group_; }

 private:
  double draw(const Marginal& m);

  ChannelSpec spec_;
  Rng rng_;
  double ar_state_ = 0.0;
  bool ar_started_ = false;
  std::size_t block_index_ = 0;
  std::size_t in_block_ = 0;
  int group_ = 1;
};

/// `count` samples. two_group traces carry their true group labels.
PowerTrace generate(const ChannelSpec& spec, std::size_t count);

struct WilsonInterval {
  double low = 0.0;
  double high = 1.0;
};

/// Wilson score interval for `events` successes in `trials`.
WilsonInterval wilson_interval(std::size_t events, std::size_t trials, double z = 1.959963984540054);

struct ValidationReport {
  double target_eps = 0.0;
  std::size_t trials = 0;
  std::size_t outages = 0;
  double empirical_outage = 0.0;
  WilsonInterval wilson_ci;
  double predicted_outage = 0.0;  // plug-in, NaN when no reference tail
  double bootstrap_outage = 0.0;  // NaN unless a bootstrap was run
  bool pass = false;              // wilson_ci.high <= target_eps
};

/// True when log2(1 + z) falls short of the plan's rate.
bool is_outage(const RatePlan& plan, double z);

/// Plug-in outage of a plan under its reference law: the GPD truth for
/// gpd/mismatch plans, the assumed exponential law for extrapolated plans.
double plan_predicted_outage(const RatePlan& plan);

ValidationReport finalize_report(const RatePlan& plan, std::size_t outages, std::size_t trials);

/// Counts test samples in outage against the plan.
ValidationReport empirical_outage(const RatePlan& plan, std::span<const double> test);

/// Streams `trials` fresh samples from the channel without materializing them.
ValidationReport empirical_outage(const RatePlan& plan, const ChannelSpec& channel,
                                  std::size_t trials, std::uint64_t seed);

/// Default Monte Carlo size: enough trials to expect 100 outages at eps.
std::size_t default_trials(double eps);

struct BootstrapOptions {
  std::optional<std::size_t> run_len = kDefaultRunLength;
  std::size_t k_min = kDefaultMinTail;
  bool with_replacement = false;
  std::uint64_t seed = 0;
};

struct BootstrapResult {
  double mean_outage = 0.0;  // replicas at their own adjusted level
  double std_error = 0.0;
  double eps_n = 0.0;            // smallest replica level
  double shared_mean = 0.0;      // every replica read at eps_n
  double unadjusted_mean = 0.0;  // replicas read at eps directly
  std::size_t replicas = 0;
  std::size_t failed = 0;
  GpdParams reference;
  std::vector<double> outages;         // per successful replica
  std::vector<double> shared_outages;  // same replicas at the shared level
};

/// Average outage over B training realizations. Each replica draws n samples
/// (order preserved), refits, computes its own eps_n against the full-trace
/// fit and the outage that level produces under that fit. The smallest
/// replica level is also applied to every replica as a single deployable
/// setting, and the unadjusted level eps shows what ignoring estimation error
/// costs.
BootstrapResult bootstrap_outage(std::span<const double> trace, double threshold, double eps,
                                 std::size_t replicas, std::size_t training_size,
                                 const BootstrapOptions& options = {});

}  // namespace evtrate
