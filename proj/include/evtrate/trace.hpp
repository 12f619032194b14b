// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

namespace evtrate {

/// Ordered received-power record in linear units.
struct PowerTrace {
  std::vector<double> samples;
  std::optional<double> sample_period;  // seconds
  std::vector<int> group_id;            // empty, or one label per sample

  std::size_t size() const { return samples.size(); }
  bool labeled() const { return !group_id.empty(); }

  /// Throws Error{input} when a sample is not positive or the labels do not
  /// cover the samples one-to-one.
  void validate() const;

  /// Samples carrying `group`, concatenated in trace order.
  std::vector<double> group_samples(int group) const;

  /// First `n` samples, labels included.
  PowerTrace head(std::size_t n) const;
};

}  // namespace evtrate
