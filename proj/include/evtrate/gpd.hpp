// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "evtrate/random.hpp"

namespace evtrate {

/// Shapes with magnitude below this use the exponential (xi -> 0) limit.
inline constexpr double kShapeZeroSwitch = 1e-6;

inline bool is_exponential_shape(double shape) {
  return shape < kShapeZeroSwitch && shape > -kShapeZeroSwitch;
}

/// Generalized Pareto model of the lower tail of a power process.
///
/// Exceedances are measured downward from the threshold, y = threshold - x,
/// for samples x below it. With shape < 0 the exceedance support is bounded by
/// scale / |shape|, which places a hard floor under the received power.
struct GpdParams {
  double scale = 1.0;      // linear power units, > 0
  double shape = 0.0;      // dimensionless
  double threshold = 0.0;  // linear power units

  /// Throws Error{parameter} when scale is not a positive finite number.
  void validate() const;

  /// Largest admissible exceedance (+inf unless shape < 0).
  double exceedance_endpoint() const;

  /// Lowest power the model can produce: threshold - exceedance_endpoint().
  double power_floor() const { return threshold - exceedance_endpoint(); }

  friend bool operator==(const GpdParams&, const GpdParams&) = default;
};

/// P(Y <= y) for an exceedance y >= 0.
double gpd_cdf(double y, const GpdParams& params);

/// P(Y > y), evaluated without cancellation in the far tail.
double gpd_survival(double y, const GpdParams& params);

/// Inverse of gpd_cdf on (0, 1).
double gpd_exceedance_quantile(double p, const GpdParams& params);

/// Exceedance y whose survival probability is p, p in (0, 1].
double gpd_survival_quantile(double p, const GpdParams& params);

/// Power level x below which a fraction p of tail samples fall:
/// threshold + (scale/shape)(1 - p^-shape). p = 1 gives the threshold.
double gpd_quantile(double p, const GpdParams& params);

/// Log-likelihood of the exceedances under GPD(scale, shape).
double gpd_loglik(std::span<const double> y, double scale, double shape);

/// `count` exceedances by inverse-CDF transform of uniforms from `rng`.
std::vector<double> gpd_sample(std::size_t count, const GpdParams& params, Rng& rng);
std::vector<double> gpd_sample(std::size_t count, const GpdParams& params,
                               std::uint64_t seed);

}  // namespace evtrate
