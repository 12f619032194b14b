// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "evtrate/gpd.hpp"
#include "evtrate/trace.hpp"

namespace evtrate {

inline constexpr std::size_t kDefaultMinTail = 50;
inline constexpr std::size_t kDefaultRunLength = 10;

// ---------------------------------------------------------------------------
// Segmentation and declustering

/// Labels consecutive blocks of `block_len` samples as group 1 when every
/// sample exceeds `floor`, otherwise group 2. A trailing partial block is
/// always group 2.
PowerTrace segment_groups(const PowerTrace& trace, std::size_t block_len, double floor);

/// Runs declustering of the lower tail. Samples below `threshold` that are
/// separated by fewer than `run_len` samples at or above it share a cluster;
/// each cluster contributes threshold - min(cluster), in cluster order.
std::vector<double> decluster(std::span<const double> samples, double threshold,
                              std::size_t run_len);

/// Exceedances threshold - x for every sample x below the threshold.
std::vector<double> raw_exceedances(std::span<const double> samples, double threshold);

// ---------------------------------------------------------------------------
// Maximum likelihood

/// Profile equation whose nonzero roots give the GPD likelihood stationary
/// points through theta = shape / scale. Zero at theta = 0 for any sample.
double psi(double theta, std::span<const double> y);

/// Nonzero roots of psi located by a sign-change scan and refined to
/// |psi| <= 1e-10. Roots implying shape <= -0.999 (endpoint pinned to the
/// sample maximum, next to the shape <= -1 region without a likelihood
/// maximum) are dropped.
std::vector<double> psi_roots(std::span<const double> y);

struct GofData {
  std::vector<std::pair<double, double>> pp;  // (plotting position, model CDF)
  std::vector<std::pair<double, double>> qq;  // (model quantile, empirical)
};

struct GpdModel {
  GpdParams params;
  std::size_t tail_count = 0;
  std::size_t total_count = 0;
  double loglik = 0.0;
  double theta_hat = 0.0;
  bool shape_zero = false;  // exponential solution selected
  double scale_se = 0.0;    // observed-information standard errors; NaN when
  double shape_se = 0.0;    // the Hessian is not negative definite
  GofData gof;

  /// Field-wise equality; NaN standard errors compare equal to each other.
  friend bool operator==(const GpdModel&, const GpdModel&);
};

struct FitOptions {
  std::size_t k_min = kDefaultMinTail;
  bool with_gof = false;
};

/// Fits GPD(scale, shape) to exceedances by maximum likelihood. Candidates are
/// the roots of psi plus the exponential solution; the one with the highest
/// log-likelihood wins. `total_count` records how many samples the tail was
/// drawn from (defaults to the tail size).
GpdModel fit_gpd_mle(std::span<const double> y, double threshold,
                     const FitOptions& options = {},
                     std::optional<std::size_t> total_count = std::nullopt);

/// Standard errors of (scale, shape) from the inverse observed information,
/// with the Hessian taken by central differences. NaN entries when the
/// information matrix is not positive definite.
std::pair<double, double> gpd_standard_errors(std::span<const double> y, double scale,
                                              double shape);

GofData gof_data(const GpdModel& model, std::span<const double> y);

// ---------------------------------------------------------------------------
// Threshold diagnostics

enum class EntryStatus { ok, empty, failed };

struct ThresholdScan {
  std::vector<double> thresholds;  // strictly increasing
  std::vector<std::size_t> tail_count;
  std::vector<double> mean_excess;
  std::vector<EntryStatus> mrl_status;
  std::vector<double> refit_scale;  // scale + shape * threshold
  std::vector<double> refit_shape;
  std::vector<double> shape_ci_halfwidth;  // 95 %
  std::vector<EntryStatus> fit_status;

  std::size_t size() const { return thresholds.size(); }
};

struct ScanOptions {
  std::size_t k_min = kDefaultMinTail;
  // Decluster at each candidate before fitting; nullopt treats every sample
  // below the threshold as an independent exceedance.
  std::optional<std::size_t> run_len;
};

ThresholdScan mrl_scan(std::span<const double> samples, std::span<const double> thresholds,
                       const ScanOptions& options = {});

/// Refits the GPD at every candidate. Throws Error{input} when a candidate
/// leaves fewer than k_min exceedances; failed fits are flagged, not thrown.
ThresholdScan stability_scan(std::span<const double> samples,
                             std::span<const double> thresholds,
                             const ScanOptions& options = {});

/// mrl_scan and stability_scan over the same candidates.
ThresholdScan threshold_scan(std::span<const double> samples,
                             std::span<const double> thresholds,
                             const ScanOptions& options = {});

/// `count` candidate thresholds at empirical quantiles whose tail fractions
/// are log-spaced between the k_min-th order statistic and `max_fraction`.
std::vector<double> candidate_thresholds(std::span<const double> samples,
                                         std::size_t count, std::size_t k_min,
                                         double max_fraction = 0.2);

struct ManualThreshold {
  double value;
};

struct AutoThreshold {
  std::size_t k_min = kDefaultMinTail;
  double mrl_tolerance = 0.05;
};

using ThresholdPolicy = std::variant<AutoThreshold, ManualThreshold>;

/// Manual policy returns its value. The automatic policy returns the highest
/// candidate u such that, over every valid candidate at or below u, the mean
/// excess is linear within tolerance and each deeper shape estimate's 95 %
/// band contains the shape fitted at u.
double select_threshold(const ThresholdScan& scan, const ThresholdPolicy& policy);

}  // namespace evtrate
