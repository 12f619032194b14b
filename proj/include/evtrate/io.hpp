// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "evtrate/experiment.hpp"
#include "evtrate/fitting.hpp"
#include "evtrate/power.hpp"
#include "evtrate/rate.hpp"
#include "evtrate/simulate.hpp"
#include "evtrate/trace.hpp"

namespace evtrate {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Trace files: one power value per row, optional second column with a
// timestamp in seconds, '#' starts a comment line. Comma, tab or spaces
// separate columns.

PowerTrace parse_trace(std::istream& in, PowerUnit unit, const std::string& source = "<stream>");

/// Reads and converts a trace file to linear units. When `log` is given the
/// sample count and range are reported there.
PowerTrace ingest(const std::filesystem::path& path, PowerUnit unit, std::ostream* log = nullptr);

/// Writes values (and timestamps when the trace has a sample period) with
/// shortest round-trip formatting.
void write_trace(const std::filesystem::path& path, const PowerTrace& trace,
                 PowerUnit unit = PowerUnit::linear);

/// Shortest decimal that reads back to the same double; "nan"/"inf" otherwise.
std::string format_double(double v);

std::string sha256_hex(std::string_view bytes);
std::string file_sha256(const std::filesystem::path& path);
/// Digest of a sample sequence over its canonical text form.
std::string samples_digest(std::span<const double> samples);

// ---------------------------------------------------------------------------
// Model files

inline constexpr int kModelFormatVersion = 1;

struct ModelFile {
  int version = kModelFormatVersion;
  std::variant<GpdModel, RayleighModel> model;
  std::string created_by;
  std::string source_digest;
  std::vector<std::string> warnings;  // filled by load_model
};

void save_model(const ModelFile& file, const std::filesystem::path& path);

/// Throws Error{version} for unknown format versions and Error{io} for
/// unreadable or corrupt files. A payload digest that no longer matches the
/// content is reported as a warning.
ModelFile load_model(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// JSON views of the domain types

Json to_json(const GpdParams& p);
GpdParams gpd_params_from_json(const Json& j);
Json to_json(const GpdModel& m);
GpdModel gpd_model_from_json(const Json& j);
Json to_json(const RatePlan& plan);
RatePlan rate_plan_from_json(const Json& j);
Json to_json(const ValidationReport& r);
Json to_json(const ThresholdScan& scan);
Json to_json(const ChannelSpec& spec);
ChannelSpec channel_spec_from_json(const Json& j);
Json to_json(const ExperimentConfig& config);
Json to_json(const ExperimentBundle& bundle);

/// Parses an experiment config; relative paths resolve against `base_dir`.
ExperimentConfig experiment_config_from_json(const Json& j,
                                             const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

Json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const Json& j);
void write_text(const std::filesystem::path& path, std::string_view text);

// ---------------------------------------------------------------------------
// Bundle output

/// Plot data kinds accepted by emit_plot_data.
std::span<const std::string_view> plot_kinds();

/// Writes one delimited file per curve of `kind` under `dir` from a bundle
/// document (as produced by to_json(ExperimentBundle)). Returns the paths.
std::vector<std::filesystem::path> emit_plot_data(const Json& bundle, std::string_view kind,
                                                  const std::filesystem::path& dir);

/// Writes every artifact of the bundle under `dir` followed by manifest.json.
void write_bundle(const ExperimentBundle& bundle, const ExperimentConfig& config,
                  const std::filesystem::path& dir);

/// Lists every file under `dir` (except the manifest) with its size and
/// SHA-256, sorted by relative path, and writes it to dir/manifest.json.
Json write_manifest(const std::filesystem::path& dir);

}  // namespace evtrate
