// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace evtrate {

/// Machine-readable failure categories. Every error raised by the library
/// carries one of these so that the CLI can map it to an exit status.
enum class ErrorCode {
  input,                 // malformed or insufficient input data
  domain,                // argument outside the mathematical domain
  parameter,             // invalid distribution parameters
  degenerate,            // zero-variance or otherwise unusable sample
  quantile_unreachable,  // target probability not attainable under a model
  rate_undefined,        // quantile at or below -1 (no valid rate)
  no_threshold,          // automatic threshold policy found no candidate
  config,                // invalid configuration
  io,                    // file missing, unreadable or unwritable
  version,               // unknown model-file format version
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Error raised by run_experiment; names the pipeline stage that failed.
class StageError : public Error {
 public:
  StageError(std::string stage, const Error& cause)
      : Error(cause.code(), stage + ": " + cause.what()),
        stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace evtrate
