// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

namespace evtrate {

enum class PowerUnit { linear, dbm };

PowerUnit parse_unit(std::string_view name);
std::string_view to_string(PowerUnit unit);

struct PowerValue {
  double value = 0.0;
  PowerUnit unit = PowerUnit::linear;
};

/// Converts between linear power and dBm. `offset_db` shifts the reference
/// level: with the default 0 dB a reading of 0 dBm maps to 1.0 linear.
PowerValue convert_power(PowerValue v, PowerUnit target, double offset_db = 0.0);

inline double dbm_to_linear(double dbm) {
  return convert_power({dbm, PowerUnit::dbm}, PowerUnit::linear).value;
}

inline double linear_to_dbm(double linear) {
  return convert_power({linear, PowerUnit::linear}, PowerUnit::dbm).value;
}

}  // namespace evtrate
