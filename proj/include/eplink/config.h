#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "eplink/sweep.h"

namespace eplink {

/// Applies one `key = value` setting. Keys mirror the long command-line
/// flags with '-' replaced by '_' (alpha, delta_nu, d_pmd, regime, p_inf, L,
/// p_dc, d_min, d_max, points, log_scale, clock_hz, seed, trials, distance,
/// out, format). p_dc accepts a comma-separated list.
void apply_setting(SweepConfig& config, std::string_view key, std::string_view value);

/// Reads a flat key-value file: one `key = value` per line, '#' starts a
/// comment. Errors are reported as InvalidInput("<source>:<line>: ...").
void load_config(std::istream& in, const std::string& source, SweepConfig& config);

}  // namespace eplink
