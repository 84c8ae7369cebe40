#pragma once

// Flat key=value text files for SAR parameters and point-target lists.
//
// Parameter file, SI units, one key per line, '#' starts a comment:
//     wavelength=0.055
//     chirp_rate=4.5e17
//     pulse_duration=5.333e-9
//     range_sample_rate=3e9
//     prf=400
//     velocity=7100
//     reference_range=850000
//     c=299792458            (optional; must equal the fixed value)
//
// Target file, one target per line:
//     range_offset_m,azimuth_time_s,reflectivity_re,reflectivity_im

#include "qsar/sar_signal.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace qsar::io {

/// Throws FormatError on unknown, duplicate, missing or malformed keys and
/// ParamsError if the values fail validation.
SarParams parse_params(std::string_view text);
std::string format_params(const SarParams& params);
SarParams load_params(const std::filesystem::path& path);

std::vector<PointTarget> parse_targets(std::string_view text);
std::string format_targets(const std::vector<PointTarget>& targets);
std::vector<PointTarget> load_targets(const std::filesystem::path& path);

}  // namespace qsar::io
