#pragma once

#include <filesystem>
#include <string>

#include "zetapair/zeta_zeros.hpp"

namespace zetapair::io {

// Cache file format: '#'-prefixed header lines (source, t-range, build info),
// then one ordinate per line with 12 significant digits, strictly increasing.

// Parse a zero file; entries get beta = 1/2, multiplicity = 1, on_line = true.
// Throws with the offending line number on malformed or non-increasing input.
zeros::ZeroDataset parse_zero_file(const std::filesystem::path& path);

void write_zero_file(const std::filesystem::path& path,
                     const zeros::ZeroDataset& ds);

// Serialized bytes of the cache file, used for deterministic rewrites.
std::string format_zero_file(const zeros::ZeroDataset& ds);

}  // namespace zetapair::io
