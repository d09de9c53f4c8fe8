#pragma once

#include <iosfwd>
#include <string>

#include "core/types.hpp"
#include "sim/simulate.hpp"
#include "subarray/subarray.hpp"

namespace wsar {

/// Scene description loaded from a plain-text config: radar parameters,
/// aperture track, image grid, targets, and optional noise/seed/region keys.
struct Scenario {
    SimulationSpec sim;
    ImageGrid grid;
    NoiseRegion snr_region;
    bool has_snr_region = false;
};

// Key = value lines, '#' starts a comment, targets one per
// `target = x,y,re,im[,slope]` line. Throws ConfigError with the offending
// line number on malformed input.
Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::string& path);

}  // namespace wsar
