#pragma once

#include <string>

#include "nbbm/grid.hpp"

namespace nbbm {

/// Builtin initial densities. Parsed from a JSON document
///   {"kind": "uniform"|"exponential"|"gaussian"|"wave"|"file", ...}
/// or loaded from a two-column x,value CSV (kind "file").
struct DensitySpec {
    std::string kind = "uniform";
    double a = 0.0;        // uniform: left edge; exponential: shift; gaussian: mean
    double b = 1.0;        // uniform: right edge; gaussian: sigma
    double rate = 1.0;     // exponential decay rate
    double alpha = 0.0;    // wave speed (0 means sqrt(2))
    double x_max = 0.0;    // right truncation (0 means kind-specific default)
    double dx = 1e-3;
    bool normalize = false;  // rescale to unit mass after truncation
    std::string path;        // kind == "file"

    static DensitySpec parse_json(const std::string& text);
    static DensitySpec from_file_or_json(const std::string& arg);
    std::string to_json() const;
};

/// Realizes the spec as a cell-averaged grid. Truncation tails of the
/// analytic densities are charged to leak. Throws std::invalid_argument on
/// malformed specs.
DensityGrid make_density(const DensitySpec& spec);

}  // namespace nbbm
