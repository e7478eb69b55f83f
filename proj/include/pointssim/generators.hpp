#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pointssim/image.hpp"
#include "pointssim/rng.hpp"

namespace pointssim {

enum class Scenario {
    structured_ellipses,
    distorted_ellipses,
    corner_mixture,
    regular_points,
    random_points,
    clustered_points,
    smoothed_noise,
};

const char* scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);
std::vector<Scenario> all_scenarios();

/// Parameters for one generator run. Geometry is expressed as fractions of
/// the image side, so the same seed reproduces the same scene at any size.
/// Defaults are calibrated so a 256x256 realization yields roughly 20-300
/// anchors; metrics degrade when anchors are scarce.
struct ScenarioConfig {
    Scenario scenario = Scenario::structured_ellipses;
    int size = 256;           // pixels per side (square images)
    std::uint64_t seed = 0;   // ignored by structured_ellipses
    int count = 1;            // realizations

    // ellipse scenarios; semi-axes as fractions of the side
    int grid_rows = 4;                // structured: lattice of objects
    int grid_cols = 4;
    int object_count = 30;            // distorted / corner mixture
    double semi_major = 0.055;
    double semi_minor = 0.035;
    double noise_amplitude = 0.3;     // distorted: relative boundary noise
    double corner_margin = 0.25;      // corner boxes, fraction of side
    double circle_fraction = 0.5;     // corner mixture: share of circles

    // point fields
    int point_count = 500;            // random / clustered
    int lattice_divisions = 10;       // regular: points per axis
    int point_radius_px = 1;          // 1 = single pixel
    double cluster_lo = 0.4;          // clustered: box corner, fraction
    double cluster_hi = 0.5;

    // smoothed noise
    int smoothing_radius = 4;
    double threshold_proportion = 0.3;

    void validate() const;
};

/// One deterministic realization. Realization k draws from its own stream,
/// Rng::stream(seed, k), independent of other indices.
BinaryImage generate_realization(const ScenarioConfig& cfg, int index);

/// All cfg.count realizations, indices 0..count-1.
std::vector<BinaryImage> generate(const ScenarioConfig& cfg);

}  // namespace pointssim
