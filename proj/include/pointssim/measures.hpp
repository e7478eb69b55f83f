#pragma once

#include <cstdint>
#include <vector>

#include "pointssim/image.hpp"
#include "pointssim/point_process.hpp"

namespace pointssim {

/// The four-measure summary of one image: anchor count, area coverage,
/// anchors per object, spatial variance irregularity.
struct SummaryVector {
    double v1 = 0.0;
    double v2 = 0.0;
    double v3 = 0.0;
    double v4 = 0.0;

    bool operator==(const SummaryVector&) const = default;
};

/// Quadrat counts over a divisions x divisions partition of the base frame.
struct QuadratGrid {
    int divisions = 0;
    std::vector<long long> counts;  // divisions^2 entries, row-major

    long long total() const noexcept;
};

inline constexpr int kDefaultQuadratDivisions = 10;

/// Number of anchor points.
double anchor_count(const MarkedPointProcess& mpp);

/// Sum of squared radius marks over the frame area. Dimensionless; no circle
/// constant, so it is proportional to (not equal to) covered area.
double area_coverage(const MarkedPointProcess& mpp);

/// Anchor count divided by the object count; 0 for an empty process.
double anchors_per_object(const MarkedPointProcess& mpp);

/// Assigns each anchor to the quadrat containing it; points on the right/top
/// boundary fall into the last quadrat.
QuadratGrid quadrat_counts(const MarkedPointProcess& mpp,
                           int divisions = kDefaultQuadratDivisions);

/// Normalized comparison of the empirical quadrat-count variance against the
/// Poisson reference variance: 1 / (1 + lambda|B| / s^2). 0 for a regular
/// arrangement or an empty process, near 0.5 for random, toward 1 for
/// clustered. Always in [0,1].
double spatial_variance_irregularity(const MarkedPointProcess& mpp,
                                     int divisions = kDefaultQuadratDivisions);

/// Anchor extraction followed by the four measures.
SummaryVector summarize(const BinaryImage& img, const BaseFrame& frame,
                        int divisions = kDefaultQuadratDivisions);

SummaryVector measures_of(const MarkedPointProcess& mpp,
                          int divisions = kDefaultQuadratDivisions);

}  // namespace pointssim
