#pragma once

#include <string>

#include "pointssim/image.hpp"
#include "pointssim/measures.hpp"

namespace pointssim {

/// A metric value with the identifier of the metric that produced it.
/// Ranges: pointssim in [0,1]; ssim/msssim in [-1,1]; mse in [0,1] for
/// binary inputs.
struct ComparisonScore {
    double value = 0.0;
    std::string metric_name;
};

/// 1 minus the mean normalized squared distance between two summary vectors.
/// The first three terms are normalized by max(V_i(a), V_i(b))^2; a term with
/// both measures zero contributes 0. V4 is already in [0,1] and enters
/// unnormalized.
ComparisonScore point_ssim(const SummaryVector& a, const SummaryVector& b);

/// Mean squared per-cell difference; requires identical pixel dimensions.
ComparisonScore mse(const BinaryImage& a, const BinaryImage& b);

/// Global-statistics structural similarity over the whole image as a single
/// window: means, sample variances and covariance (divisor n-1), dynamic
/// range L = 1, c1 = 1e-4, c2 = 9e-4.
ComparisonScore ssim(const BinaryImage& a, const BinaryImage& b);

/// Multi-scale structural similarity over 5 dyadic scales (2x mean-pool
/// between scales): contrast-structure factor at every scale, luminance at
/// the coarsest, combined with the standard exponent weights
/// (0.0448, 0.2856, 0.3001, 0.2363, 0.1333). Requires both images >= 16x16.
ComparisonScore ms_ssim(const BinaryImage& a, const BinaryImage& b);

inline constexpr const char* kMetricNames[] = {"pointssim", "mse", "ssim",
                                               "msssim"};

/// Dispatch by metric identifier ("pointssim", "mse", "ssim", "msssim").
/// The pointssim path aligns frames first and accepts differing resolutions;
/// the baselines require identical dimensions.
ComparisonScore compare_images(const BinaryImage& a, const BinaryImage& b,
                               const std::string& metric);

}  // namespace pointssim
