#pragma once

#include <cstdint>
#include <vector>

#include "pointssim/image.hpp"
#include "pointssim/morphology.hpp"

namespace pointssim {

/// Anchor cells in pixel space with their squared field values and object
/// labels. Exact integer form used by the invariant checks and as the raw
/// material for the base-coordinate representation.
struct AnchorSet {
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<std::int64_t> squared;  // distance-transform value^2, pixels
    std::vector<int> labels;
    int object_count = 0;

    std::size_t size() const noexcept { return rows.size(); }
};

/// Full anchor pipeline in pixel space: distance transform -> local maxima
/// -> adaptive thinning, labels from 8-connected components.
AnchorSet extract_anchors(const BinaryImage& img);

/// Marked point process: anchor positions in base coordinates with a radius
/// mark and an object-label mark each (the n_p x 4 representation).
class MarkedPointProcess {
public:
    MarkedPointProcess(std::vector<double> xs, std::vector<double> ys,
                       std::vector<std::int64_t> radii_squared_px,
                       std::vector<int> labels, BaseFrame frame);

    std::size_t size() const noexcept { return xs_.size(); }
    bool empty() const noexcept { return xs_.empty(); }

    double x(std::size_t i) const { return xs_[i]; }
    double y(std::size_t i) const { return ys_[i]; }
    /// Radius mark in base units.
    double radius(std::size_t i) const;
    int label(std::size_t i) const { return labels_[i]; }

    /// Squared radius in pixel units; exact.
    std::int64_t radius_squared_px(std::size_t i) const { return radii_sq_px_[i]; }
    /// Sum of squared pixel radii; integer, so it is order-independent.
    std::int64_t radius_squared_px_sum() const noexcept;

    int max_label() const noexcept;
    const BaseFrame& frame() const noexcept { return frame_; }

private:
    std::vector<double> xs_;
    std::vector<double> ys_;
    std::vector<std::int64_t> radii_sq_px_;
    std::vector<int> labels_;
    BaseFrame frame_;
};

/// Assembles the marked point process of an image within the given frame.
/// Positions are cell centers in base coordinates; radii are the distance
/// values scaled by the cell size; labels come from the connected components.
MarkedPointProcess extract(const BinaryImage& img, const BaseFrame& frame);

}  // namespace pointssim
