#include "pointssim/point_process.hpp"

#include <cmath>
#include <numeric>

namespace pointssim {

AnchorSet extract_anchors(const BinaryImage& img) {
    const DistanceField field = distance_transform(img);
    const CellMask maxima = local_maxima(field);
    const CellMask anchors = adaptive_thin(field, maxima);
    const LabelField components = connected_components(img);

    AnchorSet set;
    set.object_count = components.label_count;
    for (int r = 0; r < img.rows(); ++r) {
        for (int c = 0; c < img.cols(); ++c) {
            if (!anchors.at(r, c)) continue;
            set.rows.push_back(r);
            set.cols.push_back(c);
            set.squared.push_back(field.squared_at(r, c));
            set.labels.push_back(components.at(r, c));
        }
    }
    return set;
}

MarkedPointProcess::MarkedPointProcess(std::vector<double> xs,
                                       std::vector<double> ys,
                                       std::vector<std::int64_t> radii_squared_px,
                                       std::vector<int> labels, BaseFrame frame)
    : xs_(std::move(xs)),
      ys_(std::move(ys)),
      radii_sq_px_(std::move(radii_squared_px)),
      labels_(std::move(labels)),
      frame_(frame) {
    const std::size_t n = xs_.size();
    if (ys_.size() != n || radii_sq_px_.size() != n || labels_.size() != n)
        throw InvalidConfig("marked point process sequences differ in length");
    for (std::size_t i = 0; i < n; ++i) {
        if (radii_sq_px_[i] <= 0)
            throw InvalidConfig("anchor radius must be positive");
        if (labels_[i] < 1)
            throw InvalidConfig("anchor labels must be >= 1");
        if (xs_[i] < 0.0 || xs_[i] > frame_.extent_x || ys_[i] < 0.0 ||
            ys_[i] > frame_.extent_y)
            throw InvalidConfig("anchor position outside the base frame");
    }
}

double MarkedPointProcess::radius(std::size_t i) const {
    return std::sqrt(static_cast<double>(radii_sq_px_[i])) * frame_.cell_x;
}

std::int64_t MarkedPointProcess::radius_squared_px_sum() const noexcept {
    return std::accumulate(radii_sq_px_.begin(), radii_sq_px_.end(),
                           static_cast<std::int64_t>(0));
}

int MarkedPointProcess::max_label() const noexcept {
    int m = 0;
    for (int l : labels_) m = std::max(m, l);
    return m;
}

MarkedPointProcess extract(const BinaryImage& img, const BaseFrame& frame) {
    const double ex = img.cols() * frame.cell_x;
    const double ey = img.rows() * frame.cell_y;
    if (std::abs(ex - frame.extent_x) > 1e-9 * std::max(1.0, frame.extent_x) ||
        std::abs(ey - frame.extent_y) > 1e-9 * std::max(1.0, frame.extent_y))
        throw InvalidConfig("frame extent inconsistent with image dimensions");

    const AnchorSet set = extract_anchors(img);
    const std::size_t n = set.size();
    std::vector<double> xs(n);
    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        xs[i] = cell_center_x(set.cols[i], frame);
        ys[i] = cell_center_y(set.rows[i], frame);
    }
    return MarkedPointProcess(std::move(xs), std::move(ys), set.squared,
                              set.labels, frame);
}

}  // namespace pointssim
