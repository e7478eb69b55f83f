#include "pointssim/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace pointssim {

BinaryImage::BinaryImage(int rows, int cols, std::vector<std::uint8_t> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
    if (rows_ < 1 || cols_ < 1)
        throw InvalidConfig("image dimensions must be at least 1x1");
    if (cells_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw InvalidConfig("cell count does not match rows*cols");
    for (std::uint8_t v : cells_)
        if (v > 1) throw InvalidConfig("cell values must be 0 or 1");
}

BinaryImage BinaryImage::filled(int rows, int cols, std::uint8_t value) {
    return BinaryImage(rows, cols,
                       std::vector<std::uint8_t>(
                           static_cast<std::size_t>(rows) * cols, value));
}

long long BinaryImage::foreground_count() const noexcept {
    return std::accumulate(cells_.begin(), cells_.end(), 0LL);
}

BaseFrame BaseFrame::unit(const BinaryImage& img) {
    return BaseFrame{static_cast<double>(img.cols()),
                     static_cast<double>(img.rows()), 1.0, 1.0};
}

std::pair<BaseFrame, BaseFrame> align_frames(const BinaryImage& a,
                                             const BinaryImage& b) {
    // Cross-multiplied aspect check: cols_a/rows_a == cols_b/rows_b.
    const double lhs = static_cast<double>(a.cols()) * b.rows();
    const double rhs = static_cast<double>(b.cols()) * a.rows();
    if (std::abs(lhs - rhs) > 1e-9 * std::max(lhs, rhs))
        throw AspectMismatch(
            "aspect ratios differ: " + std::to_string(a.cols()) + "x" +
            std::to_string(a.rows()) + " vs " + std::to_string(b.cols()) +
            "x" + std::to_string(b.rows()));

    const double extent_x = std::min(a.cols(), b.cols());
    const double extent_y = std::min(a.rows(), b.rows());
    auto frame_for = [&](const BinaryImage& img) {
        return BaseFrame{extent_x, extent_y, extent_x / img.cols(),
                         extent_y / img.rows()};
    };
    return {frame_for(a), frame_for(b)};
}

BinaryImage rotate90(const BinaryImage& img, int quarter_turns) {
    if (quarter_turns < 0 || quarter_turns > 3)
        throw InvalidConfig("quarter_turns must be in {0,1,2,3}");
    BinaryImage out = img;
    for (int t = 0; t < quarter_turns; ++t) {
        const int r_in = out.rows();
        const int c_in = out.cols();
        std::vector<std::uint8_t> cells(static_cast<std::size_t>(r_in) * c_in);
        // Counterclockwise: output (i, j) <- input (j, c_in-1-i).
        for (int i = 0; i < c_in; ++i)
            for (int j = 0; j < r_in; ++j)
                cells[static_cast<std::size_t>(i) * r_in + j] =
                    out.at(j, c_in - 1 - i);
        out = BinaryImage(c_in, r_in, std::move(cells));
    }
    return out;
}

}  // namespace pointssim
