#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "pointssim/errors.hpp"

namespace pointssim {

/// Rectangular grid of {0,1} cells, row-major. 1 is foreground, 0 background.
/// Immutable after construction.
class BinaryImage {
public:
    BinaryImage(int rows, int cols, std::vector<std::uint8_t> cells);

    static BinaryImage filled(int rows, int cols, std::uint8_t value = 0);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    std::uint8_t at(int row, int col) const {
        return cells_[static_cast<std::size_t>(row) * cols_ + col];
    }

    const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

    long long foreground_count() const noexcept;

    bool operator==(const BinaryImage&) const = default;

private:
    int rows_;
    int cols_;
    std::vector<std::uint8_t> cells_;
};

/// Physical extent and cell size mapping a grid into the shared base
/// coordinate system. Cells are square for every frame produced here.
struct BaseFrame {
    double extent_x;
    double extent_y;
    double cell_x;
    double cell_y;

    /// Frame with cell size 1, extent equal to the pixel dimensions.
    static BaseFrame unit(const BinaryImage& img);
};

/// Shared base frames for two images: extent = element-wise minimum of the
/// pixel dimensions, per-image cell size = extent / dimension. Requires equal
/// aspect ratios (within 1e-9 relative) so cells stay square; throws
/// AspectMismatch otherwise.
std::pair<BaseFrame, BaseFrame> align_frames(const BinaryImage& a,
                                             const BinaryImage& b);

/// Lossless grid rotation, counterclockwise, quarter_turns in {0,1,2,3}.
/// One turn maps input cell (row, col) to output cell (cols-1-col, row).
BinaryImage rotate90(const BinaryImage& img, int quarter_turns);

/// Base-coordinate center of a cell: column c maps to (c + 0.5) * cell_x,
/// row r to (r + 0.5) * cell_y.
inline double cell_center_x(int col, const BaseFrame& frame) {
    return (col + 0.5) * frame.cell_x;
}
inline double cell_center_y(int row, const BaseFrame& frame) {
    return (row + 0.5) * frame.cell_y;
}

}  // namespace pointssim
