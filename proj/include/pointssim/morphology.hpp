#pragma once

#include <cstdint>
#include <vector>

#include "pointssim/image.hpp"

namespace pointssim {

/// Per-cell Euclidean distance to the nearest background cell, held as exact
/// squared integers. Square roots are taken only at the accessor boundary, so
/// every comparison downstream stays in integer arithmetic.
class DistanceField {
public:
    DistanceField(int rows, int cols, std::vector<std::int64_t> squared);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    std::int64_t squared_at(int row, int col) const {
        return squared_[static_cast<std::size_t>(row) * cols_ + col];
    }
    double at(int row, int col) const;

    const std::vector<std::int64_t>& squared() const noexcept { return squared_; }

private:
    int rows_;
    int cols_;
    std::vector<std::int64_t> squared_;
};

/// Row-major boolean mask over a grid; used for local maxima and for the
/// thinned anchor set.
struct CellMask {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> flags;

    bool at(int row, int col) const {
        return flags[static_cast<std::size_t>(row) * cols + col] != 0;
    }
    long long count() const noexcept;
};

/// 8-connected component labels: 0 = background, 1..K = objects numbered by
/// the row-major position of their first cell.
struct LabelField {
    int rows = 0;
    int cols = 0;
    int label_count = 0;
    std::vector<int> labels;

    int at(int row, int col) const {
        return labels[static_cast<std::size_t>(row) * cols + col];
    }
};

/// Exact Euclidean distance transform to the nearest 0 cell, computed over
/// the image grid only (the region outside the image is not background).
/// Two passes: a per-column 1-D scan, then a per-row lower-envelope scan in
/// squared-integer arithmetic. Throws AllForeground if no 0 cell exists.
DistanceField distance_transform(const BinaryImage& img);

/// Flags cells whose distance value is positive and >= all existing
/// 8-neighbors (ties allowed; border cells compare in-grid neighbors only).
CellMask local_maxima(const DistanceField& field);

/// Locally adaptive thinning of the maxima: candidates are swept in order of
/// descending field value (row-major on ties) and accepted iff their distance
/// to every anchor accepted so far is >= their own field value. Guarantees
/// that no two anchors are closer to each other than to the object edge.
CellMask adaptive_thin(const DistanceField& field, const CellMask& maxima);

/// 8-connected components of the foreground.
LabelField connected_components(const BinaryImage& img);

}  // namespace pointssim
