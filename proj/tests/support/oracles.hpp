#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pointssim/image.hpp"
#include "pointssim/morphology.hpp"

// Independent reference implementations used to check the production
// algorithms. Deliberately naive: correctness by inspection, not speed.
namespace oracles {

/// O(n^2) squared Euclidean distance to the nearest 0 cell, minimum over all
/// background cells. Background cells get 0. Requires >= 1 background cell.
std::vector<std::int64_t> brute_force_edt(const pointssim::BinaryImage& img);

/// 8-connected labels via iterative min-id propagation until fixpoint, then
/// renumbered 1..K by first occurrence in row-major order.
std::vector<int> propagation_components(const pointssim::BinaryImage& img);

/// Builds an image from rows of '0'/'1' characters, e.g. {"010","111"}.
pointssim::BinaryImage image_from_rows(const std::vector<std::string>& rows);

/// Rotates a row-major grid counterclockwise by one quarter turn.
template <typename T>
std::vector<T> rotate_grid_ccw(const std::vector<T>& grid, int rows, int cols) {
    std::vector<T> out(grid.size());
    for (int i = 0; i < cols; ++i)
        for (int j = 0; j < rows; ++j)
            out[static_cast<std::size_t>(i) * rows + j] =
                grid[static_cast<std::size_t>(j) * cols + (cols - 1 - i)];
    return out;
}

/// Seeded random binary image with the given foreground probability.
pointssim::BinaryImage random_image(std::uint64_t seed, int rows, int cols,
                                    double foreground_probability);

/// Pixel-replication upsampling by an integer factor.
pointssim::BinaryImage upsample(const pointssim::BinaryImage& img, int factor);

}  // namespace oracles
