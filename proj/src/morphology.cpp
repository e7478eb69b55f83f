#include "pointssim/morphology.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace pointssim {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    // b > 0 here; round toward negative infinity.
    std::int64_t q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

}  // namespace

DistanceField::DistanceField(int rows, int cols, std::vector<std::int64_t> squared)
    : rows_(rows), cols_(cols), squared_(std::move(squared)) {
    if (rows_ < 1 || cols_ < 1 ||
        squared_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw InvalidConfig("distance field shape mismatch");
}

double DistanceField::at(int row, int col) const {
    return std::sqrt(static_cast<double>(squared_at(row, col)));
}

long long CellMask::count() const noexcept {
    return std::accumulate(flags.begin(), flags.end(), 0LL);
}

DistanceField distance_transform(const BinaryImage& img) {
    const int rows = img.rows();
    const int cols = img.cols();
    const std::size_t n = static_cast<std::size_t>(rows) * cols;

    // Per-column distance (in rows) to the nearest 0 cell in the same column.
    // INF marks columns with no background cell; it exceeds any in-grid
    // distance, so such parabolas never win in the second pass.
    const std::int64_t inf = rows + cols;
    std::vector<std::int64_t> g(n);
    bool any_background = false;
    for (int c = 0; c < cols; ++c) {
        std::int64_t d = inf;
        for (int r = 0; r < rows; ++r) {
            if (img.at(r, c) == 0) {
                d = 0;
                any_background = true;
            } else if (d < inf) {
                ++d;
            }
            g[static_cast<std::size_t>(r) * cols + c] = d;
        }
        d = inf;
        for (int r = rows - 1; r >= 0; --r) {
            const std::size_t i = static_cast<std::size_t>(r) * cols + c;
            if (img.at(r, c) == 0) d = 0;
            else if (d < inf) ++d;
            g[i] = std::min(g[i], d);
        }
    }
    if (!any_background)
        throw AllForeground("distance transform undefined: image has no 0 cell");

    // Per-row lower envelope of the parabolas (x - i)^2 + g(i)^2, evaluated
    // entirely in integer arithmetic so results are exact.
    std::vector<std::int64_t> out(n);
    std::vector<int> hull(cols);       // parabola column indices
    std::vector<int> start(cols + 1);  // first x where hull[k] is minimal
    for (int r = 0; r < rows; ++r) {
        const std::int64_t* grow = g.data() + static_cast<std::size_t>(r) * cols;
        auto value_at = [&](std::int64_t x, std::int64_t i) {
            return (x - i) * (x - i) + grow[i] * grow[i];
        };
        // Last x (floored) where parabola i is still <= parabola u, for i < u.
        auto crossover = [&](std::int64_t i, std::int64_t u) {
            return floor_div(u * u - i * i + grow[u] * grow[u] - grow[i] * grow[i],
                             2 * (u - i));
        };

        int top = 0;
        hull[0] = 0;
        start[0] = 0;
        for (int u = 1; u < cols; ++u) {
            while (top >= 0 && value_at(start[top], hull[top]) > value_at(start[top], u))
                --top;
            if (top < 0) {
                top = 0;
                hull[0] = u;
                start[0] = 0;
            } else {
                const std::int64_t w = crossover(hull[top], u) + 1;
                if (w < cols) {
                    ++top;
                    hull[top] = u;
                    start[top] = static_cast<int>(w);
                }
            }
        }
        std::int64_t* orow = out.data() + static_cast<std::size_t>(r) * cols;
        for (int x = cols - 1; x >= 0; --x) {
            orow[x] = value_at(x, hull[top]);
            if (x == start[top]) --top;
        }
    }
    return DistanceField(rows, cols, std::move(out));
}

CellMask local_maxima(const DistanceField& field) {
    const int rows = field.rows();
    const int cols = field.cols();
    CellMask mask{rows, cols,
                  std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, 0)};
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const std::int64_t v = field.squared_at(r, c);
            if (v <= 0) continue;  // maxima live on the foreground skeleton
            bool is_max = true;
            for (int dr = -1; dr <= 1 && is_max; ++dr) {
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    const int nr = r + dr;
                    const int nc = c + dc;
                    if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
                    if (field.squared_at(nr, nc) > v) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max)
                mask.flags[static_cast<std::size_t>(r) * cols + c] = 1;
        }
    }
    return mask;
}

CellMask adaptive_thin(const DistanceField& field, const CellMask& maxima) {
    if (maxima.rows != field.rows() || maxima.cols != field.cols())
        throw InvalidConfig("maxima mask shape does not match field");
    const int rows = field.rows();
    const int cols = field.cols();

    struct Candidate {
        std::int64_t value_sq;
        int row;
        int col;
    };
    std::vector<Candidate> candidates;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (maxima.at(r, c))
                candidates.push_back({field.squared_at(r, c), r, c});

    // Descending field value; row-major order breaks ties deterministically.
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) {
                         return a.value_sq > b.value_sq;
                     });

    CellMask anchors{rows, cols,
                     std::vector<std::uint8_t>(static_cast<std::size_t>(rows) * cols, 0)};
    std::vector<Candidate> accepted;
    for (const Candidate& cand : candidates) {
        bool ok = true;
        for (const Candidate& a : accepted) {
            const std::int64_t dr = a.row - cand.row;
            const std::int64_t dc = a.col - cand.col;
            if (dr * dr + dc * dc < cand.value_sq) {
                ok = false;
                break;
            }
        }
        if (ok) {
            accepted.push_back(cand);
            anchors.flags[static_cast<std::size_t>(cand.row) * cols + cand.col] = 1;
        }
    }
    return anchors;
}

LabelField connected_components(const BinaryImage& img) {
    const int rows = img.rows();
    const int cols = img.cols();
    LabelField field{rows, cols, 0,
                     std::vector<int>(static_cast<std::size_t>(rows) * cols, 0)};

    std::vector<std::pair<int, int>> queue;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            const std::size_t i = static_cast<std::size_t>(r) * cols + c;
            if (img.cells()[i] == 0 || field.labels[i] != 0) continue;
            const int label = ++field.label_count;
            field.labels[i] = label;
            queue.clear();
            queue.emplace_back(r, c);
            while (!queue.empty()) {
                auto [qr, qc] = queue.back();
                queue.pop_back();
                for (int dr = -1; dr <= 1; ++dr) {
                    for (int dc = -1; dc <= 1; ++dc) {
                        if (dr == 0 && dc == 0) continue;
                        const int nr = qr + dr;
                        const int nc = qc + dc;
                        if (nr < 0 || nr >= rows || nc < 0 || nc >= cols) continue;
                        const std::size_t ni = static_cast<std::size_t>(nr) * cols + nc;
                        if (img.cells()[ni] == 1 && field.labels[ni] == 0) {
                            field.labels[ni] = label;
                            queue.emplace_back(nr, nc);
                        }
                    }
                }
            }
        }
    }
    return field;
}

}  // namespace pointssim
