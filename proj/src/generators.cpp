#include "pointssim/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pointssim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Raster {
    int size;
    std::vector<std::uint8_t> cells;

    explicit Raster(int s)
        : size(s), cells(static_cast<std::size_t>(s) * s, 0) {}

    void set(int row, int col) {
        if (row >= 0 && row < size && col >= 0 && col < size)
            cells[static_cast<std::size_t>(row) * size + col] = 1;
    }

    BinaryImage finish() && { return BinaryImage(size, size, std::move(cells)); }
};

// Axis-aligned ellipse: fills cells whose centers satisfy the inequality.
// Center and semi-axes in pixel units.
void fill_ellipse(Raster& img, double cx, double cy, double a, double b) {
    const int c_lo = std::max(0, static_cast<int>(std::floor(cx - a - 1)));
    const int c_hi = std::min(img.size - 1, static_cast<int>(std::ceil(cx + a + 1)));
    const int r_lo = std::max(0, static_cast<int>(std::floor(cy - b - 1)));
    const int r_hi = std::min(img.size - 1, static_cast<int>(std::ceil(cy + b + 1)));
    for (int r = r_lo; r <= r_hi; ++r) {
        const double dy = (r + 0.5 - cy) / b;
        for (int c = c_lo; c <= c_hi; ++c) {
            const double dx = (c + 0.5 - cx) / a;
            if (dx * dx + dy * dy <= 1.0) img.set(r, c);
        }
    }
}

// Boundary noise for distorted ellipses: a low-order Fourier series with
// seeded Gaussian coefficients, smooth and periodic in the polar angle.
struct BoundaryNoise {
    double amplitude = 0.0;
    double cos_coeff[4] = {0, 0, 0, 0};
    double sin_coeff[4] = {0, 0, 0, 0};

    static BoundaryNoise draw(Rng& rng, double amplitude) {
        BoundaryNoise n;
        n.amplitude = amplitude;
        for (int k = 0; k < 4; ++k) {
            n.cos_coeff[k] = rng.normal();
            n.sin_coeff[k] = rng.normal();
        }
        return n;
    }

    double at(double theta) const {
        double d = 0.0;
        for (int k = 0; k < 4; ++k)
            d += (cos_coeff[k] * std::cos((k + 1) * theta) +
                  sin_coeff[k] * std::sin((k + 1) * theta)) /
                 (k + 1);
        return amplitude * d;
    }

    // Radial scale factor is clamped away from zero so objects stay simply
    // connected, and bounded above so the fit margin is known in advance.
    static constexpr double kScaleLo = 0.2;
    static constexpr double kScaleHi = 1.8;
};

// Distorted ellipse: radius function r(theta) * clamp(1 + noise(theta)).
void fill_distorted_ellipse(Raster& img, double cx, double cy, double a,
                            double b, const BoundaryNoise& noise) {
    const double reach = a * BoundaryNoise::kScaleHi;
    const int c_lo = std::max(0, static_cast<int>(std::floor(cx - reach - 1)));
    const int c_hi = std::min(img.size - 1, static_cast<int>(std::ceil(cx + reach + 1)));
    const int r_lo = std::max(0, static_cast<int>(std::floor(cy - reach - 1)));
    const int r_hi = std::min(img.size - 1, static_cast<int>(std::ceil(cy + reach + 1)));
    for (int r = r_lo; r <= r_hi; ++r) {
        for (int c = c_lo; c <= c_hi; ++c) {
            const double dx = c + 0.5 - cx;
            const double dy = r + 0.5 - cy;
            const double rho = std::hypot(dx, dy);
            if (rho == 0.0) {
                img.set(r, c);
                continue;
            }
            const double theta = std::atan2(dy, dx);
            const double ct = std::cos(theta);
            const double st = std::sin(theta);
            const double base = a * b / std::hypot(b * ct, a * st);
            const double scale =
                std::clamp(1.0 + noise.at(theta), BoundaryNoise::kScaleLo,
                           BoundaryNoise::kScaleHi);
            if (rho <= base * scale) img.set(r, c);
        }
    }
}

BinaryImage gen_structured_ellipses(const ScenarioConfig& cfg) {
    // Deterministic by design: the seed is never read, every realization is
    // an identical copy.
    Raster img(cfg.size);
    const double cell_w = static_cast<double>(cfg.size) / cfg.grid_cols;
    const double cell_h = static_cast<double>(cfg.size) / cfg.grid_rows;
    const double a = cfg.semi_major * cfg.size;
    const double b = cfg.semi_minor * cfg.size;
    if (2.0 * a > cell_w - 2.0 || 2.0 * b > cell_h - 2.0)
        throw DoesNotFit("ellipses do not fit the structured grid with separation");
    for (int gr = 0; gr < cfg.grid_rows; ++gr)
        for (int gc = 0; gc < cfg.grid_cols; ++gc)
            fill_ellipse(img, (gc + 0.5) * cell_w, (gr + 0.5) * cell_h, a, b);
    return std::move(img).finish();
}

BinaryImage gen_distorted_ellipses(const ScenarioConfig& cfg, Rng& rng) {
    Raster img(cfg.size);
    const double margin = cfg.semi_major * BoundaryNoise::kScaleHi;
    if (margin >= 0.5)
        throw DoesNotFit("distorted ellipses cannot fit inside the frame");
    for (int k = 0; k < cfg.object_count; ++k) {
        const double cx = rng.uniform(margin, 1.0 - margin);
        const double cy = rng.uniform(margin, 1.0 - margin);
        const BoundaryNoise noise = BoundaryNoise::draw(rng, cfg.noise_amplitude);
        fill_distorted_ellipse(img, cx * cfg.size, cy * cfg.size,
                               cfg.semi_major * cfg.size,
                               cfg.semi_minor * cfg.size, noise);
    }
    return std::move(img).finish();
}

BinaryImage gen_corner_mixture(const ScenarioConfig& cfg, Rng& rng) {
    Raster img(cfg.size);
    const double m = cfg.corner_margin;
    // Corner boxes in unit coordinates; centers are confined to them while
    // object bodies may spill over by up to one semi-axis.
    const double box_lo[4][2] = {
        {0.0, 0.0}, {1.0 - m, 0.0}, {0.0, 1.0 - m}, {1.0 - m, 1.0 - m}};
    for (int k = 0; k < cfg.object_count; ++k) {
        const int box = static_cast<int>(rng.uniform_index(4));
        const double cx = box_lo[box][0] + m * rng.uniform();
        const double cy = box_lo[box][1] + m * rng.uniform();
        const bool is_circle = rng.uniform() < cfg.circle_fraction;
        const double radius = rng.uniform(cfg.semi_minor, cfg.semi_major);
        if (is_circle) {
            fill_ellipse(img, cx * cfg.size, cy * cfg.size, radius * cfg.size,
                         radius * cfg.size);
        } else {
            fill_ellipse(img, cx * cfg.size, cy * cfg.size,
                         cfg.semi_major * cfg.size, cfg.semi_minor * cfg.size);
        }
    }
    return std::move(img).finish();
}

void stamp_point(Raster& img, int row, int col, int radius_px) {
    if (radius_px <= 1) {
        img.set(row, col);
        return;
    }
    const int rr = radius_px - 1;
    for (int dr = -rr; dr <= rr; ++dr)
        for (int dc = -rr; dc <= rr; ++dc)
            if (dr * dr + dc * dc <= rr * rr) img.set(row + dr, col + dc);
}

BinaryImage gen_regular_points(const ScenarioConfig& cfg) {
    Raster img(cfg.size);
    const int k = cfg.lattice_divisions;
    for (int i = 0; i < k; ++i) {
        const int row = static_cast<int>((i + 0.5) * cfg.size / k);
        for (int j = 0; j < k; ++j) {
            const int col = static_cast<int>((j + 0.5) * cfg.size / k);
            stamp_point(img, row, col, cfg.point_radius_px);
        }
    }
    return std::move(img).finish();
}

BinaryImage gen_random_points(const ScenarioConfig& cfg, Rng& rng) {
    Raster img(cfg.size);
    for (int i = 0; i < cfg.point_count; ++i) {
        const int col = static_cast<int>(rng.uniform_index(cfg.size));
        const int row = static_cast<int>(rng.uniform_index(cfg.size));
        stamp_point(img, row, col, cfg.point_radius_px);
    }
    return std::move(img).finish();
}

BinaryImage gen_clustered_points(const ScenarioConfig& cfg, Rng& rng) {
    Raster img(cfg.size);
    // Cell range whose centers fall strictly inside [lo, hi) of the frame,
    // so the whole cluster lands in one quadrat when [lo, hi) is one.
    auto cell_range = [&](double lo, double hi, int& first, int& count) {
        first = static_cast<int>(std::ceil(lo * cfg.size - 0.5));
        const int last = static_cast<int>(std::ceil(hi * cfg.size - 0.5)) - 1;
        first = std::max(0, first);
        count = std::max(1, last - first + 1);
    };
    int c0 = 0, cn = 0, r0 = 0, rn = 0;
    cell_range(cfg.cluster_lo, cfg.cluster_hi, c0, cn);
    cell_range(cfg.cluster_lo, cfg.cluster_hi, r0, rn);
    for (int i = 0; i < cfg.point_count; ++i) {
        const int col = c0 + static_cast<int>(rng.uniform_index(cn));
        const int row = r0 + static_cast<int>(rng.uniform_index(rn));
        stamp_point(img, row, col, cfg.point_radius_px);
    }
    return std::move(img).finish();
}

BinaryImage gen_smoothed_noise(const ScenarioConfig& cfg, Rng& rng) {
    const int n = cfg.size;
    const std::size_t total = static_cast<std::size_t>(n) * n;
    std::vector<double> noise(total);
    for (double& v : noise) v = rng.uniform();

    // Separable box blur with clipped windows; the per-axis normalization
    // makes this the exact mean over the clipped rectangle.
    const int w = cfg.smoothing_radius;
    std::vector<double> tmp(total);
    std::vector<double> prefix(n + 1);
    auto blur_rows = [&](const std::vector<double>& src, std::vector<double>& dst) {
        for (int r = 0; r < n; ++r) {
            const double* row = src.data() + static_cast<std::size_t>(r) * n;
            prefix[0] = 0.0;
            for (int c = 0; c < n; ++c) prefix[c + 1] = prefix[c] + row[c];
            double* out = dst.data() + static_cast<std::size_t>(r) * n;
            for (int c = 0; c < n; ++c) {
                const int lo = std::max(0, c - w);
                const int hi = std::min(n - 1, c + w);
                out[c] = (prefix[hi + 1] - prefix[lo]) / (hi - lo + 1);
            }
        }
    };
    auto transpose = [&](std::vector<double>& grid) {
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c)
                std::swap(grid[static_cast<std::size_t>(r) * n + c],
                          grid[static_cast<std::size_t>(c) * n + r]);
    };
    blur_rows(noise, tmp);
    transpose(tmp);
    blur_rows(tmp, noise);
    transpose(noise);

    // Threshold at the empirical quantile matching the target proportion.
    const std::size_t want =
        std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(
                                    cfg.threshold_proportion * total)),
                                1, total - 1);
    std::vector<double> sorted = noise;
    std::nth_element(sorted.begin(), sorted.begin() + (want - 1), sorted.end(),
                     std::greater<double>());
    const double threshold = sorted[want - 1];

    std::vector<std::uint8_t> cells(total);
    for (std::size_t i = 0; i < total; ++i) cells[i] = noise[i] >= threshold ? 1 : 0;
    return BinaryImage(n, n, std::move(cells));
}

}  // namespace

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::structured_ellipses: return "structured_ellipses";
        case Scenario::distorted_ellipses: return "distorted_ellipses";
        case Scenario::corner_mixture: return "corner_mixture";
        case Scenario::regular_points: return "regular_points";
        case Scenario::random_points: return "random_points";
        case Scenario::clustered_points: return "clustered_points";
        case Scenario::smoothed_noise: return "smoothed_noise";
    }
    return "unknown";
}

Scenario scenario_from_name(const std::string& name) {
    for (Scenario s : all_scenarios())
        if (name == scenario_name(s)) return s;
    throw InvalidConfig("unknown scenario: " + name);
}

std::vector<Scenario> all_scenarios() {
    return {Scenario::structured_ellipses, Scenario::distorted_ellipses,
            Scenario::corner_mixture,      Scenario::regular_points,
            Scenario::random_points,       Scenario::clustered_points,
            Scenario::smoothed_noise};
}

void ScenarioConfig::validate() const {
    if (size < 32) throw InvalidConfig("size must be >= 32");
    if (count < 1) throw InvalidConfig("count must be >= 1");
    if (semi_major <= 0 || semi_minor <= 0 || semi_minor > semi_major)
        throw InvalidConfig("require 0 < semi_minor <= semi_major");
    if (grid_rows < 1 || grid_cols < 1 || object_count < 1)
        throw InvalidConfig("object counts must be positive");
    if (noise_amplitude < 0) throw InvalidConfig("noise amplitude must be >= 0");
    if (corner_margin <= 0.0 || corner_margin >= 0.5)
        throw InvalidConfig("corner margin must lie in (0, 0.5)");
    if (circle_fraction < 0.0 || circle_fraction > 1.0)
        throw InvalidConfig("circle fraction must lie in [0, 1]");
    if (point_count < 1 ||
        static_cast<long long>(point_count) >
            static_cast<long long>(size) * size)
        throw InvalidConfig("point count must lie in [1, size^2]");
    if (lattice_divisions < 1 || lattice_divisions > size)
        throw InvalidConfig("lattice divisions must lie in [1, size]");
    if (point_radius_px < 1) throw InvalidConfig("point radius must be >= 1");
    if (!(cluster_lo >= 0.0 && cluster_lo < cluster_hi && cluster_hi <= 1.0))
        throw InvalidConfig("cluster box must satisfy 0 <= lo < hi <= 1");
    if (smoothing_radius < 1) throw InvalidConfig("smoothing radius must be >= 1");
    if (threshold_proportion <= 0.0 || threshold_proportion >= 1.0)
        throw InvalidConfig("threshold proportion must lie in (0, 1)");
}

BinaryImage generate_realization(const ScenarioConfig& cfg, int index) {
    cfg.validate();
    Rng rng = Rng::stream(cfg.seed, static_cast<std::uint64_t>(index));
    switch (cfg.scenario) {
        case Scenario::structured_ellipses: return gen_structured_ellipses(cfg);
        case Scenario::distorted_ellipses: return gen_distorted_ellipses(cfg, rng);
        case Scenario::corner_mixture: return gen_corner_mixture(cfg, rng);
        case Scenario::regular_points: return gen_regular_points(cfg);
        case Scenario::random_points: return gen_random_points(cfg, rng);
        case Scenario::clustered_points: return gen_clustered_points(cfg, rng);
        case Scenario::smoothed_noise: return gen_smoothed_noise(cfg, rng);
    }
    throw InvalidConfig("unknown scenario");
}

std::vector<BinaryImage> generate(const ScenarioConfig& cfg) {
    cfg.validate();
    std::vector<BinaryImage> out;
    out.reserve(cfg.count);
    for (int k = 0; k < cfg.count; ++k)
        out.push_back(generate_realization(cfg, k));
    return out;
}

}  // namespace pointssim
