#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "pointssim/generators.hpp"
#include "pointssim/metrics.hpp"
#include "pointssim/rng.hpp"

using namespace pointssim;

namespace {

SummaryVector random_summary(Rng& rng) {
    SummaryVector v;
    v.v1 = rng.uniform() < 0.05 ? 0.0 : std::floor(rng.uniform(0, 1000));
    v.v2 = rng.uniform() < 0.05 ? 0.0 : rng.uniform(0, 2.0);
    v.v3 = rng.uniform() < 0.05 ? 0.0 : rng.uniform(0, 10.0);
    v.v4 = rng.uniform();
    return v;
}

}  // namespace

TEST_CASE("point_ssim of identical vectors is exactly one") {
    const SummaryVector v{123, 0.25, 3.5, 0.77};
    CHECK(point_ssim(v, v).value == 1.0);
    const SummaryVector zeros{0, 0, 0, 0};
    CHECK(point_ssim(zeros, zeros).value == 1.0);
    CHECK(point_ssim(v, v).metric_name == "pointssim");
}

TEST_CASE("point_ssim hand-evaluated example") {
    const SummaryVector a{100, 0.2, 2, 0.5};
    const SummaryVector b{50, 0.1, 1, 0.0};
    // Terms: (50/100)^2, (0.1/0.2)^2, (1/2)^2, 0.5^2 -> each 0.25.
    CHECK(point_ssim(a, b).value == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("zero-vs-nonzero measure contributes the full unit term") {
    const SummaryVector a{0, 0.5, 0, 0.1};
    const SummaryVector b{10, 0.5, 0, 0.1};
    // v1 term is 1, everything else 0.
    CHECK(point_ssim(a, b).value == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("point_ssim is symmetric and bounded on random pairs") {
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const SummaryVector a = random_summary(rng);
        const SummaryVector b = random_summary(rng);
        const double ab = point_ssim(a, b).value;
        const double ba = point_ssim(b, a).value;
        CHECK(std::abs(ab - ba) <= 1e-15);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(point_ssim(a, a).value == 1.0);
    }
}

TEST_CASE("mse basics") {
    const BinaryImage x = oracles::image_from_rows({"0110", "1001"});
    CHECK(mse(x, x).value == 0.0);

    std::vector<std::uint8_t> inverted;
    for (auto v : x.cells()) inverted.push_back(v ? 0 : 1);
    const BinaryImage y(x.rows(), x.cols(), inverted);
    CHECK(mse(x, y).value == 1.0);

    const BinaryImage a = oracles::image_from_rows({"10", "00"});
    const BinaryImage b = oracles::image_from_rows({"00", "00"});
    CHECK(mse(a, b).value == 0.25);
    CHECK(mse(a, b).value == mse(b, a).value);

    CHECK_THROWS_AS(mse(a, BinaryImage::filled(3, 3, 0)), DimensionMismatch);
}

TEST_CASE("ssim self-comparison and stabilizer case are exactly one") {
    const BinaryImage x = oracles::random_image(77, 12, 12, 0.5);
    CHECK(ssim(x, x).value == 1.0);

    const BinaryImage z = BinaryImage::filled(6, 6, 0);
    CHECK(ssim(z, z).value == 1.0);
    const BinaryImage o = BinaryImage::filled(6, 6, 1);
    CHECK(ssim(o, o).value == 1.0);
}

TEST_CASE("ssim of a checkerboard against its complement") {
    std::vector<std::uint8_t> board, inverse;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            board.push_back((r + c) % 2);
            inverse.push_back(1 - (r + c) % 2);
        }
    const BinaryImage x(4, 4, board);
    const BinaryImage y(4, 4, inverse);

    // Direct formula: means 0.5, sigma^2 = 4/15, sigma_xy = -4/15, so the
    // luminance factor cancels and the value is (-8/15 + c2)/(8/15 + c2).
    const double c2 = 9e-4;
    const double expected = (-8.0 / 15 + c2) / (8.0 / 15 + c2);
    CHECK(ssim(x, y).value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(ssim(x, y).value == ssim(y, x).value);
    CHECK(ssim(x, y).value < 0.0);  // anticorrelated structure
}

TEST_CASE("ssim requires matching dimensions") {
    CHECK_THROWS_AS(
        ssim(BinaryImage::filled(4, 4, 0), BinaryImage::filled(4, 5, 0)),
        DimensionMismatch);
}

TEST_CASE("ms_ssim identical images score one") {
    const BinaryImage x = oracles::random_image(9, 32, 32, 0.4);
    CHECK(ms_ssim(x, x).value == 1.0);
}

TEST_CASE("ms_ssim constant zero against constant one") {
    const BinaryImage z = BinaryImage::filled(32, 32, 0);
    const BinaryImage o = BinaryImage::filled(32, 32, 1);
    // Contrast-structure factors are 1 at every scale (all variances vanish);
    // only the final-scale luminance survives: (c1/(1+c1))^0.1333.
    const double expected = std::pow(1e-4 / (1.0 + 1e-4), 0.1333);
    const double value = ms_ssim(z, o).value;
    CHECK(value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(value < 0.3);
}

TEST_CASE("ms_ssim recovers structure that plain ssim punishes") {
    // A two-pixel shift decorrelates fine structure; mean pooling restores
    // the coarse agreement, so the multi-scale score is higher.
    ScenarioConfig cfg;
    cfg.scenario = Scenario::corner_mixture;
    cfg.size = 64;
    cfg.seed = 12;
    const BinaryImage x = generate_realization(cfg, 0);
    std::vector<std::uint8_t> shifted(x.cells().size(), 0);
    for (int r = 0; r < x.rows(); ++r)
        for (int c = 2; c < x.cols(); ++c)
            shifted[static_cast<std::size_t>(r) * x.cols() + c] =
                x.at(r, c - 2);
    const BinaryImage y(x.rows(), x.cols(), shifted);

    const double multi = ms_ssim(x, y).value;
    CHECK(multi > 0.0);
    CHECK(multi <= 1.0);
    CHECK(multi > ssim(x, y).value);
}

TEST_CASE("ms_ssim input contracts") {
    CHECK_THROWS_AS(
        ms_ssim(BinaryImage::filled(8, 8, 0), BinaryImage::filled(8, 8, 0)),
        TooSmall);
    CHECK_THROWS_AS(
        ms_ssim(BinaryImage::filled(32, 32, 0), BinaryImage::filled(16, 16, 0)),
        DimensionMismatch);
}

TEST_CASE("compare_images dispatch and resolution contract") {
    ScenarioConfig cfg;
    cfg.scenario = Scenario::corner_mixture;
    cfg.size = 64;
    cfg.seed = 4;
    const BinaryImage x = generate_realization(cfg, 0);
    CHECK(compare_images(x, x, "pointssim").value == 1.0);
    CHECK(compare_images(x, x, "mse").value == 0.0);
    CHECK(compare_images(x, x, "ssim").value == 1.0);
    CHECK(compare_images(x, x, "msssim").value == 1.0);
    CHECK_THROWS_AS(compare_images(x, x, "POINTSSIM"), InvalidConfig);

    // Same scene at double resolution: pointssim accepts, the baselines balk.
    ScenarioConfig big = cfg;
    big.size = 128;
    const BinaryImage x2 = generate_realization(big, 0);
    const double cross = compare_images(x, x2, "pointssim").value;
    CHECK(cross > 0.0);
    CHECK(cross <= 1.0);
    CHECK_THROWS_AS(compare_images(x, x2, "ssim"), DimensionMismatch);
    CHECK_THROWS_AS(compare_images(x, x2, "mse"), DimensionMismatch);
}

TEST_CASE("square rotations compare as identical under pointssim") {
    ScenarioConfig cfg;
    cfg.scenario = Scenario::distorted_ellipses;
    cfg.size = 100;
    cfg.seed = 8;
    cfg.object_count = 10;
    const BinaryImage x = generate_realization(cfg, 0);
    for (int k = 1; k < 4; ++k) {
        const double v = compare_images(x, rotate90(x, k), "pointssim").value;
        CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
    }
}
