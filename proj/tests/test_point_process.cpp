#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "pointssim/generators.hpp"
#include "pointssim/point_process.hpp"

using namespace pointssim;

TEST_CASE("all-background image yields an empty process") {
    const BinaryImage img = BinaryImage::filled(8, 8, 0);
    const MarkedPointProcess mpp = extract(img, BaseFrame::unit(img));
    CHECK(mpp.empty());
    CHECK(mpp.size() == 0);
    CHECK(mpp.max_label() == 0);
}

TEST_CASE("single interior pixel: position, radius and label") {
    auto cells = std::vector<std::uint8_t>(100, 0);
    cells[3 * 10 + 6] = 1;  // row 3, col 6
    const BinaryImage img(10, 10, cells);
    const MarkedPointProcess mpp = extract(img, BaseFrame::unit(img));
    REQUIRE(mpp.size() == 1);
    CHECK(mpp.x(0) == 6.5);
    CHECK(mpp.y(0) == 3.5);
    CHECK(mpp.radius(0) == 1.0);
    CHECK(mpp.radius_squared_px(0) == 1);
    CHECK(mpp.label(0) == 1);
}

TEST_CASE("all-foreground propagates AllForeground") {
    const BinaryImage img = BinaryImage::filled(4, 4, 1);
    CHECK_THROWS_AS(extract(img, BaseFrame::unit(img)), AllForeground);
}

TEST_CASE("frame must be consistent with the image") {
    const BinaryImage img = BinaryImage::filled(8, 8, 0);
    const BaseFrame wrong{5.0, 5.0, 1.0, 1.0};
    CHECK_THROWS_AS(extract(img, wrong), InvalidConfig);
}

TEST_CASE("pixel-doubled image has matching radii under aligned frames") {
    const BinaryImage img = oracles::image_from_rows({
        "00000000",
        "01110000",
        "01111000",
        "01110000",
        "00000000",
        "00000110",
        "00000110",
        "00000000",
    });
    const BinaryImage doubled = oracles::upsample(img, 2);
    const auto [frame_low, frame_high] = align_frames(img, doubled);
    CHECK(frame_high.cell_x == 0.5);

    const MarkedPointProcess low = extract(img, frame_low);
    const MarkedPointProcess high = extract(doubled, frame_high);
    REQUIRE(!low.empty());
    REQUIRE(!high.empty());

    auto max_radius = [](const MarkedPointProcess& mpp) {
        double best = 0;
        for (std::size_t i = 0; i < mpp.size(); ++i)
            best = std::max(best, mpp.radius(i));
        return best;
    };
    // Scale-covariant within one base-unit cell width.
    CHECK(std::abs(max_radius(low) - max_radius(high)) <= 1.0);
}

TEST_CASE("anchors inherit component labels consistently") {
    ScenarioConfig cfg;
    cfg.scenario = Scenario::distorted_ellipses;
    cfg.size = 96;
    cfg.seed = 5;
    cfg.object_count = 6;
    const BinaryImage img = generate_realization(cfg, 0);
    const MarkedPointProcess mpp = extract(img, BaseFrame::unit(img));
    const LabelField components = connected_components(img);

    REQUIRE(!mpp.empty());
    for (std::size_t i = 0; i < mpp.size(); ++i) {
        const int col = static_cast<int>(mpp.x(i));  // cell_x == 1
        const int row = static_cast<int>(mpp.y(i));
        CHECK(mpp.label(i) == components.at(row, col));
    }
}

TEST_CASE("every object keeps at least one anchor on generated sets") {
    for (Scenario scenario :
         {Scenario::structured_ellipses, Scenario::distorted_ellipses,
          Scenario::corner_mixture, Scenario::random_points,
          Scenario::smoothed_noise}) {
        ScenarioConfig cfg;
        cfg.scenario = scenario;
        cfg.size = 128;
        cfg.seed = 17;
        cfg.count = 2;
        for (const BinaryImage& img : generate(cfg)) {
            const AnchorSet set = extract_anchors(img);
            CHECK(set.size() <= static_cast<std::size_t>(img.foreground_count()));
            CHECK(static_cast<int>(set.size()) >= set.object_count);
            std::set<int> labels(set.labels.begin(), set.labels.end());
            CHECK(static_cast<int>(labels.size()) == set.object_count);
        }
    }
}

TEST_CASE("radius/label-class multiset is rotation invariant") {
    ScenarioConfig cfg;
    cfg.scenario = Scenario::corner_mixture;
    cfg.size = 100;
    cfg.seed = 23;
    const BinaryImage img = generate_realization(cfg, 0);

    auto signature = [](const BinaryImage& image) {
        const MarkedPointProcess mpp = extract(image, BaseFrame::unit(image));
        std::map<int, long long> class_size;
        for (std::size_t i = 0; i < mpp.size(); ++i) ++class_size[mpp.label(i)];
        std::multiset<std::pair<std::int64_t, long long>> sig;
        for (std::size_t i = 0; i < mpp.size(); ++i)
            sig.insert({mpp.radius_squared_px(i), class_size[mpp.label(i)]});
        return sig;
    };

    const auto base = signature(img);
    for (int k = 1; k < 4; ++k) CHECK(signature(rotate90(img, k)) == base);
}

TEST_CASE("marked point process validates its invariants") {
    const BaseFrame frame{10, 10, 1, 1};
    CHECK_THROWS_AS(MarkedPointProcess({1.0}, {1.0}, {1}, {}, frame),
                    InvalidConfig);
    CHECK_THROWS_AS(MarkedPointProcess({1.0}, {1.0}, {0}, {1}, frame),
                    InvalidConfig);
    CHECK_THROWS_AS(MarkedPointProcess({1.0}, {1.0}, {1}, {0}, frame),
                    InvalidConfig);
    CHECK_THROWS_AS(MarkedPointProcess({11.0}, {1.0}, {1}, {1}, frame),
                    InvalidConfig);

    const MarkedPointProcess ok({1.0, 5.0}, {1.0, 5.0}, {4, 9}, {1, 2}, frame);
    CHECK(ok.size() == 2);
    CHECK(ok.radius(0) == 2.0);
    CHECK(ok.radius_squared_px_sum() == 13);
    CHECK(ok.max_label() == 2);
}
