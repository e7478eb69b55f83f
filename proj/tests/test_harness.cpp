#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "pointssim/harness.hpp"
#include "pointssim/image_io.hpp"

using namespace pointssim;
using namespace pointssim::harness;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / "pointssim_harness" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

ScenarioConfig small_config(Scenario scenario, std::uint64_t seed, int count,
                            int size = 64) {
    ScenarioConfig cfg;
    cfg.scenario = scenario;
    cfg.size = size;
    cfg.seed = seed;
    cfg.count = count;
    return cfg;
}

}  // namespace

TEST_CASE("median and relative deviation helpers") {
    CHECK(median({}) == 0.0);
    CHECK(median({3.0}) == 3.0);
    CHECK(median({1.0, 2.0, 9.0}) == 2.0);
    CHECK(median({1.0, 2.0, 3.0, 10.0}) == 2.5);

    CHECK(relative_deviation(0.0, 0.0) == 0.0);
    CHECK(relative_deviation(2.0, 1.0) == 0.5);
    CHECK(relative_deviation(1.0, 2.0) == 0.5);
    CHECK(relative_deviation(0.0, 5.0) == 1.0);
}

TEST_CASE("write_batch emits named files plus a manifest") {
    const fs::path dir = fresh_dir("batch");
    const ScenarioConfig cfg = small_config(Scenario::corner_mixture, 11, 3);
    const auto files = write_batch(cfg, dir.string());
    REQUIRE(files.size() == 3);
    CHECK(files[0] == "corner_mixture_11_000.png");
    CHECK(files[2] == "corner_mixture_11_002.png");
    for (const std::string& f : files) CHECK(fs::exists(dir / f));

    const json manifest = json::parse(slurp(dir / "manifest.json"));
    CHECK(manifest["schema_version"] == 1);
    CHECK(manifest["config"]["scenario"] == "corner_mixture");
    CHECK(manifest["config"]["seed"] == 11);
    CHECK(manifest["files"].size() == 3);

    // Round trip through the dataset loader preserves content and order.
    const Dataset ds = load_dataset(dir.string());
    CHECK(ds.name == "batch");
    CHECK(ds.files == files);
    CHECK(ds.images[1] == generate_realization(cfg, 1));
}

TEST_CASE("anchors CSV has the documented schema") {
    auto cells = std::vector<std::uint8_t>(100, 0);
    cells[5 * 10 + 5] = 1;
    const BinaryImage img(10, 10, cells);
    const MarkedPointProcess mpp = extract(img, BaseFrame::unit(img));
    const fs::path path = fresh_dir("anchors") / "anchors.csv";
    write_anchors_csv(mpp, path.string());
    CHECK(slurp(path) == "x,y,radius,label\n5.5,3.5,1,1\n");
}

TEST_CASE("matrix pair counts, determinism and outputs") {
    const fs::path dir_a = fresh_dir("mat_a");
    const fs::path dir_b = fresh_dir("mat_b");
    write_batch(small_config(Scenario::structured_ellipses, 1, 4), dir_a.string());
    write_batch(small_config(Scenario::clustered_points, 2, 3), dir_b.string());

    const std::vector<Dataset> datasets = {load_dataset(dir_a.string()),
                                           load_dataset(dir_b.string())};
    const MatrixReport report = run_matrix(datasets, {"pointssim", "mse"});
    REQUIRE(report.matrices.size() == 2);

    const MetricMatrix& ps = report.matrices.front();
    REQUIRE(ps.cells.size() == 3);  // aa, ab, bb
    CHECK(ps.cells[0].pair_count == 4 * 3 / 2);
    CHECK(ps.cells[1].pair_count == 4 * 3);
    CHECK(ps.cells[2].pair_count == 3 * 2 / 2);

    // Identical structured realizations: all pairs exactly 1, variance 0.
    for (double v : ps.cells[0].values) CHECK(v == 1.0);
    CHECK(ps.cells[0].mean == 1.0);
    CHECK(ps.cells[0].variance == 0.0);
    // Cross-class scores separate from within-class.
    CHECK(ps.cells[1].mean < 0.95);

    const MatrixReport again = run_matrix(datasets, {"pointssim", "mse"});
    for (std::size_t i = 0; i < ps.pairs.size(); ++i)
        CHECK(again.matrices[0].pairs[i].value == ps.pairs[i].value);

    const fs::path out = fresh_dir("mat_out") / "report";
    write_matrix_outputs(report, out.string());
    CHECK(fs::exists(out.string() + "_pairs.csv"));
    CHECK(fs::exists(out.string() + "_hist_pointssim.svg"));
    CHECK(fs::exists(out.string() + "_hist_mse.svg"));
    const json doc = json::parse(slurp(out.string() + "_report.json"));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["datasets"].size() == 2);
    CHECK(doc["cells"].size() == 6);

    const std::string csv = slurp(out.string() + "_pairs.csv");
    CHECK(csv.starts_with("dataset_a,dataset_b,file_a,file_b,metric,value\n"));
    CHECK(csv.find("mat_a,mat_b,") != std::string::npos);
}

TEST_CASE("matrix marks dimension-mismatched baseline cells as n/a") {
    const fs::path dir_a = fresh_dir("na_a");
    const fs::path dir_b = fresh_dir("na_b");
    write_batch(small_config(Scenario::structured_ellipses, 1, 2, 64),
                dir_a.string());
    write_batch(small_config(Scenario::structured_ellipses, 1, 2, 128),
                dir_b.string());

    const std::vector<Dataset> datasets = {load_dataset(dir_a.string()),
                                           load_dataset(dir_b.string())};
    const MatrixReport report = run_matrix(datasets, {"mse", "pointssim"});

    const MetricMatrix& m = report.matrices[0];
    CHECK(m.cells[0].applicable);       // aa uniform
    CHECK_FALSE(m.cells[1].applicable); // ab mixed sizes
    CHECK(m.cells[2].applicable);       // bb uniform
    CHECK(m.cells[1].values.empty());

    // pointssim handles the mixed pair fine (and scores it 1: same scene).
    const MetricMatrix& ps = report.matrices[1];
    CHECK(ps.cells[1].applicable);
    CHECK(ps.cells[1].pair_count == 4);

    const fs::path out = fresh_dir("na_out") / "na";
    write_matrix_outputs(report, out.string());
    const std::string csv = slurp(out.string() + "_pairs.csv");
    CHECK(csv.find(",mse,n/a") != std::string::npos);
}

TEST_CASE("matrix input validation") {
    const fs::path dir = fresh_dir("tiny");
    write_batch(small_config(Scenario::structured_ellipses, 1, 1), dir.string());
    std::vector<Dataset> datasets = {load_dataset(dir.string())};
    CHECK_THROWS_AS(run_matrix(datasets, {"pointssim"}), InvalidConfig);
    CHECK_THROWS_AS(load_dataset("/nonexistent/dir"), UnreadableFile);
}

TEST_CASE("resolution run pairs realizations across sizes") {
    ScenarioConfig cfg = small_config(Scenario::corner_mixture, 21, 4, 64);
    const ResolutionReport report = run_resolution(cfg, {64, 128, 256});
    CHECK(report.rows.size() == 3 * 4);
    CHECK(report.pairs.size() == 2 * 4 * 4);  // size pairs x measures x runs

    for (const ResolutionPair& p : report.pairs) {
        CHECK(p.low_size == 64);
        CHECK((p.high_size == 128 || p.high_size == 256));
        CHECK(p.relative_deviation ==
              relative_deviation(p.low_value, p.high_value));
    }

    // Merge flags match the recorded object counts.
    for (const ResolutionPair& p : report.pairs) {
        int low_objects = -1, high_objects = -1;
        for (const ResolutionRow& row : report.rows) {
            if (row.realization != p.realization) continue;
            if (row.size == p.low_size) low_objects = row.object_count;
            if (row.size == p.high_size) high_objects = row.object_count;
        }
        CHECK(p.merge_flagged == (low_objects < high_objects));
    }

    const fs::path out = fresh_dir("res_out") / "res";
    write_resolution_outputs(report, out.string());
    for (const char* suffix :
         {"_measures.csv", "_pairs.csv", "_report.json", "_scatter_v1.svg",
          "_scatter_v2.svg", "_scatter_v3.svg", "_scatter_v4.svg"})
        CHECK(fs::exists(out.string() + suffix));
    const json doc = json::parse(slurp(out.string() + "_report.json"));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["sizes"] == json::array({64, 128, 256}));
    CHECK(doc["median_deviations"].size() == 8);
}

TEST_CASE("resolution input validation") {
    ScenarioConfig cfg = small_config(Scenario::corner_mixture, 1, 2, 64);
    CHECK_THROWS_AS(run_resolution(cfg, {64}), InvalidConfig);
    CHECK_THROWS_AS(run_resolution(cfg, {64, 32}), InvalidConfig);
    CHECK_THROWS_AS(run_resolution(cfg, {64, 96}), InvalidConfig);
    cfg.scenario = Scenario::smoothed_noise;
    CHECK_THROWS_AS(run_resolution(cfg, {64, 128}), InvalidConfig);
}
