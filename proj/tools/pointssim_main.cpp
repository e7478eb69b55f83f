#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pointssim/generators.hpp"
#include "pointssim/harness.hpp"
#include "pointssim/image_io.hpp"
#include "pointssim/measures.hpp"
#include "pointssim/metrics.hpp"
#include "pointssim/point_process.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitContractError = 2;
constexpr int kExitInternalError = 3;

json summary_to_json_array(const pointssim::SummaryVector& v) {
    return json::array({v.v1, v.v2, v.v3, v.v4});
}

pointssim::BaseFrame frame_for(const pointssim::BinaryImage& img,
                               double frame_extent) {
    if (frame_extent <= 0.0) return pointssim::BaseFrame::unit(img);
    const double cell = frame_extent / img.cols();
    return pointssim::BaseFrame{frame_extent, img.rows() * cell, cell, cell};
}

int cmd_compare(const std::string& path_a, const std::string& path_b,
                const std::string& metric) {
    const pointssim::BinaryImage a = pointssim::load_image(path_a);
    const pointssim::BinaryImage b = pointssim::load_image(path_b);
    json out;
    out["metric"] = metric;
    if (metric == "pointssim") {
        const auto [frame_a, frame_b] = pointssim::align_frames(a, b);
        const pointssim::SummaryVector va = pointssim::summarize(a, frame_a);
        const pointssim::SummaryVector vb = pointssim::summarize(b, frame_b);
        out["value"] = pointssim::point_ssim(va, vb).value;
        out["v_x1"] = summary_to_json_array(va);
        out["v_x2"] = summary_to_json_array(vb);
    } else {
        out["value"] = pointssim::compare_images(a, b, metric).value;
    }
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_measures(const std::string& path, int quadrats, double frame_extent) {
    const pointssim::BinaryImage img = pointssim::load_image(path);
    const pointssim::SummaryVector v =
        pointssim::summarize(img, frame_for(img, frame_extent), quadrats);
    json out = {{"v1", v.v1}, {"v2", v.v2}, {"v3", v.v3}, {"v4", v.v4}};
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_anchors(const std::string& path, const std::string& out_csv,
                double frame_extent) {
    const pointssim::BinaryImage img = pointssim::load_image(path);
    const pointssim::MarkedPointProcess mpp =
        pointssim::extract(img, frame_for(img, frame_extent));
    pointssim::harness::write_anchors_csv(mpp, out_csv);
    json out = {{"anchors", mpp.size()}, {"out", out_csv}};
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_generate(const pointssim::ScenarioConfig& cfg,
                 const std::string& out_dir) {
    const std::vector<std::string> files =
        pointssim::harness::write_batch(cfg, out_dir);
    json out = {{"out", out_dir}, {"count", files.size()}, {"files", files}};
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_matrix(const std::vector<std::string>& dirs,
               const std::vector<std::string>& metrics,
               const std::string& out_prefix) {
    std::vector<pointssim::harness::Dataset> datasets;
    for (const std::string& dir : dirs)
        datasets.push_back(pointssim::harness::load_dataset(dir));
    const pointssim::harness::MatrixReport report =
        pointssim::harness::run_matrix(datasets, metrics);
    pointssim::harness::write_matrix_outputs(report, out_prefix);
    json out = {{"out_prefix", out_prefix},
                {"datasets", report.dataset_names},
                {"metrics", metrics}};
    std::cout << out.dump() << '\n';
    return kExitOk;
}

int cmd_resolution(const pointssim::ScenarioConfig& cfg,
                   const std::vector<int>& sizes,
                   const std::string& out_prefix) {
    const pointssim::harness::ResolutionReport report =
        pointssim::harness::run_resolution(cfg, sizes);
    pointssim::harness::write_resolution_outputs(report, out_prefix);
    json out = {{"out_prefix", out_prefix},
                {"sizes", sizes},
                {"realizations", cfg.count},
                {"merge_events", report.merge_event_count()}};
    std::cout << out.dump() << '\n';
    return kExitOk;
}

void add_scenario_options(CLI::App* cmd, pointssim::ScenarioConfig& cfg) {
    cmd->add_option("--size", cfg.size, "pixels per side");
    cmd->add_option("--count", cfg.count, "number of realizations");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--grid-rows", cfg.grid_rows, "structured: object rows");
    cmd->add_option("--grid-cols", cfg.grid_cols, "structured: object columns");
    cmd->add_option("--objects", cfg.object_count,
                    "distorted/corner: object count");
    cmd->add_option("--semi-major", cfg.semi_major,
                    "semi-major axis, fraction of side");
    cmd->add_option("--semi-minor", cfg.semi_minor,
                    "semi-minor axis, fraction of side");
    cmd->add_option("--noise-amplitude", cfg.noise_amplitude,
                    "distorted: boundary noise amplitude");
    cmd->add_option("--corner-margin", cfg.corner_margin,
                    "corner mixture: corner box size, fraction of side");
    cmd->add_option("--circle-fraction", cfg.circle_fraction,
                    "corner mixture: share of circles");
    cmd->add_option("--points", cfg.point_count,
                    "random/clustered: point count");
    cmd->add_option("--lattice", cfg.lattice_divisions,
                    "regular: lattice points per axis");
    cmd->add_option("--point-radius", cfg.point_radius_px,
                    "point stamp radius in pixels (1 = single pixel)");
    cmd->add_option("--smooth-radius", cfg.smoothing_radius,
                    "smoothed noise: box blur radius");
    cmd->add_option("--threshold", cfg.threshold_proportion,
                    "smoothed noise: target foreground proportion");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Structural comparison of binary images via anchor-point "
                 "summaries, with baseline metrics and experiment harness"};
    app.require_subcommand(1);

    // compare
    std::string cmp_a, cmp_b, cmp_metric = "pointssim";
    CLI::App* compare = app.add_subcommand("compare", "compare two images");
    compare->add_option("a", cmp_a, "first image")->required();
    compare->add_option("b", cmp_b, "second image")->required();
    compare->add_option("--metric", cmp_metric,
                        "pointssim | mse | ssim | msssim");

    // measures
    std::string meas_path;
    int meas_quadrats = pointssim::kDefaultQuadratDivisions;
    double meas_extent = 0.0;
    CLI::App* measures_cmd =
        app.add_subcommand("measures", "summary vector of one image");
    measures_cmd->add_option("image", meas_path, "image path")->required();
    measures_cmd->add_option("--quadrats", meas_quadrats,
                             "quadrat divisions per axis");
    measures_cmd->add_option("--frame-extent", meas_extent,
                             "base-frame width (default: pixel units)");

    // anchors
    std::string anch_path, anch_out;
    double anch_extent = 0.0;
    CLI::App* anchors_cmd =
        app.add_subcommand("anchors", "export anchor points as CSV");
    anchors_cmd->add_option("image", anch_path, "image path")->required();
    anchors_cmd->add_option("--out", anch_out, "output CSV path")->required();
    anchors_cmd->add_option("--frame-extent", anch_extent,
                            "base-frame width (default: pixel units)");

    // generate
    pointssim::ScenarioConfig gen_cfg;
    std::string gen_scenario, gen_out;
    CLI::App* generate_cmd =
        app.add_subcommand("generate", "write a synthetic image batch");
    generate_cmd->add_option("scenario", gen_scenario, "scenario name")
        ->required();
    generate_cmd->add_option("--out", gen_out, "output directory")->required();
    add_scenario_options(generate_cmd, gen_cfg);

    // matrix
    std::vector<std::string> mat_dirs, mat_metrics;
    std::string mat_out;
    CLI::App* matrix_cmd = app.add_subcommand(
        "matrix", "pairwise comparison matrix over image directories");
    matrix_cmd->add_option("--dir", mat_dirs, "dataset directory (repeatable)")
        ->required();
    matrix_cmd->add_option("--metric", mat_metrics, "metric (repeatable)")
        ->required();
    matrix_cmd->add_option("--out", mat_out, "output path prefix")->required();

    // resolution
    pointssim::ScenarioConfig res_cfg;
    res_cfg.scenario = pointssim::Scenario::corner_mixture;
    std::string res_scenario = "corner_mixture", res_out;
    std::vector<int> res_sizes;
    CLI::App* resolution_cmd = app.add_subcommand(
        "resolution", "same scenes rasterized at several resolutions");
    resolution_cmd->add_option("--scenario", res_scenario, "scenario name");
    resolution_cmd->add_option("--sizes", res_sizes, "comma-separated sizes")
        ->required()
        ->delimiter(',');
    resolution_cmd->add_option("--out", res_out, "output path prefix")
        ->required();
    add_scenario_options(resolution_cmd, res_cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitContractError;
    }

    try {
        if (*compare) return cmd_compare(cmp_a, cmp_b, cmp_metric);
        if (*measures_cmd)
            return cmd_measures(meas_path, meas_quadrats, meas_extent);
        if (*anchors_cmd) return cmd_anchors(anch_path, anch_out, anch_extent);
        if (*generate_cmd) {
            gen_cfg.scenario = pointssim::scenario_from_name(gen_scenario);
            return cmd_generate(gen_cfg, gen_out);
        }
        if (*matrix_cmd) return cmd_matrix(mat_dirs, mat_metrics, mat_out);
        if (*resolution_cmd) {
            res_cfg.scenario = pointssim::scenario_from_name(res_scenario);
            return cmd_resolution(res_cfg, res_sizes, res_out);
        }
    } catch (const pointssim::Error& e) {
        std::cout << json{{"error", e.code()}, {"message", e.what()}}.dump()
                  << '\n';
        return kExitContractError;
    } catch (const std::exception& e) {
        std::cout << json{{"error", "Internal"}, {"message", e.what()}}.dump()
                  << '\n';
        return kExitInternalError;
    }
    return kExitContractError;
}
