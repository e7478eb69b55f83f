#include "pointssim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#include "json.hpp"
#include "pointssim/image_io.hpp"
#include "pointssim/metrics.hpp"
#include "pointssim/svg.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace pointssim::harness {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw WriteFailure("cannot open file for writing: " + path);
    return out;
}

void finish_out(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw WriteFailure("write failed: " + path);
}

json config_to_json(const ScenarioConfig& cfg) {
    return json{{"scenario", scenario_name(cfg.scenario)},
                {"size", cfg.size},
                {"seed", cfg.seed},
                {"count", cfg.count},
                {"grid_rows", cfg.grid_rows},
                {"grid_cols", cfg.grid_cols},
                {"object_count", cfg.object_count},
                {"semi_major", cfg.semi_major},
                {"semi_minor", cfg.semi_minor},
                {"noise_amplitude", cfg.noise_amplitude},
                {"corner_margin", cfg.corner_margin},
                {"circle_fraction", cfg.circle_fraction},
                {"point_count", cfg.point_count},
                {"lattice_divisions", cfg.lattice_divisions},
                {"point_radius_px", cfg.point_radius_px},
                {"cluster_lo", cfg.cluster_lo},
                {"cluster_hi", cfg.cluster_hi},
                {"smoothing_radius", cfg.smoothing_radius},
                {"threshold_proportion", cfg.threshold_proportion}};
}

struct CellStats {
    long long count = 0;
    double mean = 0.0;
    double variance = 0.0;
};

CellStats stats_of(const std::vector<double>& values) {
    CellStats s;
    s.count = static_cast<long long>(values.size());
    if (values.empty()) return s;
    for (double v : values) s.mean += v;
    s.mean /= static_cast<double>(values.size());
    for (double v : values) s.variance += (v - s.mean) * (v - s.mean);
    s.variance /= static_cast<double>(values.size());
    return s;
}

bool uniform_dimensions(const Dataset& a, const Dataset& b) {
    const BinaryImage* first = nullptr;
    for (const Dataset* d : {&a, &b}) {
        for (const BinaryImage& img : d->images) {
            if (!first) first = &img;
            else if (img.rows() != first->rows() || img.cols() != first->cols())
                return false;
        }
    }
    return true;
}

// PointSSIM summaries depend only on the image and its aligned cell size, so
// repeated pairings of the same file reuse the cached vector.
class SummaryCache {
public:
    SummaryVector get(const BinaryImage& img, double cell_size) {
        const auto key = std::make_pair(&img, cell_size);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        const BaseFrame frame{img.cols() * cell_size, img.rows() * cell_size,
                              cell_size, cell_size};
        SummaryVector v = summarize(img, frame);
        cache_.emplace(key, v);
        return v;
    }

private:
    std::map<std::pair<const BinaryImage*, double>, SummaryVector> cache_;
};

double score_pair(const BinaryImage& a, const BinaryImage& b,
                  const std::string& metric, SummaryCache& cache) {
    if (metric == "pointssim") {
        const auto [frame_a, frame_b] = align_frames(a, b);
        return point_ssim(cache.get(a, frame_a.cell_x),
                          cache.get(b, frame_b.cell_x))
            .value;
    }
    return compare_images(a, b, metric).value;
}

}  // namespace

double median(std::vector<double> values) {
    if (values.empty()) return 0.0;
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    if (n % 2 == 1) return values[n / 2];
    return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double relative_deviation(double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    if (m == 0.0) return 0.0;
    return std::abs(a - b) / m;
}

Dataset load_dataset(const std::string& directory) {
    if (!fs::is_directory(directory))
        throw UnreadableFile("not a directory: " + directory);
    Dataset ds;
    ds.directory = directory;
    ds.name = fs::path(directory).filename().string();
    if (ds.name.empty())
        ds.name = fs::path(directory).parent_path().filename().string();
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (!entry.is_regular_file()) continue;
        const std::string ext = entry.path().extension().string();
        if (ext == ".png" || ext == ".pgm" || ext == ".pnm")
            ds.files.push_back(entry.path().filename().string());
    }
    std::sort(ds.files.begin(), ds.files.end());
    for (const std::string& f : ds.files)
        ds.images.push_back(load_image((fs::path(directory) / f).string()));
    return ds;
}

std::vector<std::string> write_batch(const ScenarioConfig& cfg,
                                     const std::string& out_dir) {
    cfg.validate();
    fs::create_directories(out_dir);
    std::vector<std::string> files;
    for (int k = 0; k < cfg.count; ++k) {
        const BinaryImage img = generate_realization(cfg, k);
        char name[128];
        std::snprintf(name, sizeof(name), "%s_%llu_%03d.png",
                      scenario_name(cfg.scenario),
                      static_cast<unsigned long long>(cfg.seed), k);
        save_image(img, (fs::path(out_dir) / name).string());
        files.emplace_back(name);
    }
    json manifest = {{"schema_version", 1},
                     {"config", config_to_json(cfg)},
                     {"files", files}};
    const std::string manifest_path = (fs::path(out_dir) / "manifest.json").string();
    auto out = open_out(manifest_path);
    out << manifest.dump(2) << '\n';
    finish_out(out, manifest_path);
    return files;
}

void write_anchors_csv(const MarkedPointProcess& mpp, const std::string& path) {
    auto out = open_out(path);
    out << "x,y,radius,label\n";
    for (std::size_t i = 0; i < mpp.size(); ++i)
        out << format_double(mpp.x(i)) << ',' << format_double(mpp.y(i)) << ','
            << format_double(mpp.radius(i)) << ',' << mpp.label(i) << '\n';
    finish_out(out, path);
}

MatrixReport run_matrix(const std::vector<Dataset>& datasets,
                        const std::vector<std::string>& metrics) {
    if (datasets.empty()) throw InvalidConfig("matrix needs at least one dataset");
    for (const Dataset& d : datasets)
        if (d.size() < 2)
            throw InvalidConfig("dataset '" + d.name + "' needs >= 2 images");

    MatrixReport report;
    for (const Dataset& d : datasets) report.dataset_names.push_back(d.name);

    SummaryCache cache;
    for (const std::string& metric : metrics) {
        MetricMatrix matrix;
        matrix.metric = metric;
        const bool pixel_based = metric != "pointssim";
        for (std::size_t a = 0; a < datasets.size(); ++a) {
            for (std::size_t b = a; b < datasets.size(); ++b) {
                const Dataset& da = datasets[a];
                const Dataset& db = datasets[b];
                MatrixCell cell;
                cell.dataset_a = da.name;
                cell.dataset_b = db.name;
                if (pixel_based && !uniform_dimensions(da, db))
                    cell.applicable = false;

                auto add_pair = [&](std::size_t i, std::size_t j) {
                    PairScore pair;
                    pair.dataset_a = da.name;
                    pair.dataset_b = db.name;
                    pair.file_a = da.files[i];
                    pair.file_b = db.files[j];
                    pair.applicable = cell.applicable;
                    if (cell.applicable) {
                        pair.value =
                            score_pair(da.images[i], db.images[j], metric, cache);
                        cell.values.push_back(pair.value);
                    }
                    matrix.pairs.push_back(std::move(pair));
                };
                if (a == b) {
                    for (std::size_t i = 0; i < da.size(); ++i)
                        for (std::size_t j = i + 1; j < da.size(); ++j)
                            add_pair(i, j);
                } else {
                    for (std::size_t i = 0; i < da.size(); ++i)
                        for (std::size_t j = 0; j < db.size(); ++j)
                            add_pair(i, j);
                }
                const CellStats stats = stats_of(cell.values);
                cell.pair_count = stats.count;
                cell.mean = stats.mean;
                cell.variance = stats.variance;
                matrix.cells.push_back(std::move(cell));
            }
        }
        report.matrices.push_back(std::move(matrix));
    }
    return report;
}

void write_matrix_outputs(const MatrixReport& report,
                          const std::string& out_prefix) {
    const std::string csv_path = out_prefix + "_pairs.csv";
    auto csv = open_out(csv_path);
    csv << "dataset_a,dataset_b,file_a,file_b,metric,value\n";
    for (const MetricMatrix& matrix : report.matrices)
        for (const PairScore& p : matrix.pairs)
            csv << p.dataset_a << ',' << p.dataset_b << ',' << p.file_a << ','
                << p.file_b << ',' << matrix.metric << ','
                << (p.applicable ? format_double(p.value) : std::string("n/a"))
                << '\n';
    finish_out(csv, csv_path);

    json cells_json = json::array();
    for (const MetricMatrix& matrix : report.matrices) {
        for (const MatrixCell& cell : matrix.cells) {
            json c = {{"metric", matrix.metric},
                      {"dataset_a", cell.dataset_a},
                      {"dataset_b", cell.dataset_b},
                      {"within_class", cell.dataset_a == cell.dataset_b}};
            if (cell.applicable) {
                c["pair_count"] = cell.pair_count;
                c["mean"] = cell.mean;
                c["variance"] = cell.variance;
            } else {
                c["value"] = "n/a";
            }
            cells_json.push_back(std::move(c));
        }
    }
    json doc = {{"schema_version", 1},
                {"datasets", report.dataset_names},
                {"cells", cells_json}};
    const std::string json_path = out_prefix + "_report.json";
    auto out = open_out(json_path);
    out << doc.dump(2) << '\n';
    finish_out(out, json_path);

    for (const MetricMatrix& matrix : report.matrices) {
        std::vector<svg::HistogramPanel> panels;
        for (const MatrixCell& cell : matrix.cells) {
            svg::HistogramPanel panel;
            panel.title = cell.dataset_a + " vs " + cell.dataset_b +
                          (cell.applicable ? "" : " (n/a)");
            panel.values = cell.values;
            panel.color = cell.dataset_a == cell.dataset_b ? "#1f77b4" : "#d62728";
            panels.push_back(std::move(panel));
        }
        svg::HistogramGridOptions options;
        options.title = matrix.metric + " pairwise scores";
        options.columns = 3;
        svg::write_file(out_prefix + "_hist_" + matrix.metric + ".svg",
                        svg::render_histogram_grid(panels, options));
    }
}

double ResolutionReport::median_relative_deviation(int measure_index,
                                                   int high_size) const {
    std::vector<double> devs;
    for (const ResolutionPair& p : pairs)
        if (p.measure_index == measure_index && p.high_size == high_size)
            devs.push_back(p.relative_deviation);
    return median(std::move(devs));
}

long long ResolutionReport::merge_event_count() const noexcept {
    long long n = 0;
    for (const ResolutionPair& p : pairs)
        n += p.measure_index == 1 && p.merge_flagged;
    return n;
}

ResolutionReport run_resolution(const ScenarioConfig& cfg,
                                const std::vector<int>& sizes) {
    if (sizes.size() < 2)
        throw InvalidConfig("resolution experiment needs >= 2 sizes");
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        if (sizes[i] <= sizes[i - 1])
            throw InvalidConfig("sizes must be strictly increasing");
        if (sizes[i] % sizes.front() != 0)
            throw InvalidConfig("sizes must be multiples of the smallest");
    }
    if (cfg.scenario != Scenario::structured_ellipses &&
        cfg.scenario != Scenario::distorted_ellipses &&
        cfg.scenario != Scenario::corner_mixture)
        throw InvalidConfig(
            "resolution experiment requires a scale-free scenario "
            "(structured_ellipses, distorted_ellipses or corner_mixture)");

    ResolutionReport report;
    report.config = cfg;
    report.sizes = sizes;

    // measure value + object count per (size, realization)
    std::map<std::pair<int, int>, std::pair<SummaryVector, int>> table;
    for (int size : sizes) {
        ScenarioConfig sized = cfg;
        sized.size = size;
        sized.validate();
        for (int k = 0; k < cfg.count; ++k) {
            const BinaryImage img = generate_realization(sized, k);
            const MarkedPointProcess mpp = extract(img, BaseFrame::unit(img));
            ResolutionRow row;
            row.size = size;
            row.realization = k;
            row.measures = measures_of(mpp);
            row.object_count = mpp.max_label();
            table[{size, k}] = {row.measures, row.object_count};
            report.rows.push_back(row);
        }
    }

    const int low = sizes.front();
    for (std::size_t s = 1; s < sizes.size(); ++s) {
        const int high = sizes[s];
        for (int k = 0; k < cfg.count; ++k) {
            const auto& [low_v, low_objects] = table.at({low, k});
            const auto& [high_v, high_objects] = table.at({high, k});
            const double lows[4] = {low_v.v1, low_v.v2, low_v.v3, low_v.v4};
            const double highs[4] = {high_v.v1, high_v.v2, high_v.v3, high_v.v4};
            for (int m = 0; m < 4; ++m) {
                ResolutionPair pair;
                pair.measure_index = m + 1;
                pair.realization = k;
                pair.low_size = low;
                pair.high_size = high;
                pair.low_value = lows[m];
                pair.high_value = highs[m];
                pair.relative_deviation = relative_deviation(lows[m], highs[m]);
                pair.merge_flagged = low_objects < high_objects;
                report.pairs.push_back(pair);
            }
        }
    }
    return report;
}

void write_resolution_outputs(const ResolutionReport& report,
                              const std::string& out_prefix) {
    const std::string measures_path = out_prefix + "_measures.csv";
    auto mcsv = open_out(measures_path);
    mcsv << "size,realization,v1,v2,v3,v4,object_count\n";
    for (const ResolutionRow& row : report.rows)
        mcsv << row.size << ',' << row.realization << ','
             << format_double(row.measures.v1) << ','
             << format_double(row.measures.v2) << ','
             << format_double(row.measures.v3) << ','
             << format_double(row.measures.v4) << ',' << row.object_count
             << '\n';
    finish_out(mcsv, measures_path);

    const std::string pairs_path = out_prefix + "_pairs.csv";
    auto pcsv = open_out(pairs_path);
    pcsv << "measure,realization,low_size,high_size,low_value,high_value,"
            "relative_deviation,merge_flagged\n";
    for (const ResolutionPair& p : report.pairs)
        pcsv << 'v' << p.measure_index << ',' << p.realization << ','
             << p.low_size << ',' << p.high_size << ','
             << format_double(p.low_value) << ','
             << format_double(p.high_value) << ','
             << format_double(p.relative_deviation) << ','
             << (p.merge_flagged ? 1 : 0) << '\n';
    finish_out(pcsv, pairs_path);

    json deviations = json::array();
    for (std::size_t s = 1; s < report.sizes.size(); ++s)
        for (int m = 1; m <= 4; ++m)
            deviations.push_back(
                {{"measure", "v" + std::to_string(m)},
                 {"low_size", report.sizes.front()},
                 {"high_size", report.sizes[s]},
                 {"median_relative_deviation",
                  report.median_relative_deviation(m, report.sizes[s])}});
    json doc = {{"schema_version", 1},
                {"config", config_to_json(report.config)},
                {"sizes", report.sizes},
                {"median_deviations", deviations},
                {"merge_event_count", report.merge_event_count()}};
    const std::string json_path = out_prefix + "_report.json";
    auto out = open_out(json_path);
    out << doc.dump(2) << '\n';
    finish_out(out, json_path);

    static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    for (int m = 1; m <= 4; ++m) {
        std::vector<svg::Series> series;
        for (std::size_t s = 1; s < report.sizes.size(); ++s) {
            svg::Series line;
            line.color = kColors[(s - 1) % 4];
            line.label = std::to_string(report.sizes.front()) + " vs " +
                         std::to_string(report.sizes[s]);
            for (const ResolutionPair& p : report.pairs)
                if (p.measure_index == m && p.high_size == report.sizes[s]) {
                    line.xs.push_back(p.low_value);
                    line.ys.push_back(p.high_value);
                }
            series.push_back(std::move(line));
        }
        svg::ScatterOptions options;
        options.title = "measure v" + std::to_string(m) + " across resolutions";
        options.x_label = "low resolution";
        options.y_label = "high resolution";
        options.identity_line = true;
        svg::write_file(out_prefix + "_scatter_v" + std::to_string(m) + ".svg",
                        svg::render_scatter(series, options));
    }
}

}  // namespace pointssim::harness
