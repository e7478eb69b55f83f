#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pointssim/generators.hpp"
#include "pointssim/image.hpp"
#include "pointssim/measures.hpp"
#include "pointssim/point_process.hpp"

namespace pointssim::harness {

/// A named batch of images loaded from a directory, ordered lexicographically
/// by filename.
struct Dataset {
    std::string name;
    std::string directory;
    std::vector<std::string> files;  // basenames, sorted
    std::vector<BinaryImage> images;

    std::size_t size() const noexcept { return images.size(); }
};

Dataset load_dataset(const std::string& directory);

/// Writes cfg.count realizations as <scenario>_<seed>_<index>.png plus a
/// manifest.json capturing the full configuration. Returns the filenames.
std::vector<std::string> write_batch(const ScenarioConfig& cfg,
                                     const std::string& out_dir);

/// Anchor table: x,y,radius,label with a header line.
void write_anchors_csv(const MarkedPointProcess& mpp, const std::string& path);

// ---------------------------------------------------------------------------
// Pairwise comparison matrix (within-class diagonal, cross-class otherwise).

struct PairScore {
    std::string dataset_a;
    std::string dataset_b;
    std::string file_a;
    std::string file_b;
    bool applicable = true;
    double value = 0.0;
};

struct MatrixCell {
    std::string dataset_a;
    std::string dataset_b;
    bool applicable = true;
    long long pair_count = 0;
    double mean = 0.0;
    double variance = 0.0;  // population variance over the cell's pairs
    std::vector<double> values;
};

struct MetricMatrix {
    std::string metric;
    std::vector<MatrixCell> cells;      // dataset pairs with a <= b
    std::vector<PairScore> pairs;
};

struct MatrixReport {
    std::vector<std::string> dataset_names;
    std::vector<MetricMatrix> matrices;
};

/// Scores every within- and cross-class pair for every metric. Diagonal
/// cells use unordered distinct pairs (n(n-1)/2); off-diagonal cells use all
/// n_a * n_b ordered-by-filename combinations. Cells whose metric cannot
/// apply (mixed pixel dimensions for the pixel-based baselines) are marked
/// not applicable instead of failing the run.
MatrixReport run_matrix(const std::vector<Dataset>& datasets,
                        const std::vector<std::string>& metrics);

/// Emits <prefix>_pairs.csv, <prefix>_report.json and one histogram grid
/// <prefix>_hist_<metric>.svg per metric.
void write_matrix_outputs(const MatrixReport& report,
                          const std::string& out_prefix);

// ---------------------------------------------------------------------------
// Resolution experiment: the same scenes rasterized at several sizes.

struct ResolutionRow {
    int size = 0;
    int realization = 0;
    SummaryVector measures;
    int object_count = 0;
};

struct ResolutionPair {
    int measure_index = 0;  // 1..4
    int realization = 0;
    int low_size = 0;
    int high_size = 0;
    double low_value = 0.0;
    double high_value = 0.0;
    double relative_deviation = 0.0;  // |low-high| / max(|low|,|high|)
    bool merge_flagged = false;       // fewer objects at the low size
};

struct ResolutionReport {
    ScenarioConfig config;
    std::vector<int> sizes;
    std::vector<ResolutionRow> rows;
    std::vector<ResolutionPair> pairs;  // smallest size vs each larger size

    /// Median relative deviation for one measure across realizations.
    double median_relative_deviation(int measure_index, int high_size) const;
    long long merge_event_count() const noexcept;
};

/// Generates realization k of cfg at every size from the same scene seed and
/// summarizes each image in its own unit frame. Sizes must be strictly
/// increasing multiples of the smallest.
ResolutionReport run_resolution(const ScenarioConfig& cfg,
                                const std::vector<int>& sizes);

/// Emits <prefix>_measures.csv, <prefix>_pairs.csv, <prefix>_report.json and
/// one low-vs-high scatter <prefix>_scatter_v<i>.svg per measure with the
/// identity line drawn.
void write_resolution_outputs(const ResolutionReport& report,
                              const std::string& out_prefix);

/// Median of a sample; 0 for an empty one.
double median(std::vector<double> values);

/// |a-b| / max(|a|,|b|), 0 when both are 0.
double relative_deviation(double a, double b);

}  // namespace pointssim::harness
