#pragma once

#include <string>
#include <vector>

namespace pointssim::svg {

/// Minimal SVG writer for the harness plots: scatter panels with an optional
/// identity line, and histogram panels arranged in a grid.

struct Series {
    std::vector<double> xs;
    std::vector<double> ys;
    std::string color = "#1f77b4";
    std::string label;
};

struct ScatterOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool identity_line = false;
    int width = 480;
    int height = 480;
};

std::string render_scatter(const std::vector<Series>& series,
                           const ScatterOptions& options);

struct HistogramPanel {
    std::vector<double> values;
    std::string title;
    std::string color = "#1f77b4";
};

struct HistogramGridOptions {
    int bins = 20;
    int panel_width = 260;
    int panel_height = 200;
    int columns = 4;
    std::string title;
};

std::string render_histogram_grid(const std::vector<HistogramPanel>& panels,
                                  const HistogramGridOptions& options);

void write_file(const std::string& path, const std::string& content);

}  // namespace pointssim::svg
