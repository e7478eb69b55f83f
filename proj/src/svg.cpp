#include "pointssim/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "pointssim/errors.hpp"

namespace pointssim::svg {

namespace {

std::string escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (hi <= lo) hi = lo + 1.0;
        const double margin = 0.05 * (hi - lo);
        lo -= margin;
        hi += margin;
    }
};

class Canvas {
public:
    Canvas(int width, int height) : width_(width), height_(height) {
        body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
              << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
              << ' ' << height << "\">\n"
              << "<rect width=\"" << width << "\" height=\"" << height
              << "\" fill=\"white\"/>\n";
    }

    void line(double x1, double y1, double x2, double y2,
              const std::string& stroke, double stroke_width = 1.0,
              bool dashed = false) {
        body_ << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1)
              << "\" x2=\"" << fmt(x2) << "\" y2=\"" << fmt(y2)
              << "\" stroke=\"" << stroke << "\" stroke-width=\""
              << fmt(stroke_width) << '"';
        if (dashed) body_ << " stroke-dasharray=\"5,4\"";
        body_ << "/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string& fill) {
        body_ << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\""
              << fmt(w) << "\" height=\"" << fmt(h) << "\" fill=\"" << fill
              << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    }

    void circle(double x, double y, double r, const std::string& fill) {
        body_ << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y)
              << "\" r=\"" << fmt(r) << "\" fill=\"" << fill
              << "\" fill-opacity=\"0.7\"/>\n";
    }

    void text(double x, double y, const std::string& s, int size = 12,
              const std::string& anchor = "start") {
        body_ << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
              << "\" font-size=\"" << size
              << "\" font-family=\"sans-serif\" text-anchor=\"" << anchor
              << "\">" << escape(s) << "</text>\n";
    }

    std::string finish() {
        body_ << "</svg>\n";
        return body_.str();
    }

private:
    int width_;
    int height_;
    std::ostringstream body_;
};

constexpr double kMarginLeft = 56;
constexpr double kMarginRight = 16;
constexpr double kMarginTop = 32;
constexpr double kMarginBottom = 44;

}  // namespace

std::string render_scatter(const std::vector<Series>& series,
                           const ScatterOptions& options) {
    Range rx, ry;
    bool any = false;
    for (const Series& s : series) {
        for (std::size_t i = 0; i < s.xs.size(); ++i) {
            if (!any) {
                rx = Range{s.xs[i], s.xs[i]};
                ry = Range{s.ys[i], s.ys[i]};
                any = true;
            } else {
                rx.include(s.xs[i]);
                ry.include(s.ys[i]);
            }
        }
    }
    if (options.identity_line && any) {
        // Square up the ranges so y = x is a diagonal.
        const double lo = std::min(rx.lo, ry.lo);
        const double hi = std::max(rx.hi, ry.hi);
        rx = ry = Range{lo, hi};
    }
    rx.pad();
    ry.pad();

    Canvas canvas(options.width, options.height);
    const double plot_w = options.width - kMarginLeft - kMarginRight;
    const double plot_h = options.height - kMarginTop - kMarginBottom;
    auto px = [&](double x) {
        return kMarginLeft + (x - rx.lo) / (rx.hi - rx.lo) * plot_w;
    };
    auto py = [&](double y) {
        return kMarginTop + plot_h - (y - ry.lo) / (ry.hi - ry.lo) * plot_h;
    };

    canvas.line(kMarginLeft, kMarginTop + plot_h, kMarginLeft + plot_w,
                kMarginTop + plot_h, "black");
    canvas.line(kMarginLeft, kMarginTop, kMarginLeft, kMarginTop + plot_h,
                "black");
    canvas.text(kMarginLeft, kMarginTop + plot_h + 16, fmt(rx.lo), 10);
    canvas.text(kMarginLeft + plot_w, kMarginTop + plot_h + 16, fmt(rx.hi), 10,
                "end");
    canvas.text(kMarginLeft - 4, kMarginTop + plot_h, fmt(ry.lo), 10, "end");
    canvas.text(kMarginLeft - 4, kMarginTop + 10, fmt(ry.hi), 10, "end");
    canvas.text(kMarginLeft + plot_w / 2, options.height - 8,
                options.x_label, 12, "middle");
    canvas.text(14, kMarginTop - 10, options.y_label, 12);
    canvas.text(options.width / 2.0, 18, options.title, 13, "middle");

    if (options.identity_line)
        canvas.line(px(rx.lo), py(rx.lo), px(rx.hi), py(rx.hi), "#888888", 1.0,
                    true);

    double legend_y = kMarginTop + 12;
    for (const Series& s : series) {
        for (std::size_t i = 0; i < s.xs.size(); ++i)
            canvas.circle(px(s.xs[i]), py(s.ys[i]), 3.0, s.color);
        if (!s.label.empty()) {
            canvas.circle(kMarginLeft + plot_w - 90, legend_y - 4, 3.5, s.color);
            canvas.text(kMarginLeft + plot_w - 80, legend_y, s.label, 11);
            legend_y += 16;
        }
    }
    return canvas.finish();
}

std::string render_histogram_grid(const std::vector<HistogramPanel>& panels,
                                  const HistogramGridOptions& options) {
    const int columns = std::max(1, options.columns);
    const int rows =
        static_cast<int>((panels.size() + columns - 1) / columns);
    const int title_h = options.title.empty() ? 0 : 26;
    Canvas canvas(columns * options.panel_width,
                  rows * options.panel_height + title_h);
    if (title_h > 0)
        canvas.text(columns * options.panel_width / 2.0, 17, options.title, 14,
                    "middle");

    for (std::size_t p = 0; p < panels.size(); ++p) {
        const HistogramPanel& panel = panels[p];
        const double ox =
            static_cast<double>(p % columns) * options.panel_width;
        const double oy =
            static_cast<double>(p / columns) * options.panel_height + title_h;
        const double left = ox + 36;
        const double bottom = oy + options.panel_height - 26;
        const double plot_w = options.panel_width - 48;
        const double plot_h = options.panel_height - 54;

        canvas.text(ox + options.panel_width / 2.0, oy + 14, panel.title, 11,
                    "middle");
        canvas.line(left, bottom, left + plot_w, bottom, "black");
        canvas.line(left, bottom - plot_h, left, bottom, "black");
        if (panel.values.empty()) continue;

        Range range{panel.values.front(), panel.values.front()};
        for (double v : panel.values) range.include(v);
        if (range.hi <= range.lo) range.hi = range.lo + 1e-12;

        const int bins = std::max(1, options.bins);
        std::vector<int> counts(bins, 0);
        for (double v : panel.values) {
            int b = static_cast<int>((v - range.lo) / (range.hi - range.lo) *
                                     bins);
            b = std::clamp(b, 0, bins - 1);
            ++counts[b];
        }
        const int peak = *std::max_element(counts.begin(), counts.end());
        const double bar_w = plot_w / bins;
        for (int b = 0; b < bins; ++b) {
            if (counts[b] == 0) continue;
            const double h = plot_h * counts[b] / peak;
            canvas.rect(left + b * bar_w, bottom - h, bar_w, h, panel.color);
        }
        canvas.text(left, bottom + 14, fmt(range.lo), 9);
        canvas.text(left + plot_w, bottom + 14, fmt(range.hi), 9, "end");
    }
    return canvas.finish();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw WriteFailure("cannot open file for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw WriteFailure("write failed: " + path);
}

}  // namespace pointssim::svg
