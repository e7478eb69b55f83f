#include "pointssim/measures.hpp"

#include <algorithm>
#include <numeric>

namespace pointssim {

long long QuadratGrid::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), 0LL);
}

double anchor_count(const MarkedPointProcess& mpp) {
    return static_cast<double>(mpp.size());
}

double area_coverage(const MarkedPointProcess& mpp) {
    const BaseFrame& f = mpp.frame();
    // radius^2 in base units = squared pixel value * cell_x^2. Summing the
    // integer squares first keeps the result independent of anchor order.
    const double sum_sq = static_cast<double>(mpp.radius_squared_px_sum()) *
                          (f.cell_x * f.cell_x);
    return sum_sq / (f.extent_x * f.extent_y);
}

double anchors_per_object(const MarkedPointProcess& mpp) {
    if (mpp.empty()) return 0.0;
    return static_cast<double>(mpp.size()) / mpp.max_label();
}

QuadratGrid quadrat_counts(const MarkedPointProcess& mpp, int divisions) {
    if (divisions < 1) throw InvalidConfig("quadrat divisions must be >= 1");
    QuadratGrid grid{divisions,
                     std::vector<long long>(
                         static_cast<std::size_t>(divisions) * divisions, 0)};
    const BaseFrame& f = mpp.frame();
    const double wx = f.extent_x / divisions;
    const double wy = f.extent_y / divisions;
    for (std::size_t i = 0; i < mpp.size(); ++i) {
        int qx = static_cast<int>(mpp.x(i) / wx);
        int qy = static_cast<int>(mpp.y(i) / wy);
        qx = std::clamp(qx, 0, divisions - 1);  // right/top boundary -> last
        qy = std::clamp(qy, 0, divisions - 1);
        ++grid.counts[static_cast<std::size_t>(qy) * divisions + qx];
    }
    return grid;
}

double spatial_variance_irregularity(const MarkedPointProcess& mpp,
                                     int divisions) {
    const long long n = static_cast<long long>(mpp.size());
    if (n == 0) return 0.0;
    const QuadratGrid grid = quadrat_counts(mpp, divisions);
    const long long m = static_cast<long long>(grid.counts.size());

    // Population variance over the M quadrat counts with mean n/M:
    //   s^2 = (M * sum(q^2) - n^2) / M^2,
    // kept in integers so the value is exact and order-independent. The
    // Poisson reference variance is lambda|B| = n/M, so
    //   lambda|B| / s^2 = n * M / (M * sum(q^2) - n^2).
    long long sum_sq = 0;
    for (long long q : grid.counts) sum_sq += q * q;
    const long long numerator = m * sum_sq - n * n;
    if (numerator <= 0) return 0.0;  // s^2 == 0: perfectly regular
    const double ratio = static_cast<double>(n) * static_cast<double>(m) /
                         static_cast<double>(numerator);
    return 1.0 / (1.0 + ratio);
}

SummaryVector measures_of(const MarkedPointProcess& mpp, int divisions) {
    return SummaryVector{anchor_count(mpp), area_coverage(mpp),
                         anchors_per_object(mpp),
                         spatial_variance_irregularity(mpp, divisions)};
}

SummaryVector summarize(const BinaryImage& img, const BaseFrame& frame,
                        int divisions) {
    return measures_of(extract(img, frame), divisions);
}

}  // namespace pointssim
