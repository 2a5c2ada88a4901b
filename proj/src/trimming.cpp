#include "rph/trimming.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rph/error.hpp"

namespace rph {

void TrimSpec::validate() const {
    auto ok = [](double a) { return std::isfinite(a) && a >= 0.0 && a < 0.5; };
    if (!ok(alpha1) || !ok(alpha2))
        throw InputError("trimming proportions must lie in [0, 0.5), got (" + std::to_string(alpha1) + ", " +
                         std::to_string(alpha2) + ")");
}

std::size_t trim_count(double alpha, std::size_t n) {
    const auto scaled = static_cast<long long>(std::llround(alpha * 1e9));
    if (scaled <= 0) return 0;
    return static_cast<std::size_t>((static_cast<unsigned long long>(scaled) * n) / 1'000'000'000ULL);
}

std::vector<double> avg_pairwise_distances(const DistanceMatrix& d) {
    const std::size_t n = d.size();
    if (n < 2) throw InputError("average pairwise distance needs at least two points");
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) s += d(i, j);
        out[i] = s / static_cast<double>(n - 1);
    }
    return out;
}

std::vector<double> avg_pairwise_distances(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    if (n < 2) throw InputError("average pairwise distance needs at least two points");
    std::vector<double> out(n, 0.0);
    // Same summation order as the matrix overload, so results agree bitwise.
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) s += euclidean(cloud.point(i), cloud.point(j));
        out[i] = s / static_cast<double>(n - 1);
    }
    return out;
}

TrimResult trim_by_average(std::vector<double> avg_dists, std::size_t drop_low, std::size_t drop_high) {
    const std::size_t n = avg_dists.size();
    if (drop_low + drop_high >= n)
        throw InputError("trimming exhausts sample: removing " + std::to_string(drop_low + drop_high) + " of " +
                         std::to_string(n) + " points");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return avg_dists[a] < avg_dists[b] || (avg_dists[a] == avg_dists[b] && a < b);
    });

    TrimResult r;
    r.kept.assign(order.begin() + static_cast<std::ptrdiff_t>(drop_low),
                  order.end() - static_cast<std::ptrdiff_t>(drop_high));
    std::sort(r.kept.begin(), r.kept.end());
    r.lower_threshold = avg_dists[order[drop_low]];
    r.upper_threshold = avg_dists[order[n - drop_high - 1]];
    r.avg_dists = std::move(avg_dists);
    return r;
}

TrimResult trim_asymmetric(const DistanceMatrix& d, const TrimSpec& spec) {
    spec.validate();
    const std::size_t n = d.size();
    auto avg = avg_pairwise_distances(d);
    return trim_by_average(std::move(avg), trim_count(spec.alpha2, n), trim_count(spec.alpha1, n));
}

TrimResult trim_one_sided(const DistanceMatrix& d, double alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha >= 1.0)
        throw InputError("one-sided trimming proportion must lie in [0, 1)");
    const std::size_t n = d.size();
    auto avg = avg_pairwise_distances(d);
    return trim_by_average(std::move(avg), 0, trim_count(alpha, n));
}

std::vector<std::size_t> reference_population_trim(const PointCloud& reference, const TrimSpec& spec) {
    spec.validate();
    const std::size_t n = reference.size();
    auto avg = avg_pairwise_distances(reference);
    return trim_by_average(std::move(avg), trim_count(spec.alpha2, n), trim_count(spec.alpha1, n)).kept;
}

}  // namespace rph
