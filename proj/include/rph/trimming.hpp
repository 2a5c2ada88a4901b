#pragma once

#include <cstddef>
#include <vector>

#include "rph/metric.hpp"

namespace rph {

/// Asymmetric trimming proportions: alpha1 trims the largest average
/// distances, alpha2 the smallest. Both lie in [0, 1/2).
struct TrimSpec {
    double alpha1 = 0.0;
    double alpha2 = 0.0;

    /// Throws InputError unless both proportions lie in [0, 1/2).
    void validate() const;
};

/// floor(alpha * n), with alpha first rounded to 1e-9 so that values such as
/// 0.2 * 5 do not lose a unit to binary representation error.
std::size_t trim_count(double alpha, std::size_t n);

struct TrimResult {
    std::vector<std::size_t> kept;  ///< strictly increasing original indices
    std::vector<double> avg_dists;  ///< per original index
    double lower_threshold = 0.0;   ///< smallest kept average distance rank value
    double upper_threshold = 0.0;   ///< largest kept average distance rank value
};

/// Mean distance from each point to the other n - 1 points.
std::vector<double> avg_pairwise_distances(const DistanceMatrix& d);
/// Same quantity computed from coordinates without materialising the matrix.
std::vector<double> avg_pairwise_distances(const PointCloud& cloud);

/// Drop floor(alpha2 n) points of smallest and floor(alpha1 n) of largest
/// average distance. Ties rank by original index: the bottom cut takes lower
/// indices first, the top cut takes higher indices first.
TrimResult trim_asymmetric(const DistanceMatrix& d, const TrimSpec& spec);
TrimResult trim_one_sided(const DistanceMatrix& d, double alpha);

/// Trimming driven by a precomputed average-distance vector.
TrimResult trim_by_average(std::vector<double> avg_dists, std::size_t drop_low, std::size_t drop_high);

/// Trimmed support of a large clean reference sample, standing in for the
/// population trimmed support. Returns kept indices into `reference`.
std::vector<std::size_t> reference_population_trim(const PointCloud& reference, const TrimSpec& spec);

}  // namespace rph
