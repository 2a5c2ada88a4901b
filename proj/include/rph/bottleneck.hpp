#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rph/metric.hpp"
#include "rph/persistence.hpp"

namespace rph {

/// One edge of a matching. `a` and `b` index the bars of the chosen dimension
/// (PersistenceDiagram::in_dim order); an empty side means the diagonal.
struct MatchedPair {
    std::optional<std::size_t> a;
    std::optional<std::size_t> b;
    double cost = 0.0;
};

struct BottleneckResult {
    double value = 0.0;
    /// Absent when the infinite-bar counts differ and no matching exists.
    std::optional<std::vector<MatchedPair>> matching;
};

/// Bottleneck distance restricted to `dim`. Finite bars match each other at
/// L-infinity cost or go to the diagonal at half their persistence. Infinite
/// bars match only each other, in birth order; unequal counts give +inf.
BottleneckResult bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, std::size_t dim);

struct StabilityGap {
    double w = 0.0;  ///< bottleneck distance of the Rips diagrams in `dim`
    double h = 0.0;  ///< Hausdorff distance of the clouds
};

/// Rips diagrams at the default threshold. Requires max_dim >= dim + 1.
/// The stability theorem gives w <= 2h in edge-length units.
StabilityGap stability_gap(const PointCloud& a, const PointCloud& b, std::size_t dim, std::size_t max_dim);

}  // namespace rph
