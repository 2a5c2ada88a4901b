#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rph/metric.hpp"
#include "rph/persistence.hpp"

namespace rph {

struct SelectionConfig {
    double alpha1_init = 0.0;  ///< one-sided mode uses this as its single alpha
    double alpha2_init = 0.0;
    double step1 = 0.05;
    double step2 = 0.05;
    std::size_t hom_dim = 1;
    double tau_min = 0.0;  ///< edge-length units
    std::size_t max_iter = 10;
    std::optional<double> rips_threshold;  ///< empty: enclosing radius of each trimmed sample
    std::size_t max_dim = 2;
};

struct SelectionOutcome {
    PersistenceDiagram diagram;  ///< bars of dimension hom_dim only
    double alpha1 = 0.0;
    double alpha2 = 0.0;  ///< always 0 in one-sided mode
    std::vector<std::size_t> kept;
    std::size_t iterations_used = 0;
    bool threshold_met = false;
};

/// Asymmetric selection loop. At iteration t the proportions are
/// max(0, init - t * step); the first diagram holding a finite bar of
/// persistence >= tau_min is returned. After max_iter misses the diagram at
/// iteration max_iter is returned with iterations_used = max_iter.
SelectionOutcome select_asymmetric(const PointCloud& cloud, const SelectionConfig& cfg);

/// Same loop trimming only the largest average distances, with alpha1_init
/// and step1 as the single proportion and step.
SelectionOutcome select_one_sided(const PointCloud& cloud, const SelectionConfig& cfg);

}  // namespace rph
