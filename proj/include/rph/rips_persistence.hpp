#pragma once

#include <cstddef>
#include <optional>

#include "rph/metric.hpp"
#include "rph/persistence.hpp"

namespace rph {

/// Rips persistence in dimensions 0..max_hom_dim without materialising the
/// filtration. Simplices are addressed by combinatorial index and reduced as
/// coboundaries with clearing and apparent-pair shortcuts. Produces the same
/// diagram as persistent_homology(rips_filtration(d, max_hom_dim + 1, t)).
PersistenceDiagram rips_persistence(const DistanceMatrix& d, std::size_t max_hom_dim,
                                    std::optional<double> threshold = std::nullopt);

}  // namespace rph
