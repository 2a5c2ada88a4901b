#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "rph/metric.hpp"
#include "rph/rips.hpp"

namespace rph {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Bar {
    std::size_t dim = 0;
    double birth = 0.0;
    double death = kInfinity;

    bool infinite() const noexcept { return death == kInfinity; }
    double persistence() const noexcept { return death - birth; }

    friend bool operator==(const Bar&, const Bar&) = default;
    friend bool operator<(const Bar& a, const Bar& b) noexcept {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    }
};

/// Multiset of bars over Z2. Zero-persistence pairs are never stored.
struct PersistenceDiagram {
    std::vector<Bar> bars;

    /// Bars of one dimension.
    std::vector<Bar> in_dim(std::size_t dim) const;
    /// Sorts bars by (dim, birth, death) so that equal multisets compare equal.
    void canonicalize();
    friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

/// Z2 persistence of an explicit filtration by boundary-matrix column
/// reduction with clearing. Requires f.max_dim >= max_hom_dim + 1.
PersistenceDiagram persistent_homology(const Filtration& f, std::size_t max_hom_dim);

/// Number of bars of `dim` alive at t, i.e. birth <= t < death.
std::size_t betti_at_scale(const PersistenceDiagram& dgm, std::size_t dim, double t);

struct BettiProfile {
    std::size_t dim = 0;
    std::vector<std::pair<double, std::size_t>> values;  ///< (scale, betti) at every change point
};

BettiProfile betti_profile(const PersistenceDiagram& dgm, std::size_t dim);

/// Betti number of the Rips complex at fixed scale t from dense Z2 ranks.
/// Shares no code with the reduction; meant as a test oracle for n <= 10.
std::size_t brute_force_betti(const DistanceMatrix& d, std::size_t dim, double t, std::size_t max_dim);

struct DominantFeature {
    double birth = 0.0;
    double death = 0.0;
    double length = 0.0;
};

/// Finite bar of maximal persistence; ties go to smaller birth, then smaller death.
std::optional<DominantFeature> dominant_feature(const PersistenceDiagram& dgm, std::size_t dim);

}  // namespace rph
