#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rph/metric.hpp"

namespace rph {

using Vertex = std::uint32_t;

/// Default cap on the number of simplices an explicit filtration may hold.
inline constexpr std::size_t kDefaultSimplexBudget = 50'000'000;

struct Simplex {
    std::vector<Vertex> vertices;  ///< strictly increasing
    double value = 0.0;            ///< longest edge, in edge-length units

    std::size_t dim() const noexcept { return vertices.size() - 1; }
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Filtration order: value, then dimension, then lexicographic vertices.
bool filtration_less(const Simplex& a, const Simplex& b) noexcept;

struct Filtration {
    std::vector<Simplex> simplices;  ///< in filtration order
    std::size_t n_vertices = 0;
    std::size_t max_dim = 0;
    double threshold = 0.0;
};

/// Vietoris-Rips (flag) filtration up to `max_dim`. Filtration values are
/// edge lengths: a simplex enters with its longest edge. With no threshold the
/// enclosing radius is used. Throws ResourceError when the simplex count
/// would exceed `budget`.
Filtration rips_filtration(const DistanceMatrix& d, std::size_t max_dim, std::optional<double> threshold = std::nullopt,
                           std::size_t budget = kDefaultSimplexBudget);

/// Debug dump, one "value dim v0 v1 ..." line per simplex.
void write_filtration(std::ostream& os, const Filtration& f);

}  // namespace rph
