#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "rph/metric.hpp"
#include "rph/persistence.hpp"

namespace rph::test {

inline PointCloud line(std::initializer_list<double> xs) {
    std::vector<std::vector<double>> rows;
    for (double x : xs) rows.push_back({x});
    return PointCloud(rows);
}

inline PointCloud unit_square() { return PointCloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

inline PointCloud random_cloud(std::mt19937_64& rng, std::size_t n, std::size_t dim, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    std::vector<double> c(n * dim);
    for (double& x : c) x = u(rng);
    return PointCloud(dim, std::move(c));
}

inline PersistenceDiagram sorted(PersistenceDiagram d) {
    d.canonicalize();
    return d;
}

}  // namespace rph::test
