#include <cmath>
#include <random>

#include "doctest.h"
#include "rph/error.hpp"
#include "rph/metric.hpp"
#include "test_support.hpp"

using namespace rph;
using rph::test::line;

TEST_CASE("distance_matrix on small clouds") {
    auto d = distance_matrix(line({0, 3}));
    CHECK(d(0, 1) == 3.0);
    CHECK(d(1, 0) == 3.0);

    auto d2 = distance_matrix(PointCloud({{0, 0}, {3, 4}}));
    CHECK(d2(0, 1) == 5.0);

    std::mt19937_64 rng(7);
    auto d3 = distance_matrix(test::random_cloud(rng, 12, 3));
    for (std::size_t i = 0; i < d3.size(); ++i) CHECK(d3(i, i) == 0.0);
}

TEST_CASE("point cloud rejects invalid input") {
    CHECK_THROWS_AS(PointCloud({{0.0, NAN}}), InputError);
    CHECK_THROWS_AS(PointCloud({{0.0, INFINITY}}), InputError);
    CHECK_THROWS_AS(PointCloud({{0.0, 1.0}, {2.0}}), InputError);
    CHECK_THROWS_AS(PointCloud(std::vector<std::vector<double>>{}), InputError);
}

TEST_CASE("distance matrix construction validates entries") {
    CHECK_NOTHROW(DistanceMatrix(2, {0, 1, 1, 0}));
    CHECK_THROWS_AS(DistanceMatrix(2, {0, 1, 2, 0}), InputError);
    CHECK_THROWS_AS(DistanceMatrix(2, {1, 1, 1, 0}), InputError);
    CHECK_THROWS_AS(DistanceMatrix(2, {0, -1, -1, 0}), InputError);
    CHECK_THROWS_AS(DistanceMatrix(2, {0, 1, 1}), InputError);
}

TEST_CASE("dense storage limit") {
    std::vector<double> coords(kMaxDensePoints + 1, 0.0);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = static_cast<double>(i);
    CHECK_THROWS_AS(distance_matrix(PointCloud(1, coords)), InputError);
}

TEST_CASE("hausdorff examples") {
    CHECK(hausdorff(line({0}), line({1})) == 1.0);
    CHECK(hausdorff(line({0, 2}), line({0, 1, 2})) == 1.0);
    std::mt19937_64 rng(3);
    auto a = test::random_cloud(rng, 20, 2);
    CHECK(hausdorff(a, a) == 0.0);
    CHECK_THROWS_AS(hausdorff(a, line({0})), InputError);
    CHECK_THROWS_AS(hausdorff(PointCloud{}, a), InputError);
}

TEST_CASE("hausdorff metric properties on random clouds") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::size_t> size(1, 25);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = test::random_cloud(rng, size(rng), 2);
        auto b = test::random_cloud(rng, size(rng), 2);
        auto c = test::random_cloud(rng, size(rng), 2);
        CHECK(hausdorff(a, b) == hausdorff(b, a));
        CHECK(hausdorff(a, b) <= hausdorff(a, c) + hausdorff(c, b) + 1e-12);

        std::vector<double> ab = a.coords();
        ab.insert(ab.end(), b.coords().begin(), b.coords().end());
        CHECK(hausdorff(a, PointCloud(2, ab)) <= hausdorff(a, b) + 1e-12);
    }
}

TEST_CASE("distance matrix satisfies the triangle inequality") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = distance_matrix(test::random_cloud(rng, 15, 4, 10.0));
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j)
                for (std::size_t k = 0; k < d.size(); ++k)
                    CHECK(d(i, j) <= (d(i, k) + d(k, j)) * (1 + 1e-9));
    }
}

TEST_CASE("enclosing radius") {
    CHECK(enclosing_radius(distance_matrix(line({0, 1, 2}))) == 1.0);
    CHECK(enclosing_radius(distance_matrix(line({5}))) == 0.0);
    CHECK(enclosing_radius(distance_matrix(test::unit_square())) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}
