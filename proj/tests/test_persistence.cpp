#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "rph/error.hpp"
#include "rph/persistence.hpp"
#include "rph/rips.hpp"
#include "rph/rips_persistence.hpp"
#include "test_support.hpp"

using namespace rph;

namespace {

PersistenceDiagram explicit_ph(const DistanceMatrix& d, std::size_t k, std::optional<double> t = std::nullopt) {
    return persistent_homology(rips_filtration(d, k + 1, t), k);
}

PersistenceDiagram square_dgm() { return explicit_ph(distance_matrix(test::unit_square()), 1, 2.0); }

}  // namespace

TEST_CASE("square diagram") {
    auto dgm = square_dgm();
    auto h0 = dgm.in_dim(0);
    REQUIRE(h0.size() == 4);
    CHECK(std::count(h0.begin(), h0.end(), Bar{0, 0.0, 1.0}) == 3);
    CHECK(std::count(h0.begin(), h0.end(), Bar{0, 0.0, kInfinity}) == 1);
    auto h1 = dgm.in_dim(1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0] == Bar{1, 1.0, std::sqrt(2.0)});
}

TEST_CASE("single point") {
    DistanceMatrix d(1, {0});
    auto dgm = explicit_ph(d, 1);
    REQUIRE(dgm.bars.size() == 1);
    CHECK(dgm.bars[0] == Bar{0, 0.0, kInfinity});
    CHECK(rips_persistence(d, 1) == dgm);
}

TEST_CASE("equilateral triangle has no H1") {
    DistanceMatrix d(3, {0, 1, 1, 1, 0, 1, 1, 1, 0});
    auto dgm = explicit_ph(d, 1, 2.0);
    PersistenceDiagram want{{{0, 0, 1}, {0, 0, 1}, {0, 0, kInfinity}}};
    CHECK(dgm == test::sorted(want));
    CHECK(dgm.in_dim(1).empty());
    CHECK(rips_persistence(d, 1, 2.0) == dgm);
}

TEST_CASE("betti at scale") {
    auto dgm = square_dgm();
    CHECK(betti_at_scale(dgm, 1, 1.2) == 1);
    CHECK(betti_at_scale(dgm, 1, 1.5) == 0);
    CHECK(betti_at_scale(dgm, 0, 1e9) == 1);
    CHECK(betti_at_scale(dgm, 0, 0.0) == 4);
    CHECK(betti_at_scale(dgm, 1, 1.0) == 1);  // birth inclusive
    CHECK(betti_at_scale(dgm, 1, std::sqrt(2.0)) == 0);  // death exclusive

    auto p = betti_profile(dgm, 0);
    REQUIRE(p.values.size() == 2);
    CHECK(p.values[0] == std::pair<double, std::size_t>{0.0, 4});
    CHECK(p.values[1] == std::pair<double, std::size_t>{1.0, 1});
}

TEST_CASE("brute-force betti examples") {
    auto d = distance_matrix(test::unit_square());
    CHECK(brute_force_betti(d, 1, 1.2, 2) == 1);
    CHECK(brute_force_betti(d, 1, 1.5, 2) == 0);
    CHECK(brute_force_betti(d, 0, 0.0, 1) == 4);
    CHECK(brute_force_betti(d, 0, 1.0, 1) == 1);
    std::mt19937_64 rng(3);
    CHECK_THROWS_AS(brute_force_betti(distance_matrix(test::random_cloud(rng, 11, 2)), 0, 0.1, 1), InputError);
    CHECK_THROWS_AS(brute_force_betti(d, 1, 1.0, 1), InputError);
}

TEST_CASE("dominant feature") {
    auto f = dominant_feature(square_dgm(), 1);
    REQUIRE(f);
    CHECK(f->birth == 1.0);
    CHECK(f->death == std::sqrt(2.0));
    CHECK(f->length == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-15));

    CHECK_FALSE(dominant_feature(PersistenceDiagram{}, 1));

    PersistenceDiagram two{{{1, 1, 2}, {1, 0, 1.5}}};
    f = dominant_feature(two, 1);
    REQUIRE(f);
    CHECK(f->birth == 0.0);
    CHECK(f->death == 1.5);
    CHECK(f->length == 1.5);

    PersistenceDiagram tie{{{1, 2, 3}, {1, 1, 2}, {1, 0.5, kInfinity}}};
    f = dominant_feature(tie, 1);
    REQUIRE(f);
    CHECK(f->birth == 1.0);
}

TEST_CASE("reduction matches brute-force betti") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> nd(3, 8);
    std::uniform_real_distribution<double> tu(0.05, 2.0);
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = nd(rng);
        auto d = distance_matrix(test::random_cloud(rng, n, 2));
        for (std::size_t k : {0u, 1u}) {
            // full complex so that no bar is truncated
            auto dgm = explicit_ph(d, k, 10.0);
            auto imp = rips_persistence(d, k, 10.0);
            CHECK(imp == dgm);
            for (int s = 0; s < 4; ++s) {
                const double t = tu(rng);
                CHECK(betti_at_scale(dgm, k, t) == brute_force_betti(d, k, t, k + 1));
                ++checked;
            }
        }
    }
    CHECK(checked >= 800);
}

TEST_CASE("boundary of boundary vanishes") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        auto d = distance_matrix(test::random_cloud(rng, 8, 3));
        auto f = rips_filtration(d, 3, 10.0);
        for (const auto& s : f.simplices) {
            if (s.dim() < 2) continue;
            std::map<std::vector<Vertex>, int> coeff;
            for (std::size_t a = 0; a < s.vertices.size(); ++a) {
                auto face = s.vertices;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(a));
                for (std::size_t b = 0; b < face.size(); ++b) {
                    auto ff = face;
                    ff.erase(ff.begin() + static_cast<std::ptrdiff_t>(b));
                    coeff[ff] ^= 1;
                }
            }
            for (const auto& [ff, c] : coeff) CHECK(c == 0);
        }
    }
}

TEST_CASE("pairing sanity") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        auto d = distance_matrix(test::random_cloud(rng, 15, 2));
        auto dgm = explicit_ph(d, 2);
        std::size_t inf0 = 0;
        for (const auto& b : dgm.bars) {
            CHECK(b.birth >= 0.0);
            CHECK(b.death > b.birth);
            CHECK(b.dim <= 2);
            if (b.dim == 0) CHECK(b.birth == 0.0);
            if (b.dim == 0 && b.infinite()) ++inf0;
        }
        // enclosing radius keeps the complex connected
        CHECK(inf0 == 1);
    }
}

TEST_CASE("permutation invariance") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 10; ++trial) {
        auto cloud = test::random_cloud(rng, 20, 2);
        std::vector<std::size_t> perm(cloud.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto shuffled = cloud.subset(perm);
        auto a = explicit_ph(distance_matrix(cloud), 1);
        auto b = explicit_ph(distance_matrix(shuffled), 1);
        CHECK(a == b);
        CHECK(rips_persistence(distance_matrix(shuffled), 1) == a);
    }
}

TEST_CASE("scaling covariance") {
    std::mt19937_64 rng(25);
    // powers of two keep the scaling exact in floating point
    for (double c : {0.5, 2.0, 8.0}) {
        auto cloud = test::random_cloud(rng, 20, 2);
        std::vector<double> scaled(cloud.coords().begin(), cloud.coords().end());
        for (double& x : scaled) x *= c;
        auto a = explicit_ph(distance_matrix(cloud), 1);
        auto b = explicit_ph(distance_matrix(PointCloud(2, scaled)), 1);
        REQUIRE(a.bars.size() == b.bars.size());
        for (std::size_t i = 0; i < a.bars.size(); ++i) {
            CHECK(b.bars[i].birth == a.bars[i].birth * c);
            CHECK(b.bars[i].death == a.bars[i].death * c);
        }
    }
    // and approximately for arbitrary factors
    auto cloud = test::random_cloud(rng, 20, 2);
    std::vector<double> scaled(cloud.coords().begin(), cloud.coords().end());
    for (double& x : scaled) x *= 3.7;
    auto a = explicit_ph(distance_matrix(cloud), 1);
    auto b = explicit_ph(distance_matrix(PointCloud(2, scaled)), 1);
    REQUIRE(a.bars.size() == b.bars.size());
    for (std::size_t i = 0; i < a.bars.size(); ++i)
        CHECK(b.bars[i].birth == doctest::Approx(a.bars[i].birth * 3.7).epsilon(1e-12));
}

TEST_CASE("implicit engine agrees with explicit reduction") {
    std::mt19937_64 rng(26);
    std::uniform_real_distribution<double> tu(0.3, 2.5);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 5 + static_cast<std::size_t>(trial % 25);
        const std::size_t dim = 2 + static_cast<std::size_t>(trial % 2);
        auto d = distance_matrix(test::random_cloud(rng, n, dim));
        const std::size_t k = static_cast<std::size_t>(trial % 3);
        std::optional<double> t;
        if (trial % 2) t = tu(rng);
        CAPTURE(trial);
        CHECK(rips_persistence(d, k, t) == explicit_ph(d, k, t));
    }
}

TEST_CASE("implicit engine with tied distances") {
    // grid points give many equal edge lengths
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) rows.push_back({double(i), double(j)});
    auto d = distance_matrix(PointCloud(rows));
    for (std::size_t k : {0u, 1u, 2u}) CHECK(rips_persistence(d, k, 3.0) == explicit_ph(d, k, 3.0));

    // octahedron: one H2 class
    PointCloud oct({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
    auto od = distance_matrix(oct);
    auto dgm = explicit_ph(od, 2, 3.0);
    auto h2 = dgm.in_dim(2);
    REQUIRE(h2.size() == 1);
    CHECK(h2[0] == Bar{2, std::sqrt(2.0), 2.0});
    CHECK(rips_persistence(od, 2, 3.0) == dgm);
}

TEST_CASE("preconditions") {
    auto d = distance_matrix(test::unit_square());
    CHECK_THROWS_AS(persistent_homology(rips_filtration(d, 1, 2.0), 1), InputError);
    CHECK_NOTHROW(persistent_homology(rips_filtration(d, 2, 2.0), 1));
}

TEST_CASE("truncated filtration keeps infinite higher bars") {
    // square cut below the diagonals: the 4-cycle never dies
    auto d = distance_matrix(test::unit_square());
    auto dgm = explicit_ph(d, 1, 1.2);
    auto h1 = dgm.in_dim(1);
    REQUIRE(h1.size() == 1);
    CHECK(h1[0].infinite());
    CHECK_FALSE(dominant_feature(dgm, 1));
    CHECK(rips_persistence(d, 1, 1.2) == dgm);
}
