#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rph/error.hpp"
#include "rph/random.hpp"
#include "rph/selection.hpp"
#include "rph/synth.hpp"
#include "rph/trimming.hpp"

using namespace rph;

namespace {

bool witness(const SelectionOutcome& o, double tau) {
    return std::any_of(o.diagram.bars.begin(), o.diagram.bars.end(),
                       [&](const Bar& b) { return !b.infinite() && b.persistence() >= tau; });
}

// unit circle plus a tenth of points far out at Cauchy-tailed radii
PointCloud circle_with_far_outliers(std::uint64_t seed) {
    auto circle = gen_uniform_circle(90, seed);
    std::vector<double> c(circle.coords().begin(), circle.coords().end());
    Rng rng(seed, 100);
    for (int i = 0; i < 10; ++i) {
        const double t = rng.uniform(0.0, 2 * std::numbers::pi);
        const double r = 4.0 + std::abs(std::tan(std::numbers::pi * (rng.uniform() - 0.5)));
        c.push_back(r * std::cos(t));
        c.push_back(r * std::sin(t));
    }
    return PointCloud(2, std::move(c));
}

}  // namespace

TEST_CASE("clean circle succeeds immediately") {
    auto cloud = gen_uniform_circle(60, 1);
    SelectionConfig cfg;
    cfg.tau_min = 0.5;
    auto o = select_asymmetric(cloud, cfg);
    CHECK(o.threshold_met);
    CHECK(o.iterations_used == 0);
    CHECK(o.alpha1 == 0.0);
    CHECK(o.alpha2 == 0.0);
    CHECK(o.kept.size() == 60);
    CHECK(witness(o, 0.5));

    auto s = select_one_sided(cloud, cfg);
    CHECK(s.threshold_met);
    CHECK(s.iterations_used == 0);
}

TEST_CASE("unreachable threshold runs the full loop") {
    auto cloud = gen_case_study_1(2);
    SelectionConfig cfg;
    cfg.alpha1_init = 0.2;
    cfg.alpha2_init = 0.1;
    cfg.step1 = cfg.step2 = 0.05;
    cfg.tau_min = 1e12;
    cfg.max_iter = 3;
    auto o = select_asymmetric(cloud, cfg);
    CHECK_FALSE(o.threshold_met);
    CHECK(o.iterations_used == 3);
    CHECK(o.alpha1 == std::max(0.0, 0.2 - 3 * 0.05));
    CHECK(o.alpha2 == 0.0);
    CHECK(o.kept.size() == 200 - trim_count(o.alpha1, 200));

    SelectionConfig one;
    one.alpha1_init = 0.3;
    one.step1 = 0.1;
    one.tau_min = 1e12;
    one.max_iter = 2;
    auto s = select_one_sided(cloud, one);
    CHECK_FALSE(s.threshold_met);
    CHECK(s.iterations_used == 2);
    CHECK(s.alpha1 == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(s.alpha1 == std::max(0.0, 0.3 - 2 * 0.1));
    CHECK(s.kept.size() == 180);
}

TEST_CASE("literal loop property") {
    auto cloud = gen_case_study_1(3);
    for (std::size_t T : {1u, 2u, 5u, 9u}) {
        SelectionConfig cfg;
        cfg.alpha1_init = 0.3;
        cfg.alpha2_init = 0.08;
        cfg.step1 = 0.07;
        cfg.step2 = 0.03;
        cfg.tau_min = 1e12;
        cfg.max_iter = T;
        auto o = select_asymmetric(cloud, cfg);
        CHECK(o.iterations_used == T);
        CHECK(o.alpha1 == std::max(0.0, 0.3 - double(T) * 0.07));
        CHECK(o.alpha2 == std::max(0.0, 0.08 - double(T) * 0.03));
    }
}

TEST_CASE("determinism and witness") {
    auto cloud = gen_case_study_1(4);
    SelectionConfig cfg;
    cfg.alpha1_init = 0.3;
    cfg.alpha2_init = 0.08;
    cfg.tau_min = 0.6;
    auto a = select_asymmetric(cloud, cfg);
    auto b = select_asymmetric(cloud, cfg);
    CHECK(a.diagram == b.diagram);
    CHECK(a.kept == b.kept);
    CHECK(a.iterations_used == b.iterations_used);
    if (a.threshold_met) CHECK(witness(a, cfg.tau_min));
    for (const auto& bar : a.diagram.bars) CHECK(bar.dim == 1);
}

TEST_CASE("case1 selection reaches tau 0.9") {
    int met = 0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) {
        SelectionConfig cfg;
        cfg.alpha1_init = 0.3;
        cfg.alpha2_init = 0.08;
        cfg.tau_min = 0.9;
        cfg.max_iter = 5;
        auto o = select_asymmetric(gen_case_study_1(static_cast<std::uint64_t>(s)), cfg);
        if (o.threshold_met && o.iterations_used == 0) {
            ++met;
            CHECK(witness(o, 0.9));
        }
    }
    CHECK(met * 2 > seeds);
}

TEST_CASE("one-sided selection with far outliers") {
    int met = 0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) {
        SelectionConfig cfg;
        cfg.alpha1_init = 0.15;
        cfg.step1 = 0.05;
        cfg.tau_min = 0.8;
        cfg.max_iter = 3;
        auto o = select_one_sided(circle_with_far_outliers(static_cast<std::uint64_t>(s)), cfg);
        if (o.threshold_met) {
            ++met;
            CHECK(witness(o, 0.8));
        }
    }
    CHECK(met * 2 > seeds);
}

TEST_CASE("config validation") {
    auto cloud = gen_uniform_circle(20, 1);
    SelectionConfig ok;
    ok.tau_min = 1.0;
    auto bad = ok;
    bad.max_iter = 0;
    CHECK_THROWS_AS(select_asymmetric(cloud, bad), InputError);
    bad = ok;
    bad.tau_min = 0.0;
    CHECK_THROWS_AS(select_asymmetric(cloud, bad), InputError);
    bad = ok;
    bad.alpha1_init = 0.5;
    CHECK_THROWS_AS(select_asymmetric(cloud, bad), InputError);
    CHECK_NOTHROW(select_one_sided(cloud, bad));
    bad.alpha1_init = 1.0;
    CHECK_THROWS_AS(select_one_sided(cloud, bad), InputError);
    bad = ok;
    bad.step2 = 0.0;
    CHECK_THROWS_AS(select_asymmetric(cloud, bad), InputError);
    bad = ok;
    bad.max_dim = 1;
    CHECK_THROWS_AS(select_asymmetric(cloud, bad), InputError);
}
