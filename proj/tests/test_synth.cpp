#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rph/error.hpp"
#include "rph/random.hpp"
#include "rph/synth.hpp"

using namespace rph;

TEST_CASE("rng is reproducible and stream-separated") {
    Rng a(42, 0), b(42, 0), c(42, 1), e(43, 0);
    for (int i = 0; i < 100; ++i) {
        const double x = a.uniform();
        CHECK(x == b.uniform());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    CHECK(a.uniform() != c.uniform());
    CHECK(Rng(42, 0).uniform() != e.uniform());
    // pinned first draw; any change here breaks every stored cloud
    Rng pinned(0, 0);
    CHECK(pinned.uniform() == 0x1.7b5d74d745c28p-1);
    CHECK(pinned.normal(0, 1) == 0x1.0c59caf5602b7p-1);
}

TEST_CASE("normal sampler moments") {
    Rng r(1, 0);
    const int n = 200000;
    double s = 0, s2 = 0;
    for (int i = 0; i < n; ++i) {
        const double z = r.normal(2.0, 3.0);
        s += z;
        s2 += z * z;
    }
    const double mean = s / n, var = s2 / n - mean * mean;
    CHECK(mean == doctest::Approx(2.0).epsilon(0.01 * 3));
    CHECK(var == doctest::Approx(9.0).epsilon(0.02));
}

TEST_CASE("case study 1 shape") {
    auto lc = gen_mixture(case_study_1_spec(), 3);
    CHECK(lc.cloud.size() == 200);
    CHECK(lc.cloud.dim() == 2);
    CHECK(std::count(lc.labels.begin(), lc.labels.end(), 0u) == 120);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(std::count(lc.labels.begin(), lc.labels.end(), k) == 16);
    // the fifth cluster is the one centred at the origin
    CHECK(case_study_1_spec().outliers[4].center == std::vector<double>{0, 0});
    CHECK(gen_case_study_1(3) == lc.cloud);
    CHECK(gen_case_study_1(3) == gen_case_study_1(3));
    CHECK_FALSE(gen_case_study_1(3) == gen_case_study_1(4));
}

TEST_CASE("case study 2 shape and radii") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
        auto lc = gen_mixture(case_study_2_spec(), seed);
        CHECK(lc.cloud.size() == 400);
        CHECK(lc.cloud.dim() == 3);
        CHECK(std::count(lc.labels.begin(), lc.labels.end(), 0u) == 265);
        for (std::size_t k = 1; k <= 9; ++k) CHECK(std::count(lc.labels.begin(), lc.labels.end(), k) == 15);
        double sum = 0;
        for (std::size_t i = 0; i < 265; ++i) {
            auto p = lc.cloud.point(i);
            sum += std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
        }
        CHECK(std::abs(sum / 265 - 1.0) <= 0.05);
    }
    CHECK(gen_case_study_2(9) == gen_case_study_2(9));
}

TEST_CASE("uniform circle") {
    auto c = gen_uniform_circle(37, 5);
    CHECK(c.size() == 37);
    for (std::size_t i = 0; i < c.size(); ++i) {
        auto p = c.point(i);
        CHECK(std::abs(std::hypot(p[0], p[1]) - 1.0) <= 1e-12);
    }
    CHECK(gen_uniform_circle(37, 5) == c);
    CHECK_THROWS_AS(gen_uniform_circle(0, 5), InputError);
}

TEST_CASE("angle marginal passes Kolmogorov-Smirnov") {
    const std::size_t n = 10000;
    auto c = gen_uniform_circle(n, 11);
    std::vector<double> u(n);
    for (std::size_t i = 0; i < n; ++i) {
        double t = std::atan2(c.point(i)[1], c.point(i)[0]);
        if (t < 0) t += 2 * std::numbers::pi;
        u[i] = t / (2 * std::numbers::pi);
    }
    std::sort(u.begin(), u.end());
    double ks = 0;
    for (std::size_t i = 0; i < n; ++i)
        ks = std::max({ks, (i + 1.0) / n - u[i], u[i] - double(i) / n});
    // asymptotic 1% critical value
    CHECK(ks < 1.6276 / std::sqrt(double(n)));
}

TEST_CASE("cluster covariance") {
    for (const auto& spec : {case_study_1_spec(), case_study_2_spec()}) {
        const std::size_t dim = spec.signal.ambient_dim();
        for (std::size_t k = 0; k < spec.outliers.size(); ++k) {
            std::vector<double> acc(dim * dim, 0.0);
            const int seeds = 100;
            for (int s = 0; s < seeds; ++s) {
                auto lc = gen_mixture(spec, static_cast<std::uint64_t>(s));
                std::vector<std::size_t> idx;
                for (std::size_t i = 0; i < lc.labels.size(); ++i)
                    if (lc.labels[i] == k + 1) idx.push_back(i);
                std::vector<double> mean(dim, 0.0);
                for (auto i : idx)
                    for (std::size_t a = 0; a < dim; ++a) mean[a] += lc.cloud.point(i)[a] / double(idx.size());
                for (auto i : idx)
                    for (std::size_t a = 0; a < dim; ++a)
                        for (std::size_t b = 0; b < dim; ++b)
                            acc[a * dim + b] += (lc.cloud.point(i)[a] - mean[a]) * (lc.cloud.point(i)[b] - mean[b]) /
                                                double(idx.size() - 1) / seeds;
            }
            const double v = spec.outliers[k].variance;
            for (std::size_t a = 0; a < dim; ++a)
                for (std::size_t b = 0; b < dim; ++b) {
                    if (a == b) CHECK(std::abs(acc[a * dim + b] - v) <= 0.3 * v);
                    else CHECK(std::abs(acc[a * dim + b]) <= 0.3 * v);
                }
        }
    }
}

TEST_CASE("mixture validation and labels") {
    MixtureSpec s;
    s.n_signal = 10;
    s.signal = {SignalKind::noisy_circle, 1.0, 0.01};
    auto lc = gen_mixture(s, 1);
    CHECK(std::all_of(lc.labels.begin(), lc.labels.end(), [](std::size_t l) { return l == 0; }));

    s.n_outlier = 4;
    s.outliers = {{{0, 0}, 0.1, 3}};
    CHECK_THROWS_AS(gen_mixture(s, 1), InputError);
    s.outliers = {{{0, 0}, 0.1, 3}, {{5, 5}, 0.1, 1}};
    lc = gen_mixture(s, 1);
    CHECK(lc.labels.size() == 14);
    CHECK(lc.labels.back() == 2);
    s.outliers[1].variance = 0.0;
    CHECK_THROWS_AS(gen_mixture(s, 1), InputError);
    s.outliers[1] = {{5, 5, 5}, 0.1, 1};
    CHECK_THROWS_AS(gen_mixture(s, 1), InputError);

    // adding a cluster leaves earlier components untouched
    MixtureSpec one = s;
    one.outliers = {{{0, 0}, 0.1, 3}};
    one.n_outlier = 3;
    MixtureSpec two = one;
    two.outliers.push_back({{9, 9}, 0.2, 2});
    two.n_outlier = 5;
    auto a = gen_mixture(one, 8).cloud.coords();
    auto b = gen_mixture(two, 8).cloud.coords();
    CHECK(std::equal(a.begin(), a.end(), b.begin()));
}
