#include "rph/synth.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rph/error.hpp"
#include "rph/random.hpp"

namespace rph {

void MixtureSpec::validate() const {
    if (n_signal + n_outlier == 0) throw InputError("mixture has no points");
    std::size_t total = 0;
    for (const auto& c : outliers) {
        if (c.center.size() != signal.ambient_dim())
            throw InputError("outlier center has dimension " + std::to_string(c.center.size()) + ", expected " +
                             std::to_string(signal.ambient_dim()));
        if (!(c.variance > 0.0)) throw InputError("outlier variance must be positive");
        total += c.count;
    }
    if (total != n_outlier)
        throw InputError("cluster counts sum to " + std::to_string(total) + " but n_outlier is " +
                         std::to_string(n_outlier));
    if (signal.radius_variance < 0.0) throw InputError("signal radius variance must be non-negative");
}

LabeledCloud gen_mixture(const MixtureSpec& spec, std::uint64_t seed) {
    spec.validate();
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    const std::size_t dim = spec.signal.ambient_dim();
    std::vector<double> coords;
    coords.reserve((spec.n_signal + spec.n_outlier) * dim);
    std::vector<std::size_t> labels;

    Rng signal(seed, 0);
    const double radius_sd = std::sqrt(spec.signal.radius_variance);
    for (std::size_t i = 0; i < spec.n_signal; ++i) {
        switch (spec.signal.kind) {
        case SignalKind::unit_circle: {
            const double t = signal.uniform(0.0, kTwoPi);
            coords.insert(coords.end(), {std::cos(t), std::sin(t)});
            break;
        }
        case SignalKind::noisy_circle: {
            const double t = signal.uniform(0.0, kTwoPi);
            const double r = signal.normal(spec.signal.radius_mean, radius_sd);
            coords.insert(coords.end(), {r * std::cos(t), r * std::sin(t)});
            break;
        }
        case SignalKind::noisy_sphere: {
            const double a = signal.uniform(0.0, std::numbers::pi);
            const double b = signal.uniform(0.0, kTwoPi);
            const double r = signal.normal(spec.signal.radius_mean, radius_sd);
            coords.insert(coords.end(),
                          {r * std::sin(a) * std::cos(b), r * std::sin(a) * std::sin(b), r * std::cos(a)});
            break;
        }
        }
        labels.push_back(0);
    }

    for (std::size_t k = 0; k < spec.outliers.size(); ++k) {
        const auto& c = spec.outliers[k];
        Rng rng(seed, k + 1);
        const double sd = std::sqrt(c.variance);
        for (std::size_t i = 0; i < c.count; ++i) {
            for (double mu : c.center) coords.push_back(rng.normal(mu, sd));
            labels.push_back(k + 1);
        }
    }
    return {PointCloud(dim, std::move(coords)), std::move(labels)};
}

MixtureSpec case_study_1_spec() {
    MixtureSpec s;
    s.n_signal = 120;
    s.n_outlier = 80;
    s.signal = {SignalKind::noisy_circle, 1.0, 0.04};
    for (auto center : std::vector<std::vector<double>>{{1.25, 1.25}, {1.25, -1.25}, {-1.25, 1.25}, {-1.25, -1.25}, {0, 0}})
        s.outliers.push_back({center, 0.0144, 16});
    return s;
}

MixtureSpec case_study_2_spec() {
    MixtureSpec s;
    s.n_signal = 265;
    s.n_outlier = 135;
    s.signal = {SignalKind::noisy_sphere, 1.0, 0.01};
    const double a = 1.01;
    for (double x : {a, -a})
        for (double y : {a, -a})
            for (double z : {a, -a}) s.outliers.push_back({{x, y, z}, 0.04, 15});
    s.outliers.push_back({{0, 0, 0}, 0.04, 15});
    return s;
}

PointCloud gen_case_study_1(std::uint64_t seed) { return gen_mixture(case_study_1_spec(), seed).cloud; }
PointCloud gen_case_study_2(std::uint64_t seed) { return gen_mixture(case_study_2_spec(), seed).cloud; }

PointCloud gen_uniform_circle(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InputError("circle sample needs n >= 1");
    MixtureSpec s;
    s.n_signal = n;
    s.signal = {SignalKind::unit_circle, 1.0, 0.0};
    return gen_mixture(s, seed).cloud;
}

}  // namespace rph
