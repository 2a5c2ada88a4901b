#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rph/metric.hpp"

namespace rph {

enum class SignalKind {
    noisy_circle,  ///< (r cos t, r sin t), t ~ U[0, 2pi), r ~ N(mean, variance)
    noisy_sphere,  ///< r (sin a cos b, sin a sin b, cos a), a ~ U[0, pi), b ~ U[0, 2pi)
    unit_circle,   ///< (cos t, sin t), t ~ U[0, 2pi)
};

struct SignalSpec {
    SignalKind kind = SignalKind::unit_circle;
    double radius_mean = 1.0;
    double radius_variance = 0.0;  ///< a variance, not a standard deviation

    std::size_t ambient_dim() const noexcept { return kind == SignalKind::noisy_sphere ? 3 : 2; }
};

/// Isotropic Gaussian cluster N(center, variance * I).
struct OutlierCluster {
    std::vector<double> center;
    double variance = 0.0;
    std::size_t count = 0;
};

struct MixtureSpec {
    std::size_t n_signal = 0;
    std::size_t n_outlier = 0;
    SignalSpec signal;
    std::vector<OutlierCluster> outliers;

    /// Throws InputError on inconsistent counts, dimensions or variances.
    void validate() const;
};

/// Points plus their origin: label 0 is signal, label k >= 1 is outlier cluster k.
struct LabeledCloud {
    PointCloud cloud;
    std::vector<std::size_t> labels;
};

/// Signal points first, then clusters in spec order. Component i draws from
/// substream i of the seed (signal = 0), so adding a cluster never perturbs
/// the others.
LabeledCloud gen_mixture(const MixtureSpec& spec, std::uint64_t seed);

/// 120 points near the unit circle (radius variance 0.04) and five clusters
/// of 16 with variance 0.0144 at (+-1.25, +-1.25) and the origin.
MixtureSpec case_study_1_spec();
/// 265 points near the unit sphere (radius variance 0.01) and nine clusters
/// of 15 with variance 0.04 at (+-1.01, +-1.01, +-1.01) and the origin.
MixtureSpec case_study_2_spec();

PointCloud gen_case_study_1(std::uint64_t seed);
PointCloud gen_case_study_2(std::uint64_t seed);
PointCloud gen_uniform_circle(std::size_t n, std::uint64_t seed);

}  // namespace rph
