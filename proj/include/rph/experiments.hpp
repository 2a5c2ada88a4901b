#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rph/metric.hpp"
#include "rph/persistence.hpp"
#include "rph/synth.hpp"
#include "rph/trimming.hpp"

namespace rph {

/// Dominant finite bar of one diagram; a missing feature has length 0.
struct FeatureRecord {
    std::optional<DominantFeature> feature;
    double length() const noexcept { return feature ? feature->length : 0.0; }
    friend bool operator==(const FeatureRecord& a, const FeatureRecord& b) noexcept {
        if (a.feature.has_value() != b.feature.has_value()) return false;
        return !a.feature || (a.feature->birth == b.feature->birth && a.feature->death == b.feature->death);
    }
};

struct CaseStudyRow {
    TrimSpec spec;
    std::vector<FeatureRecord> trimmed;  ///< per seed
    std::vector<double> ratios;          ///< trimmed / untrimmed length per seed
    double median_length = 0.0;
    double median_ratio = 0.0;
};

struct CaseStudyReport {
    std::size_t hom_dim = 0;
    std::vector<std::uint64_t> seeds;
    std::vector<FeatureRecord> untrimmed;  ///< per seed
    double median_untrimmed_length = 0.0;
    std::vector<CaseStudyRow> rows;  ///< one per grid point
};

/// Length ratio with 0/0 = 1 and x/0 = inf.
double length_ratio(double trimmed, double untrimmed) noexcept;
/// Median with the mean of the two middle values for even counts.
double median(std::vector<double> xs);

/// Generic driver: for each seed, cloud = make(seed); untrimmed and trimmed
/// dominant features in hom_dim, Rips threshold `threshold` (empty: enclosing
/// radius of each sample).
CaseStudyReport run_case_study(const std::function<PointCloud(std::uint64_t)>& make, std::size_t hom_dim,
                               const std::vector<std::uint64_t>& seeds, const std::vector<TrimSpec>& grid,
                               std::optional<double> threshold = std::nullopt);

/// Case-study-1 clouds, dominant H1.
CaseStudyReport run_case_study_1(const std::vector<std::uint64_t>& seeds, const std::vector<TrimSpec>& grid);
/// Case-study-2 clouds, dominant H2. Slow: seconds per diagram.
CaseStudyReport run_case_study_2(const std::vector<std::uint64_t>& seeds, const std::vector<TrimSpec>& grid);

/// Dominant H2 of one protein cloud, threshold 13 A by default. The single
/// "seed" in the report is 0.
CaseStudyReport run_protein_study(const PointCloud& atoms, const std::vector<TrimSpec>& grid,
                                  double threshold = 13.0);

struct ConvergenceConfig {
    double b = 1.0;
    std::vector<std::size_t> sample_sizes{100, 200, 400, 800, 1600};
    std::size_t reps = 20;
    TrimSpec spec{0.05, 0.05};
    std::size_t reference_size = 5000;
    SignalSpec signal{SignalKind::unit_circle, 1.0, 0.0};

    /// At least four strictly increasing sizes, reps >= 1, b > 0.
    void validate() const;
};

struct ConvergencePoint {
    std::size_t m = 0;         ///< sample size before trimming
    std::size_t m_kept = 0;    ///< m - floor(alpha1 m) - floor(alpha2 m)
    double mean_hausdorff = 0.0;
    double x = 0.0;  ///< log(log(m_kept) / m_kept) / b
    double y = 0.0;  ///< log(mean_hausdorff)
};

struct ConvergenceResult {
    double slope = 0.0;
    std::vector<ConvergencePoint> points;
};

/// Hausdorff distance between trimmed samples and the trimmed reference
/// sample, regressed on the theoretical rate in log-log coordinates.
ConvergenceResult convergence_experiment(const ConvergenceConfig& cfg, std::uint64_t seed);

struct StabilityTrial {
    std::size_t n = 0;
    std::size_t dim = 0;
    double noise = 0.0;
    double w = 0.0;
    double h = 0.0;
    bool ok = false;  ///< w <= 2h + 1e-9
};

struct StabilityReport {
    std::vector<StabilityTrial> trials;
    bool all_pass = false;
};

/// Random planar clouds of 5..40 points in [-1, 1]^2, perturbed by Gaussian
/// noise of standard deviation up to max_noise, checked in dims 0 and 1.
StabilityReport stability_suite(std::size_t n_trials, std::uint64_t seed, double max_noise = 0.1);

}  // namespace rph
