#include "rph/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rph/bottleneck.hpp"
#include "rph/error.hpp"
#include "rph/random.hpp"
#include "rph/rips_persistence.hpp"

namespace rph {

double length_ratio(double trimmed, double untrimmed) noexcept {
    if (untrimmed > 0.0) return trimmed / untrimmed;
    return trimmed > 0.0 ? kInfinity : 1.0;
}

double median(std::vector<double> xs) {
    if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
    std::sort(xs.begin(), xs.end());
    const std::size_t h = xs.size() / 2;
    return xs.size() % 2 ? xs[h] : (xs[h - 1] + xs[h]) / 2.0;
}

namespace {

FeatureRecord dominant(const DistanceMatrix& d, std::size_t hom_dim, std::optional<double> threshold) {
    return {dominant_feature(rips_persistence(d, hom_dim, threshold), hom_dim)};
}

}  // namespace

CaseStudyReport run_case_study(const std::function<PointCloud(std::uint64_t)>& make, std::size_t hom_dim,
                               const std::vector<std::uint64_t>& seeds, const std::vector<TrimSpec>& grid,
                               std::optional<double> threshold) {
    if (grid.empty()) throw InputError("case study needs a non-empty trimming grid");
    if (seeds.empty()) throw InputError("case study needs at least one seed");
    for (const auto& s : grid) s.validate();

    CaseStudyReport rep;
    rep.hom_dim = hom_dim;
    rep.seeds = seeds;
    rep.rows.resize(grid.size());
    for (std::size_t g = 0; g < grid.size(); ++g) rep.rows[g].spec = grid[g];

    for (std::uint64_t seed : seeds) {
        const auto d = distance_matrix(make(seed));
        const auto avg = avg_pairwise_distances(d);
        const FeatureRecord base = dominant(d, hom_dim, threshold);
        rep.untrimmed.push_back(base);
        for (std::size_t g = 0; g < grid.size(); ++g) {
            const auto& spec = grid[g];
            FeatureRecord f;
            if (trim_count(spec.alpha1, d.size()) == 0 && trim_count(spec.alpha2, d.size()) == 0) {
                f = base;
            } else {
                const auto kept = trim_by_average(avg, trim_count(spec.alpha2, d.size()),
                                                  trim_count(spec.alpha1, d.size()))
                                      .kept;
                f = dominant(d.subset(kept), hom_dim, threshold);
            }
            rep.rows[g].trimmed.push_back(f);
            rep.rows[g].ratios.push_back(length_ratio(f.length(), base.length()));
        }
    }

    std::vector<double> lengths;
    for (const auto& f : rep.untrimmed) lengths.push_back(f.length());
    rep.median_untrimmed_length = median(lengths);
    for (auto& row : rep.rows) {
        lengths.clear();
        for (const auto& f : row.trimmed) lengths.push_back(f.length());
        row.median_length = median(lengths);
        row.median_ratio = median(row.ratios);
    }
    return rep;
}

CaseStudyReport run_case_study_1(const std::vector<std::uint64_t>& seeds, const std::vector<TrimSpec>& grid) {
    return run_case_study(gen_case_study_1, 1, seeds, grid);
}

CaseStudyReport run_case_study_2(const std::vector<std::uint64_t>& seeds, const std::vector<TrimSpec>& grid) {
    return run_case_study(gen_case_study_2, 2, seeds, grid);
}

CaseStudyReport run_protein_study(const PointCloud& atoms, const std::vector<TrimSpec>& grid, double threshold) {
    return run_case_study([&](std::uint64_t) { return atoms; }, 2, {0}, grid, threshold);
}

void ConvergenceConfig::validate() const {
    if (!(b > 0.0)) throw InputError("convergence: b must be positive");
    if (sample_sizes.size() < 4) throw InputError("convergence: need at least four sample sizes");
    for (std::size_t i = 1; i < sample_sizes.size(); ++i)
        if (sample_sizes[i] <= sample_sizes[i - 1]) throw InputError("convergence: sample sizes must increase");
    if (reps < 1) throw InputError("convergence: reps must be >= 1");
    if (reference_size < 1) throw InputError("convergence: reference_size must be >= 1");
    spec.validate();
}

namespace {

PointCloud draw_signal(const SignalSpec& signal, std::size_t n, std::uint64_t seed) {
    MixtureSpec m;
    m.n_signal = n;
    m.signal = signal;
    return gen_mixture(m, seed).cloud;
}

}  // namespace

ConvergenceResult convergence_experiment(const ConvergenceConfig& cfg, std::uint64_t seed) {
    cfg.validate();
    // task seeds: reference first, then one per (size, rep)
    auto task_seed = [seed](std::uint64_t task) { return Rng::splitmix64(seed ^ Rng::splitmix64(task)); };

    const auto reference = draw_signal(cfg.signal, cfg.reference_size, task_seed(0));
    const auto ref_trimmed = reference.subset(reference_population_trim(reference, cfg.spec));

    ConvergenceResult res;
    std::uint64_t task = 1;
    for (std::size_t m : cfg.sample_sizes) {
        const std::size_t low = trim_count(cfg.spec.alpha2, m), high = trim_count(cfg.spec.alpha1, m);
        if (low + high >= m) throw InputError("convergence: trimming exhausts sample of size " + std::to_string(m));
        double sum = 0.0;
        for (std::size_t r = 0; r < cfg.reps; ++r) {
            const auto sample = draw_signal(cfg.signal, m, task_seed(task++));
            const auto kept = trim_by_average(avg_pairwise_distances(sample), low, high).kept;
            sum += hausdorff(sample.subset(kept), ref_trimmed);
        }
        ConvergencePoint p;
        p.m = m;
        p.m_kept = m - low - high;
        p.mean_hausdorff = sum / static_cast<double>(cfg.reps);
        const double mk = static_cast<double>(p.m_kept);
        p.x = std::log(std::log(mk) / mk) / cfg.b;
        p.y = std::log(p.mean_hausdorff);
        res.points.push_back(p);
    }

    double mx = 0, my = 0;
    for (const auto& p : res.points) {
        mx += p.x;
        my += p.y;
    }
    mx /= static_cast<double>(res.points.size());
    my /= static_cast<double>(res.points.size());
    double sxy = 0, sxx = 0;
    for (const auto& p : res.points) {
        sxy += (p.x - mx) * (p.y - my);
        sxx += (p.x - mx) * (p.x - mx);
    }
    res.slope = sxy / sxx;
    return res;
}

StabilityReport stability_suite(std::size_t n_trials, std::uint64_t seed, double max_noise) {
    if (n_trials < 1) throw InputError("stability suite needs n_trials >= 1");
    if (!(max_noise >= 0.0)) throw InputError("stability suite needs max_noise >= 0");
    StabilityReport rep;
    rep.all_pass = true;
    for (std::size_t t = 0; t < n_trials; ++t) {
        Rng rng(seed, t);
        const std::size_t n = 5 + static_cast<std::size_t>(rng.uniform() * 36.0);
        const double noise = max_noise * rng.uniform();
        std::vector<double> a(2 * n), b(2 * n);
        for (double& x : a) x = rng.uniform(-1.0, 1.0);
        for (std::size_t i = 0; i < a.size(); ++i) b[i] = noise > 0.0 ? rng.normal(a[i], noise) : a[i];
        const PointCloud ca(2, a), cb(2, b);
        for (std::size_t dim : {0u, 1u}) {
            const auto g = stability_gap(ca, cb, dim, dim + 1);
            StabilityTrial tr{n, dim, noise, g.w, g.h, g.w <= 2.0 * g.h + 1e-9};
            rep.all_pass = rep.all_pass && tr.ok;
            rep.trials.push_back(tr);
        }
    }
    return rep;
}

}  // namespace rph
