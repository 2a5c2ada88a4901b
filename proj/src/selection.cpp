#include "rph/selection.hpp"

#include <algorithm>
#include <cmath>

#include "rph/error.hpp"
#include "rph/rips_persistence.hpp"
#include "rph/trimming.hpp"

namespace rph {

namespace {

void check_common(const SelectionConfig& cfg) {
    if (cfg.max_iter < 1) throw InputError("selection needs max_iter >= 1");
    if (!(cfg.tau_min > 0.0)) throw InputError("selection needs tau_min > 0");
    if (cfg.max_dim < cfg.hom_dim + 1) throw InputError("selection needs max_dim >= hom_dim + 1");
    if (cfg.rips_threshold && !(*cfg.rips_threshold > 0.0)) throw InputError("Rips threshold must be positive");
}

double alpha_at(double init, double step, std::size_t t) { return std::max(0.0, init - static_cast<double>(t) * step); }

bool has_persistent_bar(const PersistenceDiagram& dgm, double tau) {
    return std::any_of(dgm.bars.begin(), dgm.bars.end(),
                       [tau](const Bar& b) { return !b.infinite() && b.persistence() >= tau; });
}

template <class Alphas>
SelectionOutcome run_loop(const PointCloud& cloud, const SelectionConfig& cfg, Alphas alphas) {
    const DistanceMatrix d = distance_matrix(cloud);
    const auto avg = avg_pairwise_distances(d);
    const std::size_t n = d.size();

    SelectionOutcome out;
    for (std::size_t t = 0;; ++t) {
        const auto [a1, a2] = alphas(t);
        auto trimmed = trim_by_average(avg, trim_count(a2, n), trim_count(a1, n));
        auto full = rips_persistence(d.subset(trimmed.kept), cfg.hom_dim, cfg.rips_threshold);
        out.diagram.bars = full.in_dim(cfg.hom_dim);
        out.alpha1 = a1;
        out.alpha2 = a2;
        out.kept = std::move(trimmed.kept);
        out.iterations_used = t;
        out.threshold_met = has_persistent_bar(out.diagram, cfg.tau_min);
        if (out.threshold_met || t == cfg.max_iter) return out;
    }
}

}  // namespace

SelectionOutcome select_asymmetric(const PointCloud& cloud, const SelectionConfig& cfg) {
    check_common(cfg);
    TrimSpec{cfg.alpha1_init, cfg.alpha2_init}.validate();
    if (!(cfg.step1 > 0.0) || !(cfg.step2 > 0.0)) throw InputError("selection steps must be positive");
    return run_loop(cloud, cfg, [&](std::size_t t) {
        return std::pair{alpha_at(cfg.alpha1_init, cfg.step1, t), alpha_at(cfg.alpha2_init, cfg.step2, t)};
    });
}

SelectionOutcome select_one_sided(const PointCloud& cloud, const SelectionConfig& cfg) {
    check_common(cfg);
    if (!(cfg.alpha1_init >= 0.0 && cfg.alpha1_init < 1.0)) throw InputError("one-sided alpha must lie in [0, 1)");
    if (!(cfg.step1 > 0.0)) throw InputError("selection step must be positive");
    return run_loop(cloud, cfg,
                    [&](std::size_t t) { return std::pair{alpha_at(cfg.alpha1_init, cfg.step1, t), 0.0}; });
}

}  // namespace rph
