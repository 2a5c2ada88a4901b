#include "rph/rips.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "format.hpp"
#include "rph/error.hpp"

namespace rph {

bool filtration_less(const Simplex& a, const Simplex& b) noexcept {
    if (a.value != b.value) return a.value < b.value;
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

namespace {

class CliqueExpander {
public:
    CliqueExpander(const DistanceMatrix& d, std::size_t max_dim, double threshold, std::size_t budget,
                   std::vector<Simplex>& out)
        : d_(d), max_dim_(max_dim), threshold_(threshold), budget_(budget), out_(out), upper_(d.size()) {
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = i + 1; j < d.size(); ++j)
                if (d(i, j) <= threshold) upper_[i].push_back(static_cast<Vertex>(j));
    }

    void run() {
        std::vector<Vertex> clique;
        for (std::size_t v = 0; v < d_.size(); ++v) {
            clique.assign(1, static_cast<Vertex>(v));
            emit(clique, 0.0);
            if (max_dim_ > 0) expand(clique, upper_[v], 0.0);
        }
    }

private:
    void emit(const std::vector<Vertex>& clique, double value) {
        if (out_.size() >= budget_)
            throw ResourceError("Rips filtration exceeds simplex budget of " + std::to_string(budget_) +
                                " at threshold " + format_double(threshold_) + ", max_dim " +
                                std::to_string(max_dim_));
        out_.push_back(Simplex{clique, value});
    }

    // `candidates` are the common upper neighbours of every vertex in `clique`.
    void expand(std::vector<Vertex>& clique, const std::vector<Vertex>& candidates, double value) {
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const Vertex v = candidates[c];
            double next_value = value;
            for (Vertex u : clique) next_value = std::max(next_value, d_(u, v));
            clique.push_back(v);
            emit(clique, next_value);
            if (clique.size() <= max_dim_) {
                std::vector<Vertex> next;
                std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(c) + 1, candidates.end(),
                                      upper_[v].begin(), upper_[v].end(), std::back_inserter(next));
                if (!next.empty()) expand(clique, next, next_value);
            }
            clique.pop_back();
        }
    }

    const DistanceMatrix& d_;
    std::size_t max_dim_;
    double threshold_;
    std::size_t budget_;
    std::vector<Simplex>& out_;
    std::vector<std::vector<Vertex>> upper_;
};

}  // namespace

Filtration rips_filtration(const DistanceMatrix& d, std::size_t max_dim, std::optional<double> threshold,
                           std::size_t budget) {
    if (d.size() == 0) throw InputError("Rips filtration needs at least one point");
    if (threshold && !(*threshold > 0.0)) throw InputError("Rips threshold must be positive");
    const double t = threshold.value_or(enclosing_radius(d));

    Filtration f;
    f.n_vertices = d.size();
    f.max_dim = max_dim;
    f.threshold = t;
    CliqueExpander(d, max_dim, t, budget, f.simplices).run();
    std::sort(f.simplices.begin(), f.simplices.end(), filtration_less);
    return f;
}

void write_filtration(std::ostream& os, const Filtration& f) {
    for (const auto& s : f.simplices) {
        os << format_double(s.value) << ' ' << s.dim();
        for (Vertex v : s.vertices) os << ' ' << v;
        os << '\n';
    }
}

}  // namespace rph
