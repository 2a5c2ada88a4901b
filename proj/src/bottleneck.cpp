#include "rph/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "rph/error.hpp"
#include "rph/rips_persistence.hpp"

namespace rph {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

double linf(const Bar& x, const Bar& y) { return std::max(std::abs(x.birth - y.birth), std::abs(x.death - y.death)); }
double half_persistence(const Bar& x) { return (x.death - x.birth) / 2.0; }

// Hopcroft-Karp on a dense cost matrix: edge (l, r) exists iff cost <= limit.
class Matcher {
public:
    Matcher(std::size_t n, const std::vector<double>& cost) : n_(n), cost_(cost) {}

    bool perfect(double limit) {
        limit_ = limit;
        match_l_.assign(n_, kNone);
        match_r_.assign(n_, kNone);
        std::size_t matched = 0;
        while (bfs())
            for (std::size_t l = 0; l < n_; ++l)
                if (match_l_[l] == kNone && dfs(l)) ++matched;
        return matched == n_;
    }

    std::size_t partner(std::size_t l) const { return match_l_[l]; }

private:
    bool edge(std::size_t l, std::size_t r) const { return cost_[l * n_ + r] <= limit_; }

    bool bfs() {
        dist_.assign(n_, kNone);
        std::queue<std::size_t> q;
        for (std::size_t l = 0; l < n_; ++l)
            if (match_l_[l] == kNone) {
                dist_[l] = 0;
                q.push(l);
            }
        bool found = false;
        while (!q.empty()) {
            const std::size_t l = q.front();
            q.pop();
            for (std::size_t r = 0; r < n_; ++r) {
                if (!edge(l, r)) continue;
                const std::size_t next = match_r_[r];
                if (next == kNone) found = true;
                else if (dist_[next] == kNone) {
                    dist_[next] = dist_[l] + 1;
                    q.push(next);
                }
            }
        }
        return found;
    }

    bool dfs(std::size_t l) {
        for (std::size_t r = 0; r < n_; ++r) {
            if (!edge(l, r)) continue;
            const std::size_t next = match_r_[r];
            if (next == kNone || (dist_[next] == dist_[l] + 1 && dfs(next))) {
                match_l_[l] = r;
                match_r_[r] = l;
                return true;
            }
        }
        dist_[l] = kNone;
        return false;
    }

    std::size_t n_;
    const std::vector<double>& cost_;
    double limit_ = 0.0;
    std::vector<std::size_t> match_l_, match_r_, dist_;
};

}  // namespace

BottleneckResult bottleneck(const PersistenceDiagram& a, const PersistenceDiagram& b, std::size_t dim) {
    const auto bars_a = a.in_dim(dim);
    const auto bars_b = b.in_dim(dim);
    std::vector<std::size_t> fin_a, fin_b, inf_a, inf_b;
    for (std::size_t i = 0; i < bars_a.size(); ++i) (bars_a[i].infinite() ? inf_a : fin_a).push_back(i);
    for (std::size_t j = 0; j < bars_b.size(); ++j) (bars_b[j].infinite() ? inf_b : fin_b).push_back(j);

    if (inf_a.size() != inf_b.size()) return {kInfinity, std::nullopt};

    BottleneckResult result;
    std::vector<MatchedPair> matching;
    auto by_birth = [](const std::vector<Bar>& bars) {
        return [&bars](std::size_t x, std::size_t y) { return bars[x].birth < bars[y].birth; };
    };
    std::stable_sort(inf_a.begin(), inf_a.end(), by_birth(bars_a));
    std::stable_sort(inf_b.begin(), inf_b.end(), by_birth(bars_b));
    for (std::size_t k = 0; k < inf_a.size(); ++k) {
        const double c = std::abs(bars_a[inf_a[k]].birth - bars_b[inf_b[k]].birth);
        result.value = std::max(result.value, c);
        matching.push_back({inf_a[k], inf_b[k], c});
    }

    // Left: finite bars of a, then one diagonal slot per finite bar of b.
    // Right: finite bars of b, then one diagonal slot per finite bar of a.
    const std::size_t p = fin_a.size(), q = fin_b.size(), n = p + q;
    if (n > 0) {
        std::vector<double> cost(n * n, 0.0);
        std::vector<double> candidates{0.0};
        for (std::size_t l = 0; l < n; ++l) {
            for (std::size_t r = 0; r < n; ++r) {
                double c;
                if (l < p && r < q) c = linf(bars_a[fin_a[l]], bars_b[fin_b[r]]);
                else if (l < p) c = (r - q == l) ? half_persistence(bars_a[fin_a[l]]) : kInfinity;
                else if (r < q) c = (l - p == r) ? half_persistence(bars_b[fin_b[r]]) : kInfinity;
                else c = 0.0;
                cost[l * n + r] = c;
                if (c != kInfinity) candidates.push_back(c);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        Matcher m(n, cost);
        std::size_t lo = 0, hi = candidates.size() - 1;  // every bar to the diagonal is always feasible
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (m.perfect(candidates[mid])) hi = mid;
            else lo = mid + 1;
        }
        m.perfect(candidates[lo]);
        result.value = std::max(result.value, candidates[lo]);
        for (std::size_t l = 0; l < n; ++l) {
            const std::size_t r = m.partner(l);
            if (l >= p && r >= q) continue;  // diagonal to diagonal
            MatchedPair mp;
            if (l < p) mp.a = fin_a[l];
            if (r < q) mp.b = fin_b[r];
            mp.cost = cost[l * n + r];
            matching.push_back(mp);
        }
    }
    result.matching = std::move(matching);
    return result;
}

StabilityGap stability_gap(const PointCloud& a, const PointCloud& b, std::size_t dim, std::size_t max_dim) {
    if (max_dim < dim + 1) throw InputError("stability_gap needs max_dim >= dim + 1");
    if (a.dim() != b.dim()) throw InputError("stability_gap: clouds have different ambient dimensions");
    const auto da = rips_persistence(distance_matrix(a), max_dim - 1);
    const auto db = rips_persistence(distance_matrix(b), max_dim - 1);
    return {bottleneck(da, db, dim).value, hausdorff(a, b)};
}

}  // namespace rph
