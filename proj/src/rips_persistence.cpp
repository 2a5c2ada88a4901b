#include "rph/rips_persistence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "binomial.hpp"
#include "rph/error.hpp"

namespace rph {

namespace {

using Index = std::uint64_t;

struct Entry {
    double diameter;
    Index index;
};

// Total order on simplices of one dimension: diameter ascending, then
// combinatorial index descending. Any order refining the diameter gives the
// same diagram.
bool earlier(const Entry& a, const Entry& b) noexcept {
    return a.diameter < b.diameter || (a.diameter == b.diameter && a.index > b.index);
}

// Z2 column held as a binary heap whose top is the earliest entry.
// Duplicate entries cancel when the pivot is extracted.
class WorkingColumn {
public:
    void clear() { heap_.clear(); }
    void push(const Entry& e) {
        heap_.push_back(e);
        std::push_heap(heap_.begin(), heap_.end(), later);
    }

    std::optional<Entry> pop_pivot() {
        while (!heap_.empty()) {
            Entry top = pop();
            if (!heap_.empty() && heap_.front().index == top.index) {
                pop();
                continue;
            }
            return top;
        }
        return std::nullopt;
    }

    std::optional<Entry> pivot() {
        auto p = pop_pivot();
        if (p) push(*p);
        return p;
    }

private:
    static bool later(const Entry& a, const Entry& b) noexcept { return earlier(b, a); }
    Entry pop() {
        std::pop_heap(heap_.begin(), heap_.end(), later);
        Entry e = heap_.back();
        heap_.pop_back();
        return e;
    }
    std::vector<Entry> heap_;
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent_[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

class CohomologyEngine {
public:
    CohomologyEngine(const DistanceMatrix& d, std::size_t max_hom_dim, double threshold)
        : d_(d), n_(d.size()), max_dim_(max_hom_dim), threshold_(threshold), binom_(n_, max_hom_dim + 2) {}

    PersistenceDiagram run() {
        std::vector<Entry> simplices, columns;
        compute_dim0(simplices, columns);
        for (std::size_t dim = 1; dim <= max_dim_; ++dim) {
            PivotMap pivots;
            pivots.reserve(columns.size());
            compute_pairs(columns, dim, pivots);
            if (dim < max_dim_) assemble_columns(simplices, columns, pivots, dim);
        }
        dgm_.canonicalize();
        return std::move(dgm_);
    }

private:
    using PivotMap = std::unordered_map<Index, std::size_t>;

    // Vertices of a simplex, largest first.
    void decode(Index idx, std::size_t dim, std::vector<Vertex>& out) const {
        out.resize(dim + 1);
        Index top = n_;
        for (std::size_t k = dim + 1; k >= 1; --k) {
            Index lo = k - 1, hi = top - 1;
            while (lo < hi) {
                const Index mid = lo + (hi - lo + 1) / 2;
                if (binom_(mid, k) <= idx) lo = mid;
                else hi = mid - 1;
            }
            out[dim + 1 - k] = static_cast<Vertex>(lo);
            idx -= binom_(lo, k);
            top = lo;
        }
    }

    double diameter_of(const std::vector<Vertex>& v) const {
        double diam = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) diam = std::max(diam, d_(v[i], v[j]));
        return diam;
    }

    // Calls visit(cofacet) for each cofacet within the threshold, in
    // decreasing index order (earliest first among equal diameters).
    // visit returns false to stop.
    template <class Visit>
    void for_each_cofacet(const Entry& s, const std::vector<Vertex>& verts, Visit&& visit) const {
        Index above = 0, below = s.index;
        std::size_t k = verts.size();  // simplex vertices below the candidate
        std::size_t p = 0;
        for (std::size_t v = n_; v-- > 0;) {
            if (p < verts.size() && verts[p] == v) {
                below -= binom_(v, k);
                above += binom_(v, k + 1);
                --k;
                ++p;
                continue;
            }
            double diam = s.diameter;
            for (Vertex u : verts) diam = std::max(diam, d_(v, u));
            if (diam > threshold_) continue;
            if (!visit(Entry{diam, above + binom_(v, k + 1) + below})) return;
        }
    }

    // Facet entries in increasing index order (largest vertex dropped first).
    template <class Visit>
    void for_each_facet(const std::vector<Vertex>& verts, Visit&& visit) const {
        const std::size_t m = verts.size();
        for (std::size_t skip = 0; skip < m; ++skip) {
            Index idx = 0;
            double diam = 0.0;
            std::size_t rank = m - 1;
            for (std::size_t i = 0; i < m; ++i) {
                if (i == skip) continue;
                idx += binom_(verts[i], rank--);
                for (std::size_t j = i + 1; j < m; ++j)
                    if (j != skip) diam = std::max(diam, d_(verts[i], verts[j]));
            }
            if (!visit(Entry{diam, idx})) return;
        }
    }

    std::optional<Entry> zero_pivot_cofacet(const Entry& s, std::size_t dim) const {
        decode(s.index, dim, scratch_a_);
        std::optional<Entry> found;
        for_each_cofacet(s, scratch_a_, [&](const Entry& c) {
            if (c.diameter == s.diameter) {
                found = c;
                return false;
            }
            return true;
        });
        return found;
    }

    std::optional<Entry> zero_pivot_facet(const Entry& s, std::size_t dim) const {
        decode(s.index, dim, scratch_b_);
        std::optional<Entry> found;
        for_each_facet(scratch_b_, [&](const Entry& f) {
            if (f.diameter == s.diameter) {
                found = f;
                return false;
            }
            return true;
        });
        return found;
    }

    // Cofacet t such that (s, t) is an apparent pair of equal diameter.
    std::optional<Entry> zero_apparent_cofacet(const Entry& s, std::size_t dim) const {
        auto c = zero_pivot_cofacet(s, dim);
        if (!c) return std::nullopt;
        auto f = zero_pivot_facet(*c, dim + 1);
        if (f && f->index == s.index) return c;
        return std::nullopt;
    }

    std::optional<Entry> zero_apparent_facet(const Entry& t, std::size_t dim) const {
        auto f = zero_pivot_facet(t, dim);
        if (!f) return std::nullopt;
        auto c = zero_pivot_cofacet(*f, dim - 1);
        if (c && c->index == t.index) return f;
        return std::nullopt;
    }

    void push_coboundary(const Entry& s, std::size_t dim, WorkingColumn& col) const {
        decode(s.index, dim, scratch_c_);
        for_each_cofacet(s, scratch_c_, [&](const Entry& c) {
            col.push(c);
            return true;
        });
    }

    void compute_dim0(std::vector<Entry>& edges, std::vector<Entry>& columns) {
        edges.clear();
        for (std::size_t j = 1; j < n_; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (d_(i, j) <= threshold_) edges.push_back(Entry{d_(i, j), binom_(j, 2) + i});
        std::sort(edges.begin(), edges.end(), earlier);

        UnionFind uf(n_);
        columns.clear();
        std::vector<Vertex> v;
        for (const Entry& e : edges) {
            decode(e.index, 1, v);
            if (uf.unite(v[0], v[1])) {
                if (e.diameter > 0.0) dgm_.bars.push_back(Bar{0, 0.0, e.diameter});
            } else if (max_dim_ >= 1 && !zero_apparent_cofacet(e, 1)) {
                columns.push_back(e);
            }
        }
        for (std::size_t i = 0; i < n_; ++i)
            if (uf.find(i) == i) dgm_.bars.push_back(Bar{0, 0.0, kInfinity});
        std::reverse(columns.begin(), columns.end());
    }

    // Reduces coboundaries of `columns` (dim-simplices, latest first).
    void compute_pairs(const std::vector<Entry>& columns, std::size_t dim, PivotMap& pivots) {
        std::vector<std::vector<Entry>> reduction(columns.size());
        WorkingColumn cob, red;
        for (std::size_t i = 0; i < columns.size(); ++i) {
            const Entry& s = columns[i];
            cob.clear();
            red.clear();
            auto pivot = init_coboundary(s, dim, cob, pivots);
            while (true) {
                if (!pivot) {
                    dgm_.bars.push_back(Bar{dim, s.diameter, kInfinity});
                    break;
                }
                if (auto it = pivots.find(pivot->index); it != pivots.end()) {
                    const std::size_t j = it->second;
                    red.push(columns[j]);
                    push_coboundary(columns[j], dim, cob);
                    for (const Entry& e : reduction[j]) {
                        red.push(e);
                        push_coboundary(e, dim, cob);
                    }
                } else if (auto f = zero_apparent_facet(*pivot, dim + 1)) {
                    red.push(*f);
                    push_coboundary(*f, dim, cob);
                } else {
                    if (pivot->diameter > s.diameter) dgm_.bars.push_back(Bar{dim, s.diameter, pivot->diameter});
                    pivots.emplace(pivot->index, i);
                    while (auto e = red.pop_pivot()) reduction[i].push_back(*e);
                    break;
                }
                pivot = cob.pivot();
            }
        }
    }

    std::optional<Entry> init_coboundary(const Entry& s, std::size_t dim, WorkingColumn& cob,
                                         const PivotMap& pivots) const {
        decode(s.index, dim, scratch_c_);
        cofacets_.clear();
        for_each_cofacet(s, scratch_c_, [&](const Entry& c) {
            cofacets_.push_back(c);
            return true;
        });
        // The earliest cofacet of equal diameter is the pivot of the unreduced
        // column; if no earlier column owns it the column is already reduced.
        for (const Entry& c : cofacets_) {
            if (c.diameter != s.diameter) continue;
            if (!pivots.count(c.index) && !zero_apparent_facet(c, dim + 1)) return c;
            break;
        }
        for (const Entry& c : cofacets_) cob.push(c);
        return cob.pivot();
    }

    // Builds the (dim+1)-simplices and the subset that still needs reduction.
    void assemble_columns(std::vector<Entry>& simplices, std::vector<Entry>& columns, const PivotMap& pivots,
                          std::size_t dim) {
        const std::size_t next_dim = dim + 1;
        const bool keep_simplices = next_dim < max_dim_;
        std::vector<Entry> next;
        columns.clear();
        std::vector<Vertex> v;
        for (const Entry& s : simplices) {
            decode(s.index, dim, v);
            for (std::size_t w = static_cast<std::size_t>(v.front()) + 1; w < n_; ++w) {
                double diam = s.diameter;
                for (Vertex u : v) diam = std::max(diam, d_(w, u));
                if (diam > threshold_) continue;
                const Entry t{diam, s.index + binom_(w, next_dim + 1)};
                if (keep_simplices) next.push_back(t);
                // already paired: as a pivot, or as either end of an apparent pair
                if (pivots.count(t.index)) continue;
                if (zero_apparent_facet(t, next_dim) || zero_apparent_cofacet(t, next_dim)) continue;
                columns.push_back(t);
            }
        }
        simplices.swap(next);
        std::sort(columns.begin(), columns.end(), [](const Entry& a, const Entry& b) { return earlier(b, a); });
    }

    const DistanceMatrix& d_;
    std::size_t n_;
    std::size_t max_dim_;
    double threshold_;
    detail::BinomialTable binom_;
    PersistenceDiagram dgm_;
    mutable std::vector<Vertex> scratch_a_, scratch_b_, scratch_c_;
    mutable std::vector<Entry> cofacets_;
};

}  // namespace

PersistenceDiagram rips_persistence(const DistanceMatrix& d, std::size_t max_hom_dim, std::optional<double> threshold) {
    if (d.size() == 0) throw InputError("Rips persistence needs at least one point");
    if (threshold && !(*threshold > 0.0)) throw InputError("Rips threshold must be positive");
    const double t = threshold.value_or(enclosing_radius(d));
    return CohomologyEngine(d, max_hom_dim, t).run();
}

}  // namespace rph
