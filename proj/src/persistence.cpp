#include "rph/persistence.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "binomial.hpp"
#include "rph/error.hpp"

namespace rph {

std::vector<Bar> PersistenceDiagram::in_dim(std::size_t dim) const {
    std::vector<Bar> out;
    for (const auto& b : bars)
        if (b.dim == dim) out.push_back(b);
    return out;
}

void PersistenceDiagram::canonicalize() { std::sort(bars.begin(), bars.end()); }

namespace {

using Column = std::vector<std::uint32_t>;

// Z2 column addition on sorted index lists.
void add_column(Column& target, const Column& source, Column& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

class SimplexLocator {
public:
    explicit SimplexLocator(const Filtration& f)
        : binom_(f.n_vertices, f.max_dim + 1), by_dim_(f.max_dim + 1) {
        for (std::size_t p = 0; p < f.simplices.size(); ++p) {
            const auto& s = f.simplices[p];
            by_dim_[s.dim()].push_back({key(s.vertices), static_cast<std::uint32_t>(p)});
        }
        for (auto& v : by_dim_) std::sort(v.begin(), v.end());
    }

    // Filtration positions of the codimension-one faces, sorted.
    Column boundary(const Simplex& s) const {
        Column col;
        if (s.vertices.size() < 2) return col;
        std::vector<Vertex> face(s.vertices.size() - 1);
        const auto& table = by_dim_[s.dim() - 1];
        for (std::size_t skip = 0; skip < s.vertices.size(); ++skip) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < s.vertices.size(); ++i)
                if (i != skip) face[w++] = s.vertices[i];
            const std::uint64_t k = key(face);
            auto it = std::lower_bound(table.begin(), table.end(), std::pair<std::uint64_t, std::uint32_t>{k, 0});
            if (it == table.end() || it->first != k) throw InputError("filtration is not closed under faces");
            col.push_back(it->second);
        }
        std::sort(col.begin(), col.end());
        return col;
    }

private:
    std::uint64_t key(const std::vector<Vertex>& vertices) const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < vertices.size(); ++i) k += binom_(vertices[i], i + 1);
        return k;
    }

    detail::BinomialTable binom_;
    std::vector<std::vector<std::pair<std::uint64_t, std::uint32_t>>> by_dim_;
};

}  // namespace

PersistenceDiagram persistent_homology(const Filtration& f, std::size_t max_hom_dim) {
    if (f.max_dim < max_hom_dim + 1)
        throw InputError("filtration max_dim " + std::to_string(f.max_dim) + " cannot resolve deaths in dimension " +
                         std::to_string(max_hom_dim) + "; need at least " + std::to_string(max_hom_dim + 1));

    const std::size_t count = f.simplices.size();
    constexpr std::uint32_t kNone = UINT32_MAX;
    SimplexLocator locator(f);

    std::vector<std::vector<std::uint32_t>> positions_by_dim(f.max_dim + 1);
    for (std::uint32_t p = 0; p < count; ++p) positions_by_dim[f.simplices[p].dim()].push_back(p);

    std::vector<std::uint32_t> killer(count, kNone);  // row -> column whose lowest entry it is
    std::vector<bool> positive(count, false);
    std::vector<Column> reduced(count);
    Column work, scratch;

    PersistenceDiagram dgm;
    // Highest dimension first so that every pivot found clears a column below.
    for (std::size_t dim = f.max_dim; dim >= 1; --dim) {
        for (std::uint32_t j : positions_by_dim[dim]) {
            if (killer[j] != kNone) {
                positive[j] = true;  // cleared: it is the birth of a class killed above
                continue;
            }
            work = locator.boundary(f.simplices[j]);
            while (!work.empty() && killer[work.back()] != kNone) add_column(work, reduced[killer[work.back()]], scratch);
            if (work.empty()) {
                positive[j] = true;
                continue;
            }
            const std::uint32_t low = work.back();
            killer[low] = j;
            const double birth = f.simplices[low].value;
            const double death = f.simplices[j].value;
            if (death > birth) dgm.bars.push_back(Bar{dim - 1, birth, death});
            reduced[j] = std::move(work);
            work = Column{};
        }
    }
    for (std::uint32_t v : positions_by_dim[0]) positive[v] = true;

    for (std::uint32_t p = 0; p < count; ++p) {
        const auto& s = f.simplices[p];
        if (s.dim() <= max_hom_dim && positive[p] && killer[p] == kNone)
            dgm.bars.push_back(Bar{s.dim(), s.value, kInfinity});
    }
    dgm.bars.erase(std::remove_if(dgm.bars.begin(), dgm.bars.end(), [&](const Bar& b) { return b.dim > max_hom_dim; }),
                   dgm.bars.end());
    dgm.canonicalize();
    return dgm;
}

std::size_t betti_at_scale(const PersistenceDiagram& dgm, std::size_t dim, double t) {
    return static_cast<std::size_t>(std::count_if(dgm.bars.begin(), dgm.bars.end(), [&](const Bar& b) {
        return b.dim == dim && b.birth <= t && t < b.death;
    }));
}

BettiProfile betti_profile(const PersistenceDiagram& dgm, std::size_t dim) {
    std::vector<double> scales;
    for (const auto& b : dgm.bars) {
        if (b.dim != dim) continue;
        scales.push_back(b.birth);
        if (!b.infinite()) scales.push_back(b.death);
    }
    std::sort(scales.begin(), scales.end());
    scales.erase(std::unique(scales.begin(), scales.end()), scales.end());
    BettiProfile profile{dim, {}};
    for (double t : scales) profile.values.emplace_back(t, betti_at_scale(dgm, dim, t));
    return profile;
}

namespace {

// Rank over Z2 of a dense 0/1 matrix, by row elimination.
std::size_t z2_rank(std::vector<std::vector<std::uint8_t>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t r = rank;
        while (r < rows && m[r][c] == 0) ++r;
        if (r == rows) continue;
        std::swap(m[r], m[rank]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != rank && m[i][c])
                for (std::size_t k = c; k < cols; ++k) m[i][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t brute_force_betti(const DistanceMatrix& d, std::size_t dim, double t, std::size_t max_dim) {
    const std::size_t n = d.size();
    if (n > 10) throw InputError("brute-force Betti oracle is limited to 10 points");
    if (max_dim < dim + 1) throw InputError("brute-force Betti needs max_dim >= dim + 1");

    // Every vertex subset whose pairwise distances are within t, grouped by size.
    std::vector<std::vector<unsigned>> by_size(dim + 3);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size > dim + 2) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if ((mask >> i & 1u) && (mask >> j & 1u) && d(i, j) > t) ok = false;
        if (ok) by_size[size].push_back(mask);
    }

    // Boundary matrix from k-simplices (size k+1) to (k-1)-simplices.
    auto boundary_rank = [&](std::size_t k) -> std::size_t {
        if (k == 0) return 0;
        const auto& faces = by_size[k];
        const auto& cofaces = by_size[k + 1];
        if (faces.empty() || cofaces.empty()) return 0;
        std::vector<std::vector<std::uint8_t>> m(faces.size(), std::vector<std::uint8_t>(cofaces.size(), 0));
        for (std::size_t c = 0; c < cofaces.size(); ++c)
            for (std::size_t r = 0; r < faces.size(); ++r)
                if ((faces[r] & cofaces[c]) == faces[r]) m[r][c] = 1;
        return z2_rank(std::move(m));
    };

    const std::size_t chains = by_size[dim + 1].size();
    return chains - boundary_rank(dim) - boundary_rank(dim + 1);
}

std::optional<DominantFeature> dominant_feature(const PersistenceDiagram& dgm, std::size_t dim) {
    std::optional<DominantFeature> best;
    for (const auto& b : dgm.bars) {
        if (b.dim != dim || b.infinite()) continue;
        const double len = b.persistence();
        if (!best || len > best->length || (len == best->length && (b.birth < best->birth ||
                                                                    (b.birth == best->birth && b.death < best->death))))
            best = DominantFeature{b.birth, b.death, len};
    }
    return best;
}

}  // namespace rph
