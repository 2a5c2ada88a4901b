#include "rph/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rph/error.hpp"

namespace rph {

namespace {

void check_size(std::size_t n) {
    if (n > kMaxDensePoints)
        throw InputError("point count " + std::to_string(n) + " exceeds dense limit of " +
                         std::to_string(kMaxDensePoints));
}

}  // namespace

PointCloud::PointCloud(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw InputError("point cloud is empty");
    dim_ = rows.front().size();
    if (dim_ == 0) throw InputError("points must have at least one coordinate");
    coords_.reserve(rows.size() * dim_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != dim_)
            throw InputError("point " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                             " coordinates, expected " + std::to_string(dim_));
        for (double x : rows[i]) {
            if (!std::isfinite(x)) throw InputError("point " + std::to_string(i) + " has a non-finite coordinate");
            coords_.push_back(x);
        }
    }
}

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
    if (dim_ == 0) throw InputError("points must have at least one coordinate");
    if (coords_.empty()) throw InputError("point cloud is empty");
    if (coords_.size() % dim_ != 0) throw InputError("coordinate count is not a multiple of the dimension");
    for (double x : coords_)
        if (!std::isfinite(x)) throw InputError("point cloud has a non-finite coordinate");
}

PointCloud PointCloud::subset(std::span<const std::size_t> indices) const {
    std::vector<double> out;
    out.reserve(indices.size() * dim_);
    for (std::size_t i : indices) {
        auto p = point(i);
        out.insert(out.end(), p.begin(), p.end());
    }
    PointCloud c;
    c.dim_ = dim_;
    c.coords_ = std::move(out);
    return c;
}

double euclidean(std::span<const double> a, std::span<const double> b) noexcept {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> entries) : n_(n), entries_(std::move(entries)) {
    if (n_ == 0) throw InputError("distance matrix is empty");
    check_size(n_);
    if (entries_.size() != n_ * n_) throw InputError("distance matrix must be n x n");
    for (std::size_t i = 0; i < n_; ++i) {
        if ((*this)(i, i) != 0.0) throw InputError("distance matrix diagonal must be zero");
        for (std::size_t j = 0; j < n_; ++j) {
            const double v = (*this)(i, j);
            if (!std::isfinite(v) || v < 0.0) throw InputError("distance entries must be finite and non-negative");
            if (v != (*this)(j, i)) throw InputError("distance matrix is not symmetric");
        }
    }
}

DistanceMatrix DistanceMatrix::subset(std::span<const std::size_t> indices) const {
    const std::size_t m = indices.size();
    std::vector<double> out(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) out[a * m + b] = (*this)(indices[a], indices[b]);
    return DistanceMatrix(Unchecked{}, m, std::move(out));
}

DistanceMatrix distance_matrix(const PointCloud& cloud) {
    const std::size_t n = cloud.size();
    if (n == 0) throw InputError("point cloud is empty");
    check_size(n);
    std::vector<double> e(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = euclidean(cloud.point(i), cloud.point(j));
            e[i * n + j] = d;
            e[j * n + i] = d;
        }
    return DistanceMatrix(DistanceMatrix::Unchecked{}, n, std::move(e));
}

namespace {

// sup over a of inf over b.
double directed_hausdorff(const PointCloud& a, const PointCloud& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < b.size() && best > worst; ++j)
            best = std::min(best, euclidean(a.point(i), b.point(j)));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff(const PointCloud& a, const PointCloud& b) {
    if (a.empty() || b.empty()) throw InputError("hausdorff distance needs non-empty clouds");
    if (a.dim() != b.dim()) throw InputError("hausdorff distance needs clouds of the same dimension");
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double enclosing_radius(const DistanceMatrix& d) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto r = d.row(i);
        best = std::min(best, *std::max_element(r.begin(), r.end()));
    }
    return d.size() == 0 ? 0.0 : best;
}

}  // namespace rph
