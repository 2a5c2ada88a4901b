#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rph {

/// Largest point count accepted for dense n x n storage.
inline constexpr std::size_t kMaxDensePoints = 5000;

/// Finite set of points in R^m, stored row-major.
class PointCloud {
public:
    PointCloud() = default;
    /// Throws InputError on ragged rows, non-finite coordinates, or an empty set.
    explicit PointCloud(const std::vector<std::vector<double>>& rows);
    PointCloud(std::size_t dim, std::vector<double> coords);

    std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return coords_.empty(); }

    std::span<const double> point(std::size_t i) const { return {coords_.data() + i * dim_, dim_}; }
    const std::vector<double>& coords() const noexcept { return coords_; }

    /// Points at the given indices, in the given order.
    PointCloud subset(std::span<const std::size_t> indices) const;

    friend bool operator==(const PointCloud&, const PointCloud&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

/// Euclidean distance between two coordinate vectors of equal length.
double euclidean(std::span<const double> a, std::span<const double> b) noexcept;

/// Symmetric pairwise-distance table with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    /// Validates symmetry, zero diagonal, finiteness and non-negativity.
    DistanceMatrix(std::size_t n, std::vector<double> entries);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return entries_[i * n_ + j]; }
    std::span<const double> row(std::size_t i) const { return {entries_.data() + i * n_, n_}; }

    /// Restriction to the given indices (which must be valid).
    DistanceMatrix subset(std::span<const std::size_t> indices) const;

private:
    struct Unchecked {};
    DistanceMatrix(Unchecked, std::size_t n, std::vector<double> entries)
        : n_(n), entries_(std::move(entries)) {}
    friend DistanceMatrix distance_matrix(const PointCloud&);

    std::size_t n_ = 0;
    std::vector<double> entries_;
};

DistanceMatrix distance_matrix(const PointCloud& cloud);

/// Symmetric Hausdorff distance between two finite point sets.
double hausdorff(const PointCloud& a, const PointCloud& b);

/// min_i max_j d(i, j); Rips homology in dimension >= 1 is trivial past this value.
double enclosing_radius(const DistanceMatrix& d);

}  // namespace rph
