#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lhdim {

using Index = std::int32_t;

// Immutable n x d array of ambient coordinates. Validated on ingestion:
// all rows have the same dimension, no NaN/Inf entries.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::vector<double> coords, std::size_t dim);

    static PointCloud from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return n_; }
    std::size_t dim() const { return d_; }
    bool empty() const { return n_ == 0; }

    std::span<const double> point(Index i) const {
        return {data_.data() + static_cast<std::size_t>(i) * d_, d_};
    }

    double dist(Index i, Index j) const { return std::sqrt(dist2(i, j)); }
    double dist2(Index i, Index j) const {
        return sq_dist(point(i), point(j));
    }
    double dist_to(Index i, std::span<const double> q) const {
        return std::sqrt(sq_dist(point(i), q));
    }

    static double sq_dist(std::span<const double> a, std::span<const double> b);

    // Restriction to a subset of rows; indices refer to the new cloud.
    PointCloud subset(const std::vector<Index>& idx) const;

private:
    std::vector<double> data_;
    std::size_t n_ = 0;
    std::size_t d_ = 0;
};

// Whitespace- or comma-delimited text, one point per row.
PointCloud load_point_cloud(const std::string& path, bool skip_header = false);
void save_point_cloud(const PointCloud& cloud, const std::string& path);

}  // namespace lhdim
