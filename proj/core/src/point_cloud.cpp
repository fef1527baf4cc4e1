#include "lhdim/point_cloud.hpp"

#include <fstream>
#include <sstream>

namespace lhdim {

PointCloud::PointCloud(std::vector<double> coords, std::size_t dim)
    : data_(std::move(coords)), d_(dim) {
    if (d_ == 0) throw std::invalid_argument("point dimension must be >= 1");
    if (data_.size() % d_ != 0)
        throw std::invalid_argument("coordinate array size not a multiple of dimension");
    n_ = data_.size() / d_;
    for (double x : data_)
        if (!std::isfinite(x))
            throw std::invalid_argument("non-finite coordinate in point cloud");
}

PointCloud PointCloud::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return PointCloud{};
    const std::size_t d = rows.front().size();
    std::vector<double> flat;
    flat.reserve(rows.size() * d);
    for (const auto& r : rows) {
        if (r.size() != d)
            throw std::invalid_argument("rows have inconsistent dimension");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return PointCloud(std::move(flat), d);
}

double PointCloud::sq_dist(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch in distance query");
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double t = a[k] - b[k];
        s += t * t;
    }
    return s;
}

PointCloud PointCloud::subset(const std::vector<Index>& idx) const {
    std::vector<double> flat;
    flat.reserve(idx.size() * d_);
    for (Index i : idx) {
        auto p = point(i);
        flat.insert(flat.end(), p.begin(), p.end());
    }
    return PointCloud(std::move(flat), d_);
}

PointCloud load_point_cloud(const std::string& path, bool skip_header) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point file: " + path);
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (first && skip_header) {
            first = false;
            continue;
        }
        first = false;
        for (char& c : line)
            if (c == ',' || c == ';' || c == '\t') c = ' ';
        std::istringstream ls(line);
        std::vector<double> row;
        double x;
        while (ls >> x) row.push_back(x);
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error("no points in file: " + path);
    return PointCloud::from_rows(rows);
}

void save_point_cloud(const PointCloud& cloud, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write point file: " + path);
    out.precision(17);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        auto p = cloud.point(static_cast<Index>(i));
        for (std::size_t k = 0; k < p.size(); ++k)
            out << (k ? " " : "") << p[k];
        out << '\n';
    }
}

}  // namespace lhdim
