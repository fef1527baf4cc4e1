#include "lhdim/geometry.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>

namespace lhdim {

std::vector<Index> ball_query(const PointCloud& cloud, std::span<const double> center,
                              double radius) {
    if (radius < 0) throw std::invalid_argument("ball_query: negative radius");
    std::vector<Index> out;
    const double r2 = radius * radius;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const Index idx = static_cast<Index>(i);
        if (PointCloud::sq_dist(cloud.point(idx), center) <= r2) out.push_back(idx);
    }
    return out;
}

std::vector<Index> inner_vertex_set(const PointCloud& cloud, std::span<const double> p,
                                    double alpha, double r) {
    if (alpha <= 0 || r <= 0)
        throw std::invalid_argument("inner_vertex_set: alpha and r must be positive");
    return ball_query(cloud, p, r + alpha);
}

std::vector<Index> outer_vertex_set(const PointCloud& cloud, std::span<const double> p,
                                    double alpha, double r, double beta) {
    if (beta <= 0) throw std::invalid_argument("outer_vertex_set: beta must be positive");
    std::vector<Index> out;
    const double hi = r + alpha;
    const double lo = std::max(beta - alpha, 0.0);  // vacuous when beta <= alpha
    const double hi2 = hi * hi;
    const double lo2 = lo * lo;
    // squared comparisons keep the thresholds bit-consistent with ball_query
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const Index idx = static_cast<Index>(i);
        const double d2 = PointCloud::sq_dist(cloud.point(idx), p);
        if (d2 <= hi2 && d2 >= lo2) out.push_back(idx);
    }
    return out;
}

std::vector<Index> farthest_point_subsample(const PointCloud& cloud, std::size_t count,
                                            double min_dist, std::uint64_t seed) {
    const std::size_t n = cloud.size();
    if (count > n) throw std::invalid_argument("farthest_point_subsample: count > n");
    if (count == 0 && min_dist <= 0)
        throw std::invalid_argument("farthest_point_subsample: need count or min_dist");
    if (n == 0) return {};

    std::mt19937_64 rng(seed);
    const Index start = static_cast<Index>(rng() % n);

    std::vector<double> d2(n, std::numeric_limits<double>::infinity());
    std::vector<char> taken(n, 0);
    std::vector<Index> picked;
    picked.push_back(start);
    taken[start] = 1;
    const double min_d2 = min_dist * min_dist;

    while (count == 0 || picked.size() < count) {
        const Index last = picked.back();
        Index best = -1;
        double best_d2 = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const Index idx = static_cast<Index>(i);
            d2[i] = std::min(d2[i], cloud.dist2(idx, last));
            if (!taken[i] && d2[i] > best_d2) {
                best_d2 = d2[i];
                best = idx;
            }
        }
        if (best == -1) break;  // nothing left
        if (count == 0 && best_d2 < min_d2) break;
        picked.push_back(best);
        taken[best] = 1;
    }
    std::sort(picked.begin(), picked.end());
    return picked;
}

NeighborhoodGraph build_neighborhood_graph(const PointCloud& cloud, double edge_len) {
    if (edge_len <= 0) throw std::invalid_argument("build_neighborhood_graph: edge_len <= 0");
    const std::size_t n = cloud.size();
    NeighborhoodGraph g;
    g.edge_len = edge_len;
    g.adjacency.assign(n, {});
    const double t2 = edge_len * edge_len;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cloud.dist2(static_cast<Index>(i), static_cast<Index>(j)) <= t2) {
                g.adjacency[i].push_back(static_cast<Index>(j));
                g.adjacency[j].push_back(static_cast<Index>(i));
            }

    g.component.assign(n, -1);
    Index label = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (g.component[s] != -1) continue;
        std::queue<Index> q;
        q.push(static_cast<Index>(s));
        g.component[s] = label;
        while (!q.empty()) {
            Index v = q.front();
            q.pop();
            for (Index w : g.adjacency[v])
                if (g.component[w] == -1) {
                    g.component[w] = label;
                    q.push(w);
                }
        }
        ++label;
    }
    g.component_count = static_cast<std::size_t>(label);
    return g;
}

namespace {

// Weighted eccentricity of v inside its component (Dijkstra).
double eccentricity(const NeighborhoodGraph& g, const PointCloud& cloud, Index v) {
    const std::size_t n = g.size();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    using Entry = std::pair<double, Index>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    dist[v] = 0.0;
    pq.emplace(0.0, v);
    double ecc = 0.0;
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        ecc = std::max(ecc, d);
        for (Index w : g.adjacency[u]) {
            const double nd = d + cloud.dist(u, w);
            if (nd < dist[w]) {
                dist[w] = nd;
                pq.emplace(nd, w);
            }
        }
    }
    return ecc;
}

}  // namespace

std::vector<Index> component_centers(const NeighborhoodGraph& graph, const PointCloud& cloud,
                                     std::size_t min_component_size) {
    if (min_component_size < 1)
        throw std::invalid_argument("component_centers: min_component_size >= 1 required");
    const std::size_t n = graph.size();
    std::vector<std::size_t> comp_size(graph.component_count, 0);
    for (std::size_t i = 0; i < n; ++i) ++comp_size[graph.component[i]];

    std::vector<Index> best(graph.component_count, -1);
    std::vector<double> best_ecc(graph.component_count,
                                 std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        const Index v = static_cast<Index>(i);
        const Index c = graph.component[i];
        if (comp_size[c] < min_component_size) continue;
        const double e = eccentricity(graph, cloud, v);
        if (e < best_ecc[c]) {  // lowest index wins ties by scan order
            best_ecc[c] = e;
            best[c] = v;
        }
    }
    std::vector<Index> centers;
    for (Index v : best)
        if (v != -1) centers.push_back(v);
    std::sort(centers.begin(), centers.end());
    return centers;
}

}  // namespace lhdim
