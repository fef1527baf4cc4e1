#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lhdim/point_cloud.hpp"

namespace lhdim {

// All indices within ‖p_i − center‖ ≤ radius (closed ball).
std::vector<Index> ball_query(const PointCloud& cloud, std::span<const double> center,
                              double radius);

// P_{α,r}: { i : ‖p_i − p‖ ≤ r + α }, the vertex set of the inner cover.
std::vector<Index> inner_vertex_set(const PointCloud& cloud, std::span<const double> p,
                                    double alpha, double r);

// P_{α,r}^β: { i : β − α ≤ ‖p_i − p‖ ≤ r + α }. B^β is the complement of the
// open β-ball, so intersection with a closed α-ball reduces to d ≥ β − α.
std::vector<Index> outer_vertex_set(const PointCloud& cloud, std::span<const double> p,
                                    double alpha, double r, double beta);

// Greedy farthest-point traversal. Start index drawn from the seed; stops at
// `count` points, or (count == 0) when no remaining point is ≥ min_dist away
// from the selected set.
std::vector<Index> farthest_point_subsample(const PointCloud& cloud, std::size_t count,
                                            double min_dist, std::uint64_t seed);

struct NeighborhoodGraph {
    double edge_len = 0.0;
    std::vector<std::vector<Index>> adjacency;   // sorted, symmetric, no self-loops
    std::vector<Index> component;                // component label per vertex
    std::size_t component_count = 0;

    std::size_t size() const { return adjacency.size(); }
};

NeighborhoodGraph build_neighborhood_graph(const PointCloud& cloud, double edge_len);

// One center per component of size ≥ min_component_size: the vertex of minimum
// eccentricity, with shortest-path distances weighted by Euclidean edge
// lengths. Ties broken by lowest vertex index.
std::vector<Index> component_centers(const NeighborhoodGraph& graph, const PointCloud& cloud,
                                     std::size_t min_component_size);

}  // namespace lhdim
