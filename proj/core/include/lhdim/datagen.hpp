#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "lhdim/point_cloud.hpp"

namespace lhdim {

// Uniform sample of a spherical cap of S^n ⊂ R^{n+1} around the pole e_{n+1}:
// an area-uniform batch of initial_count points, densified greedily until the
// covering radius (measured against a dense probe set of the cap) is
// ≤ target_epsilon. Points lie exactly on the sphere.
PointCloud sphere_cap(int n, double cap_angle, double target_epsilon, std::uint64_t seed,
                      std::size_t probe_count = 200000, std::size_t initial_count = 1);

// All translations of a constant-intensity patch inside a black 60x84 image,
// one vectorized image per offset; intrinsic dimension 2 by construction.
PointCloud shift_images(int image_w = 60, int image_h = 84, int patch_w = 21,
                        int patch_h = 29, int stride = 1);

// Grid sample of a parametric map R^m -> R^d with uniform-in-ball Hausdorff
// noise of the given magnitude added in the ambient space.
using ParametricMap = std::function<std::vector<double>(const std::vector<double>&)>;

PointCloud parametric_noisy(const ParametricMap& map, int param_dim,
                            const std::vector<double>& lo, const std::vector<double>& hi,
                            int grid_per_axis, double hausdorff_noise, std::uint64_t seed);

// Clifford torus map (cos u, sin u, cos v, sin v)/sqrt(2), a flat 2-manifold.
std::vector<double> flat_torus_map(const std::vector<double>& uv);

}  // namespace lhdim
