#include "lhdim/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace lhdim {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Area-uniform point of the cap {angle from pole ≤ cap_angle} of S^n.
// Polar angle has density ∝ sin^{n-1}; drawn by 1D rejection.
std::vector<double> cap_point(int n, double cap_angle, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);

    double theta;
    if (n == 1) {
        theta = cap_angle * (2.0 * unif(rng) - 1.0);  // signed angle on the circle
        return {std::sin(theta), std::cos(theta)};
    }
    const double env = std::pow(std::sin(std::min(cap_angle, kPi / 2.0)), n - 1);
    do {
        theta = cap_angle * unif(rng);
    } while (unif(rng) * env > std::pow(std::sin(theta), n - 1));

    // uniform direction on S^{n-1} for the equatorial part
    std::vector<double> u(static_cast<std::size_t>(n));
    double norm = 0.0;
    do {
        norm = 0.0;
        for (auto& x : u) {
            x = gauss(rng);
            norm += x * x;
        }
    } while (norm == 0.0);
    norm = std::sqrt(norm);

    std::vector<double> p(static_cast<std::size_t>(n) + 1);
    const double s = std::sin(theta);
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = s * u[static_cast<std::size_t>(i)] / norm;
    p[static_cast<std::size_t>(n)] = std::cos(theta);
    return p;
}

}  // namespace

PointCloud sphere_cap(int n, double cap_angle, double target_epsilon, std::uint64_t seed,
                      std::size_t probe_count, std::size_t initial_count) {
    if (n < 1) throw std::invalid_argument("sphere_cap: n >= 1 required");
    if (!(cap_angle > 0 && cap_angle <= kPi))
        throw std::invalid_argument("sphere_cap: cap_angle in (0, pi] required");
    if (!(target_epsilon > 0)) throw std::invalid_argument("sphere_cap: target_epsilon > 0");

    std::mt19937_64 rng(seed);
    const std::size_t d = static_cast<std::size_t>(n) + 1;

    std::vector<std::vector<double>> probes(probe_count);
    for (auto& p : probes) p = cap_point(n, cap_angle, rng);

    // Area-uniform stage, then greedy densification against the probe set
    // until the probes certify a covering radius ≤ target_epsilon.
    std::vector<std::vector<double>> sample;
    const std::size_t start = std::max<std::size_t>(initial_count, 1);
    for (std::size_t i = 0; i < start; ++i) sample.push_back(cap_point(n, cap_angle, rng));

    std::vector<double> d2(probe_count, std::numeric_limits<double>::infinity());
    std::size_t next = 0;  // first sample point whose distances are not folded in yet
    const double eps2 = target_epsilon * target_epsilon;
    for (;;) {
        std::size_t far_idx = 0;
        double far_d2 = -1.0;
        for (std::size_t i = 0; i < probe_count; ++i) {
            for (std::size_t j = next; j < sample.size(); ++j) {
                double acc = 0.0;
                for (std::size_t k = 0; k < d; ++k) {
                    const double t = probes[i][k] - sample[j][k];
                    acc += t * t;
                }
                d2[i] = std::min(d2[i], acc);
            }
            if (d2[i] > far_d2) {
                far_d2 = d2[i];
                far_idx = i;
            }
        }
        next = sample.size();
        if (far_d2 <= eps2) break;
        sample.push_back(probes[far_idx]);
    }
    return PointCloud::from_rows(sample);
}

PointCloud shift_images(int image_w, int image_h, int patch_w, int patch_h, int stride) {
    if (patch_w <= 0 || patch_h <= 0 || stride <= 0)
        throw std::invalid_argument("shift_images: positive patch size and stride required");
    if (patch_w > image_w || patch_h > image_h)
        throw std::invalid_argument("shift_images: patch does not fit inside the image");

    const std::size_t pixels = static_cast<std::size_t>(image_w) * static_cast<std::size_t>(image_h);
    std::vector<std::vector<double>> rows;
    for (int oy = 0; oy + patch_h <= image_h; oy += stride)
        for (int ox = 0; ox + patch_w <= image_w; ox += stride) {
            std::vector<double> img(pixels, 0.0);
            for (int y = 0; y < patch_h; ++y)
                for (int x = 0; x < patch_w; ++x)
                    img[static_cast<std::size_t>((oy + y) * image_w + (ox + x))] = 1.0;
            rows.push_back(std::move(img));
        }
    return PointCloud::from_rows(rows);
}

PointCloud parametric_noisy(const ParametricMap& map, int param_dim,
                            const std::vector<double>& lo, const std::vector<double>& hi,
                            int grid_per_axis, double hausdorff_noise, std::uint64_t seed) {
    if (param_dim < 1 || grid_per_axis < 1)
        throw std::invalid_argument("parametric_noisy: bad grid parameters");
    if (lo.size() != static_cast<std::size_t>(param_dim) || hi.size() != lo.size())
        throw std::invalid_argument("parametric_noisy: bounds dimension mismatch");
    if (hausdorff_noise < 0) throw std::invalid_argument("parametric_noisy: negative noise");

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    std::vector<std::vector<double>> rows;
    std::vector<int> idx(static_cast<std::size_t>(param_dim), 0);
    for (;;) {
        std::vector<double> u(static_cast<std::size_t>(param_dim));
        for (int a = 0; a < param_dim; ++a) {
            const double t = (grid_per_axis == 1)
                                 ? 0.5
                                 : static_cast<double>(idx[static_cast<std::size_t>(a)]) /
                                       static_cast<double>(grid_per_axis);
            u[static_cast<std::size_t>(a)] = lo[static_cast<std::size_t>(a)] +
                t * (hi[static_cast<std::size_t>(a)] - lo[static_cast<std::size_t>(a)]);
        }
        std::vector<double> x = map(u);
        if (hausdorff_noise > 0) {
            std::vector<double> dir(x.size());
            double norm = 0.0;
            for (auto& v : dir) {
                v = gauss(rng);
                norm += v * v;
            }
            norm = std::sqrt(norm);
            const double radius =
                hausdorff_noise * std::pow(unif(rng), 1.0 / static_cast<double>(x.size()));
            if (norm > 0)
                for (std::size_t k = 0; k < x.size(); ++k) x[k] += radius * dir[k] / norm;
        }
        rows.push_back(std::move(x));

        int a = 0;
        while (a < param_dim && ++idx[static_cast<std::size_t>(a)] == grid_per_axis) {
            idx[static_cast<std::size_t>(a)] = 0;
            ++a;
        }
        if (a == param_dim) break;
    }
    return PointCloud::from_rows(rows);
}

std::vector<double> flat_torus_map(const std::vector<double>& uv) {
    const double s = 1.0 / std::sqrt(2.0);
    return {s * std::cos(uv[0]), s * std::sin(uv[0]), s * std::cos(uv[1]), s * std::sin(uv[1])};
}

}  // namespace lhdim
