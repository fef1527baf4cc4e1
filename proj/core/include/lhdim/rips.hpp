#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "lhdim/point_cloud.hpp"

namespace lhdim {

// Strictly increasing tuple of global point indices; dim = size - 1.
using Simplex = std::vector<Index>;

// Total order by (dimension, lexicographic vertex tuple).
inline bool simplex_less(const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Clique complex of the distance-threshold graph on a vertex subset, with all
// simplices of dim ≤ dim_cap. Simplex list kept sorted by (dim, lex).
struct RipsComplex {
    double threshold = 0.0;
    int dim_cap = 0;
    std::vector<Index> vertices;       // sorted global indices
    std::vector<Simplex> simplices;    // sorted by simplex_less, face-closed

    bool contains(const Simplex& s) const;
    std::size_t size() const { return simplices.size(); }
};

constexpr std::size_t kDefaultSimplexBudget = 5'000'000;

RipsComplex build_rips(const PointCloud& cloud, std::vector<Index> vertex_set,
                       double threshold, int dim_cap,
                       std::size_t budget = kDefaultSimplexBudget);

// Brute-force reference: every vertex subset of size ≤ dim_cap+1 whose
// pairwise distances are ≤ threshold. For oracle tests on small vertex sets.
std::vector<Simplex> enumerate_cliques_bruteforce(const PointCloud& cloud,
                                                  const std::vector<Index>& vertex_set,
                                                  double threshold, int dim_cap);

}  // namespace lhdim
