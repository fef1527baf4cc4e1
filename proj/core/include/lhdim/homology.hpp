#pragma once

#include <vector>

#include "lhdim/local_pair.hpp"

namespace lhdim {

// Sparse-column Z2 matrix over a filtration-ordered simplex list. Rows and
// columns share the same index space; column j lists the (earlier) rows of
// its facets, sorted ascending.
struct BoundaryMatrixZ2 {
    std::vector<std::vector<int>> columns;
    std::vector<int> dim;        // simplex dimension per column
    std::vector<Region> region;  // region tag per column (quotient matrices)

    std::size_t size() const { return columns.size(); }
};

struct ReducedMatrix {
    std::vector<std::vector<int>> columns;
    std::vector<int> low_to_col;  // row -> column with that low, or -1

    bool is_zero(int j) const { return columns[j].empty(); }
    int low(int j) const { return columns[j].empty() ? -1 : columns[j].back(); }
};

struct LocalHomologyProfile {
    std::vector<int> ranks;  // index k in [0, k_max]

    bool trivial() const;
    // n with ranks[n] = 1 and all others 0, or -1
    int sphere_dimension() const;
    bool operator==(const LocalHomologyProfile&) const = default;
};

// Quotient boundary matrix of the region-3/4/5 suffix: one column per
// simplex, facet rows in regions 1-2 dropped.
BoundaryMatrixZ2 assemble_boundary(const LocalPairComplex& pair);

// Standard left-to-right column reduction over Z2.
ReducedMatrix reduce(const BoundaryMatrixZ2& matrix);

// #Zero_k - #Bdry_k readout: zero columns of region-4 k-simplices minus those
// whose row is the low of a later column in regions 4-5.
LocalHomologyProfile image_rank(const BoundaryMatrixZ2& matrix, const ReducedMatrix& red,
                                int k_max);

// Betti numbers of H(A1,B1) from the region-3/4 submatrix (rows and columns
// restricted), per dimension 0..k_max.
std::vector<int> submatrix_relative_betti(const LocalPairComplex& pair, int k_max);

// Independent route: cone B1/B2 with a shared dummy apex and compute
// rank im(H_k(A1 ∪ w*B1) -> H_k(A2 ∪ w*B2)) over an augmented two-block
// filtration. Cross-validates image_rank.
LocalHomologyProfile cone_oracle_rank(const LocalPairComplex& pair, int k_max,
                                      std::size_t budget = kDefaultSimplexBudget);

// Exact Z2 relative Betti number of (A,B) in dimension k by dense Gaussian
// elimination on the quotient boundary operators. Small instances only.
int dense_rank_oracle(const std::vector<Simplex>& a_simplices,
                      const std::vector<Simplex>& b_simplices, int k,
                      std::size_t max_simplices = 200);

}  // namespace lhdim
