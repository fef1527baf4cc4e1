#pragma once

#include <array>
#include <iosfwd>
#include <span>

#include "lhdim/rips.hpp"
#include "lhdim/schedule.hpp"

namespace lhdim {

// Regions partitioning the simplices of A2, listed in filtration-block order.
enum class Region : std::uint8_t {
    OuterSub = 1,    // B2 \ A1
    InnerSub = 2,    // B1
    SharedSub = 3,   // (B2 \ B1) ∩ A1
    InnerOnly = 4,   // A1 \ B2
    OuterOnly = 5,   // A2 \ (A1 ∪ B2)
};

struct TaggedSimplex {
    Simplex vertices;
    Region region;
    int dim() const { return static_cast<int>(vertices.size()) - 1; }
};

// The four-complex pair (A1,B1) -> (A2,B2) with region tags and the total
// order blocks 1..5, each block sorted by (dim, lex). Simplices after block 2
// (regions 3-5) carry the quotient filtration the matrix algorithm reduces.
struct LocalPairComplex {
    RipsComplex A1, B1, A2, B2;
    std::vector<TaggedSimplex> filtration;     // all of A2 in block order
    std::array<std::size_t, 6> region_count{}; // indexed by region value

    std::size_t size() const { return filtration.size(); }
    // index of the first region-3 simplex (start of the quotient part)
    std::size_t quotient_begin() const { return region_count[1] + region_count[2]; }
};

// Assembles the pair from four already-built complexes, verifying the
// inclusions B1 ⊆ A1 ⊆ A2 and B1 ⊆ B2 ⊆ A2 simplex by simplex.
LocalPairComplex make_local_pair(RipsComplex a1, RipsComplex b1, RipsComplex a2,
                                 RipsComplex b2);

// Vertex sets per the two-scale construction: A1 = Rips^{2a}(P_{a,r}),
// B1 = Rips^{2a}(P_{a,r}^{eta2}), A2 = Rips^{6a}(P_{3a,r}),
// B2 = Rips^{6a}(P_{3a,r}^{eta1}); dim_cap = k_max + 1.
LocalPairComplex build_local_pair(const PointCloud& cloud, std::span<const double> p,
                                  const ParamSchedule& schedule,
                                  std::size_t budget = kDefaultSimplexBudget);

// One simplex per line: `region dim v0 v1 ...` in filtration order.
void dump_local_pair(const LocalPairComplex& pair, std::ostream& out);

}  // namespace lhdim
