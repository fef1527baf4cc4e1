#include "lhdim/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace lhdim {

namespace {

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Index v : s) h = h * 1099511628211ull ^ static_cast<std::size_t>(v + 1);
        return h;
    }
};

using SimplexIndexMap = std::unordered_map<Simplex, int, SimplexHash>;

// xor-merge of two sorted row lists
std::vector<int> add_mod2(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

}  // namespace

bool LocalHomologyProfile::trivial() const {
    return std::all_of(ranks.begin(), ranks.end(), [](int r) { return r == 0; });
}

int LocalHomologyProfile::sphere_dimension() const {
    int n = -1;
    for (std::size_t k = 0; k < ranks.size(); ++k) {
        if (ranks[k] == 0) continue;
        if (ranks[k] != 1 || n != -1) return -1;
        n = static_cast<int>(k);
    }
    return n;
}

BoundaryMatrixZ2 assemble_boundary(const LocalPairComplex& pair) {
    const std::size_t q0 = pair.quotient_begin();
    const std::size_t m = pair.size() - q0;

    SimplexIndexMap row_of;
    row_of.reserve(m * 2);
    for (std::size_t i = 0; i < m; ++i)
        row_of.emplace(pair.filtration[q0 + i].vertices, static_cast<int>(i));

    BoundaryMatrixZ2 mat;
    mat.columns.resize(m);
    mat.dim.resize(m);
    mat.region.resize(m);
    Simplex facet;
    for (std::size_t i = 0; i < m; ++i) {
        const TaggedSimplex& ts = pair.filtration[q0 + i];
        mat.dim[i] = ts.dim();
        mat.region[i] = ts.region;
        if (ts.dim() == 0) continue;
        std::vector<int>& col = mat.columns[i];
        for (std::size_t drop = 0; drop < ts.vertices.size(); ++drop) {
            facet = ts.vertices;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
            auto it = row_of.find(facet);
            if (it != row_of.end()) col.push_back(it->second);  // regions 1-2 dropped
        }
        std::sort(col.begin(), col.end());
    }
    return mat;
}

ReducedMatrix reduce(const BoundaryMatrixZ2& matrix) {
    const std::size_t m = matrix.size();
    ReducedMatrix red;
    red.columns = matrix.columns;
    red.low_to_col.assign(m, -1);
    for (std::size_t j = 0; j < m; ++j) {
        auto& col = red.columns[j];
        while (!col.empty()) {
            const int low = col.back();
            const int other = red.low_to_col[low];
            if (other == -1) break;
            col = add_mod2(col, red.columns[other]);
        }
        if (!col.empty()) red.low_to_col[col.back()] = static_cast<int>(j);
    }
    return red;
}

LocalHomologyProfile image_rank(const BoundaryMatrixZ2& matrix, const ReducedMatrix& red,
                                int k_max) {
    LocalHomologyProfile profile;
    profile.ranks.assign(static_cast<std::size_t>(k_max) + 1, 0);
    for (std::size_t j = 0; j < matrix.size(); ++j) {
        if (matrix.region[j] != Region::InnerOnly) continue;
        const int k = matrix.dim[j];
        if (k > k_max) continue;
        if (!red.is_zero(static_cast<int>(j))) continue;
        // zero column of a k-simplex in A1\B2: cycle alive in both pairs
        const int pairing = red.low_to_col[j];
        if (pairing != -1 && (matrix.region[pairing] == Region::InnerOnly ||
                              matrix.region[pairing] == Region::OuterOnly))
            continue;  // killed by a (k+1)-simplex of A2\B2
        ++profile.ranks[static_cast<std::size_t>(k)];
    }
    return profile;
}

std::vector<int> submatrix_relative_betti(const LocalPairComplex& pair, int k_max) {
    // regions 3-4 are consecutive in the quotient order; re-index them
    const std::size_t q0 = pair.quotient_begin();
    SimplexIndexMap row_of;
    std::vector<const TaggedSimplex*> picked;
    for (std::size_t i = q0; i < pair.size(); ++i) {
        const TaggedSimplex& ts = pair.filtration[i];
        if (ts.region == Region::SharedSub || ts.region == Region::InnerOnly) {
            row_of.emplace(ts.vertices, static_cast<int>(picked.size()));
            picked.push_back(&ts);
        }
    }
    BoundaryMatrixZ2 mat;
    mat.columns.resize(picked.size());
    mat.dim.resize(picked.size());
    mat.region.assign(picked.size(), Region::InnerOnly);
    Simplex facet;
    for (std::size_t i = 0; i < picked.size(); ++i) {
        const TaggedSimplex& ts = *picked[i];
        mat.dim[i] = ts.dim();
        if (ts.dim() == 0) continue;
        for (std::size_t drop = 0; drop < ts.vertices.size(); ++drop) {
            facet = ts.vertices;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
            auto it = row_of.find(facet);
            if (it != row_of.end()) mat.columns[i].push_back(it->second);
        }
        std::sort(mat.columns[i].begin(), mat.columns[i].end());
    }
    ReducedMatrix red = reduce(mat);
    std::vector<int> betti(static_cast<std::size_t>(k_max) + 1, 0);
    for (std::size_t j = 0; j < picked.size(); ++j) {
        const int k = mat.dim[j];
        if (k > k_max) continue;
        if (red.is_zero(static_cast<int>(j)) && red.low_to_col[j] == -1)
            ++betti[static_cast<std::size_t>(k)];
    }
    return betti;
}

namespace {

// K = A ∪ {w} ∪ w*B with base simplices of B coned up to dim k_max (coned dim
// k_max+1); sorted by (dim, lex). w exceeds every vertex id.
std::vector<Simplex> coned_complex(const RipsComplex& a, const RipsComplex& b, Index w,
                                   int k_max) {
    std::vector<Simplex> out = a.simplices;
    out.push_back({w});
    for (const auto& s : b.simplices) {
        if (static_cast<int>(s.size()) - 1 > k_max) continue;
        Simplex c = s;
        c.push_back(w);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), simplex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

LocalHomologyProfile cone_oracle_rank(const LocalPairComplex& pair, int k_max,
                                      std::size_t budget) {
    Index w = 0;
    for (Index v : pair.A2.vertices) w = std::max(w, v + 1);

    const std::vector<Simplex> k1 = coned_complex(pair.A1, pair.B1, w, k_max);
    const std::vector<Simplex> k2 = coned_complex(pair.A2, pair.B2, w, k_max);
    if (k1.size() + k2.size() > budget)
        throw BudgetExceeded("simplex budget exceeded in cone oracle");

    // two-block filtration with an augmentation row at position 0
    std::vector<const Simplex*> order;
    order.reserve(k2.size());
    std::vector<char> in_k1;
    for (const auto& s : k1) {
        order.push_back(&s);
        in_k1.push_back(1);
    }
    for (const auto& s : k2)
        if (!std::binary_search(k1.begin(), k1.end(), s, simplex_less)) {
            order.push_back(&s);
            in_k1.push_back(0);
        }

    const std::size_t m = order.size() + 1;  // +1 for the empty simplex
    SimplexIndexMap row_of;
    row_of.reserve(m * 2);
    for (std::size_t i = 0; i < order.size(); ++i)
        row_of.emplace(*order[i], static_cast<int>(i + 1));

    BoundaryMatrixZ2 mat;
    mat.columns.resize(m);
    mat.dim.assign(m, -1);
    mat.region.assign(m, Region::OuterOnly);
    Simplex facet;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Simplex& s = *order[i];
        const std::size_t j = i + 1;
        mat.dim[j] = static_cast<int>(s.size()) - 1;
        if (s.size() == 1) {
            mat.columns[j] = {0};  // augmented boundary of a vertex
            continue;
        }
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            facet = s;
            facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
            mat.columns[j].push_back(row_of.at(facet));
        }
        std::sort(mat.columns[j].begin(), mat.columns[j].end());
    }

    ReducedMatrix red = reduce(mat);
    LocalHomologyProfile profile;
    profile.ranks.assign(static_cast<std::size_t>(k_max) + 1, 0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!in_k1[i]) continue;
        const std::size_t j = i + 1;
        const int k = mat.dim[j];
        if (k < 0 || k > k_max) continue;
        if (red.is_zero(static_cast<int>(j)) && red.low_to_col[j] == -1)
            ++profile.ranks[static_cast<std::size_t>(k)];  // born in K1, never dies
    }
    return profile;
}

namespace {

std::size_t rank_z2(std::vector<std::vector<std::uint8_t>> m) {
    std::size_t rank = 0;
    const std::size_t rows = m.size();
    if (rows == 0) return 0;
    const std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && !m[pivot][c]) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = 0; i < rows; ++i)
            if (i != rank && m[i][c])
                for (std::size_t k = c; k < cols; ++k) m[i][k] ^= m[rank][k];
        ++rank;
    }
    return rank;
}

}  // namespace

int dense_rank_oracle(const std::vector<Simplex>& a_simplices,
                      const std::vector<Simplex>& b_simplices, int k,
                      std::size_t max_simplices) {
    if (a_simplices.size() > max_simplices)
        throw std::invalid_argument("dense_rank_oracle: size guard exceeded");
    if (k < 0) throw std::invalid_argument("dense_rank_oracle: k < 0");

    std::vector<Simplex> b = b_simplices;
    std::sort(b.begin(), b.end(), simplex_less);
    auto in_b = [&](const Simplex& s) {
        return std::binary_search(b.begin(), b.end(), s, simplex_less);
    };

    // relative chain bases per dimension k-1, k, k+1
    std::vector<std::vector<Simplex>> basis(3);
    for (const auto& s : a_simplices) {
        const int d = static_cast<int>(s.size()) - 1;
        if (d < k - 1 || d > k + 1 || in_b(s)) continue;
        basis[static_cast<std::size_t>(d - k + 1)].push_back(s);
    }
    for (auto& lvl : basis) std::sort(lvl.begin(), lvl.end(), simplex_less);

    auto boundary_rank = [&](int lvl) -> std::size_t {
        // matrix of ∂ from basis[lvl] into basis[lvl-1]
        const auto& dom = basis[static_cast<std::size_t>(lvl)];
        const auto& codom = basis[static_cast<std::size_t>(lvl - 1)];
        if (dom.empty() || codom.empty()) return 0;
        std::vector<std::vector<std::uint8_t>> m(
            codom.size(), std::vector<std::uint8_t>(dom.size(), 0));
        Simplex facet;
        for (std::size_t j = 0; j < dom.size(); ++j)
            for (std::size_t drop = 0; drop < dom[j].size(); ++drop) {
                facet = dom[j];
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
                auto it = std::lower_bound(codom.begin(), codom.end(), facet, simplex_less);
                if (it != codom.end() && *it == facet)
                    m[static_cast<std::size_t>(it - codom.begin())][j] ^= 1;
            }
        return rank_z2(std::move(m));
    };

    const std::size_t dim_ck = basis[1].size();
    const std::size_t rank_dk = (k == 0) ? 0 : boundary_rank(1);
    const std::size_t rank_dk1 = boundary_rank(2);
    return static_cast<int>(dim_ck - rank_dk - rank_dk1);
}

}  // namespace lhdim
