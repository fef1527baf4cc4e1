#include "lhdim/rips.hpp"

#include <algorithm>

namespace lhdim {

bool RipsComplex::contains(const Simplex& s) const {
    return std::binary_search(simplices.begin(), simplices.end(), s, simplex_less);
}

namespace {

// Extend `current` by vertices from `cands` (all adjacent to every member of
// current, and greater than its last vertex). Output-sensitive clique listing.
void expand(const std::vector<std::vector<Index>>& fwd_adj,
            Simplex& current, const std::vector<Index>& cands, int dim_cap,
            std::size_t budget, std::vector<Simplex>& out) {
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
        const Index v = cands[ci];
        current.push_back(v);
        if (out.size() >= budget)
            throw BudgetExceeded("simplex budget exceeded during Rips expansion");
        out.push_back(current);
        if (static_cast<int>(current.size()) - 1 < dim_cap) {
            // next candidates: cands ∩ fwd_adj[v], both sorted
            std::vector<Index> next;
            std::set_intersection(cands.begin() + ci + 1, cands.end(),
                                  fwd_adj[v].begin(), fwd_adj[v].end(),
                                  std::back_inserter(next));
            if (!next.empty()) expand(fwd_adj, current, next, dim_cap, budget, out);
        }
        current.pop_back();
    }
}

}  // namespace

RipsComplex build_rips(const PointCloud& cloud, std::vector<Index> vertex_set,
                       double threshold, int dim_cap, std::size_t budget) {
    if (dim_cap < 0) throw std::invalid_argument("build_rips: dim_cap < 0");
    if (threshold < 0) throw std::invalid_argument("build_rips: threshold < 0");
    std::sort(vertex_set.begin(), vertex_set.end());
    vertex_set.erase(std::unique(vertex_set.begin(), vertex_set.end()), vertex_set.end());

    RipsComplex cx;
    cx.threshold = threshold;
    cx.dim_cap = dim_cap;
    cx.vertices = std::move(vertex_set);

    const std::size_t m = cx.vertices.size();
    const double t2 = threshold * threshold;

    // forward adjacency in global-index space
    std::vector<std::vector<Index>> fwd_adj;
    std::size_t max_v = 0;
    for (Index v : cx.vertices) max_v = std::max<std::size_t>(max_v, v);
    fwd_adj.assign(m ? max_v + 1 : 0, {});
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (cloud.dist2(cx.vertices[i], cx.vertices[j]) <= t2)
                fwd_adj[cx.vertices[i]].push_back(cx.vertices[j]);

    Simplex current;
    for (std::size_t i = 0; i < m; ++i) {
        const Index v = cx.vertices[i];
        if (cx.simplices.size() >= budget)
            throw BudgetExceeded("simplex budget exceeded during Rips expansion");
        current.assign(1, v);
        cx.simplices.push_back(current);
        if (dim_cap >= 1 && !fwd_adj[v].empty())
            expand(fwd_adj, current, fwd_adj[v], dim_cap, budget, cx.simplices);
    }
    std::sort(cx.simplices.begin(), cx.simplices.end(), simplex_less);
    return cx;
}

std::vector<Simplex> enumerate_cliques_bruteforce(const PointCloud& cloud,
                                                  const std::vector<Index>& vertex_set,
                                                  double threshold, int dim_cap) {
    std::vector<Index> vs = vertex_set;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    const std::size_t m = vs.size();
    if (m > 20) throw std::invalid_argument("bruteforce clique enumeration: too many vertices");
    const double t2 = threshold * threshold;
    std::vector<Simplex> out;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        Simplex s;
        for (std::size_t i = 0; i < m; ++i)
            if (mask & (1u << i)) s.push_back(vs[i]);
        if (static_cast<int>(s.size()) - 1 > dim_cap) continue;
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i)
            for (std::size_t j = i + 1; j < s.size() && ok; ++j)
                if (cloud.dist2(s[i], s[j]) > t2) ok = false;
        if (ok) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), simplex_less);
    return out;
}

}  // namespace lhdim
