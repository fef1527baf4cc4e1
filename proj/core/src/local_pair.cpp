#include "lhdim/local_pair.hpp"

#include <algorithm>
#include <ostream>

#include "lhdim/geometry.hpp"

namespace lhdim {

namespace {

void check_subcomplex(const RipsComplex& small, const RipsComplex& big, const char* what) {
    for (const auto& s : small.simplices)
        if (!big.contains(s))
            throw std::logic_error(std::string("inclusion violation: ") + what);
}

Region classify(const Simplex& s, const RipsComplex& a1, const RipsComplex& b1,
                const RipsComplex& b2) {
    const bool in_a1 = a1.contains(s);
    const bool in_b2 = b2.contains(s);
    if (b1.contains(s)) return Region::InnerSub;
    if (in_b2 && in_a1) return Region::SharedSub;
    if (in_b2) return Region::OuterSub;
    if (in_a1) return Region::InnerOnly;
    return Region::OuterOnly;
}

}  // namespace

LocalPairComplex make_local_pair(RipsComplex a1, RipsComplex b1, RipsComplex a2,
                                 RipsComplex b2) {
    check_subcomplex(b1, a1, "B1 not inside A1");
    check_subcomplex(a1, a2, "A1 not inside A2");
    check_subcomplex(b1, b2, "B1 not inside B2");
    check_subcomplex(b2, a2, "B2 not inside A2");

    LocalPairComplex pair;
    pair.filtration.reserve(a2.simplices.size());
    for (const auto& s : a2.simplices) {
        const Region reg = classify(s, a1, b1, b2);
        ++pair.region_count[static_cast<std::size_t>(reg)];
        pair.filtration.push_back({s, reg});
    }
    // a2.simplices is (dim, lex)-sorted; a stable partition by region keeps
    // that order inside each block.
    std::stable_sort(pair.filtration.begin(), pair.filtration.end(),
                     [](const TaggedSimplex& x, const TaggedSimplex& y) {
                         return static_cast<int>(x.region) < static_cast<int>(y.region);
                     });
    pair.A1 = std::move(a1);
    pair.B1 = std::move(b1);
    pair.A2 = std::move(a2);
    pair.B2 = std::move(b2);
    return pair;
}

LocalPairComplex build_local_pair(const PointCloud& cloud, std::span<const double> p,
                                  const ParamSchedule& s, std::size_t budget) {
    s.validate();
    const int dim_cap = s.k_max + 1;
    const double a = s.alpha;
    auto v_a1 = inner_vertex_set(cloud, p, a, s.r);
    auto v_b1 = outer_vertex_set(cloud, p, a, s.r, s.eta2);
    auto v_a2 = inner_vertex_set(cloud, p, 3.0 * a, s.r);
    auto v_b2 = outer_vertex_set(cloud, p, 3.0 * a, s.r, s.eta1);

    RipsComplex a1 = build_rips(cloud, std::move(v_a1), 2.0 * a, dim_cap, budget);
    RipsComplex b1 = build_rips(cloud, std::move(v_b1), 2.0 * a, dim_cap, budget);
    RipsComplex a2 = build_rips(cloud, std::move(v_a2), 6.0 * a, dim_cap, budget);
    RipsComplex b2 = build_rips(cloud, std::move(v_b2), 6.0 * a, dim_cap, budget);
    return make_local_pair(std::move(a1), std::move(b1), std::move(a2), std::move(b2));
}

void dump_local_pair(const LocalPairComplex& pair, std::ostream& out) {
    for (const auto& ts : pair.filtration) {
        out << static_cast<int>(ts.region) << ' ' << ts.dim();
        for (Index v : ts.vertices) out << ' ' << v;
        out << '\n';
    }
}

}  // namespace lhdim
