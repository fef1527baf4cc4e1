// Acceptance gate: one pass/fail line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lhdim/lhdim.hpp"

using namespace lhdim;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

PointCloud circle_cloud(std::size_t n) {
    std::vector<double> coords;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = 2.0 * 3.14159265358979323846 * static_cast<double>(i) /
                         static_cast<double>(n);
        coords.push_back(std::cos(t));
        coords.push_back(std::sin(t));
    }
    return PointCloud(std::move(coords), 2);
}

PointCloud random_cloud(std::size_t n, std::size_t d, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<double> coords(n * d);
    for (auto& x : coords) x = unif(rng);
    return PointCloud(std::move(coords), d);
}

ParamSchedule random_manual(std::mt19937_64& rng, int k_max) {
    std::uniform_real_distribution<double> unif(0.05, 0.6);
    const double a = unif(rng);
    const double e1 = a + unif(rng);
    const double e2 = e1 + unif(rng);
    const double r = e2 + unif(rng);
    return manual_schedule(a, e1, e2, r, k_max);
}

struct Criterion {
    int id;
    std::string name;
    bool pass;
    std::string detail;
};

// ---------------------------------------------------------------- criterion 1
Criterion oracle_equivalence() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(424242);
    int agree = 0, total = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t n = 4 + rng() % 9;
        const std::size_t d = 1 + rng() % 3;
        const int k_max = 1 + static_cast<int>(rng() % 2);
        PointCloud cloud = random_cloud(n, d, rng);
        ParamSchedule s = random_manual(rng, k_max);
        auto pair = build_local_pair(cloud, cloud.point(static_cast<Index>(rng() % n)), s);
        auto mat = assemble_boundary(pair);
        auto red = reduce(mat);
        auto via_matrix = image_rank(mat, red, k_max);
        auto via_cone = cone_oracle_rank(pair, k_max);
        ++total;
        if (via_matrix.ranks == via_cone.ranks) ++agree;
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << agree << "/" << total << " agree, " << secs << " s";
    return {1, "oracle equivalence", agree == total && total >= 200 && secs < 60.0,
            os.str()};
}

// ---------------------------------------------------------------- criterion 2
Criterion relative_homology() {
    const auto t0 = Clock::now();
    std::mt19937_64 rng(515151);
    int checked = 0, matched = 0;
    while (checked < 100) {
        const std::size_t n = 5 + rng() % 8;
        PointCloud cloud = random_cloud(n, 2, rng);
        ParamSchedule s = random_manual(rng, 2);
        auto pair = build_local_pair(cloud, cloud.point(0), s);
        if (pair.A1.size() + pair.B1.size() > 200) continue;
        auto betti = submatrix_relative_betti(pair, 2);
        ++checked;
        bool ok = true;
        for (int k = 0; k <= 2; ++k)
            if (betti[k] != dense_rank_oracle(pair.A1.simplices, pair.B1.simplices, k))
                ok = false;
        if (ok) ++matched;
    }
    std::ostringstream os;
    os << matched << "/" << checked << " exact, " << seconds_since(t0) << " s";
    return {2, "relative homology vs dense elimination", matched == checked, os.str()};
}

// ---------------------------------------------------------------- criterion 3
Criterion circle_golden() {
    const auto t0 = Clock::now();
    PointCloud cloud = circle_cloud(60);
    // Frozen fixture: ordering constraints of the manual mode with the inner
    // exclusion radius wide enough that short outer edges cannot bridge it.
    ParamSchedule s = manual_schedule(0.15, 1.0, 1.3, 1.5, 1);
    BaseStrategy all;
    all.kind = BaseStrategy::Kind::All;
    EstimateOptions opts;
    opts.truth = 1;
    auto rep = estimate_dimension(cloud, s, all, opts);
    const double secs = seconds_since(t0);
    const bool pass = rep.sphere_tally.count(1) && rep.sphere_tally.at(1) == 60 &&
                      rep.non_sphere_count == 0 && rep.estimated_dimension == 1 &&
                      secs < 10.0;
    std::ostringstream os;
    os << "sphere(1) " << (rep.sphere_tally.count(1) ? rep.sphere_tally.at(1) : 0)
       << "/60, non-sphere " << rep.non_sphere_count << ", dim "
       << rep.estimated_dimension << ", " << secs << " s";
    return {3, "circle golden run", pass, os.str()};
}

// ---------------------------------------------------------------- criterion 4
Criterion sphere_caps() {
    std::ostringstream os;
    bool pass2 = false, pass3 = false;

    {  // S^2 cap, ~1500 points at covering radius 0.05
        const auto t0 = Clock::now();
        PointCloud cap = sphere_cap(2, 1.5, 0.05, 1, 100000);
        ParamSchedule s = manual_schedule(0.06, 0.37, 0.43, 0.47, 2);
        BaseStrategy sparse;
        sparse.kind = BaseStrategy::Kind::Sparse;
        sparse.min_dist = 0.5;
        EstimateOptions opts;
        opts.seed = 3;
        opts.truth = 2;
        auto rep = estimate_dimension(cap, s, sparse, opts);
        std::size_t wrong_n = 0;
        for (const auto& [n, c] : rep.sphere_tally)
            if (n != 2) wrong_n += c;
        pass2 = rep.estimated_dimension == 2 && rep.valid_count > 0 && wrong_n == 0 &&
                rep.non_sphere_count == 0;
        os << "S2: " << cap.size() << " pts, sphere(2) "
           << (rep.sphere_tally.count(2) ? rep.sphere_tally.at(2) : 0) << "/"
           << rep.per_point.size() << " bases, wrong-n " << wrong_n << ", dim "
           << rep.estimated_dimension << ", " << seconds_since(t0) << " s";
    }

    {  // S^3 cap at covering radius 0.0125, run at the 1000-point subsample scale
        const auto t0 = Clock::now();
        PointCloud cap = sphere_cap(3, 0.105, 0.0125, 2, 150000);
        PointCloud sub = cap.size() > 1000
                             ? cap.subset(farthest_point_subsample(cap, 1000, 0.0, 5))
                             : cap;
        // Tightest admissible schedule that carries a 3-dimensional relative
        // class on the inner pair (alpha at the covering radius, minimal
        // exclusion annulus); see the project notes on why the outer complex
        // cannot stay within any workable simplex budget at this dimension.
        const double e = 0.0125;
        ParamSchedule s = manual_schedule(1.0 * e, 3.05 * e, 3.3 * e, 3.55 * e, 3);
        // five interior base points, farthest-point spread
        std::vector<Index> bases;
        for (Index i : farthest_point_subsample(sub, 40, 0.0, 7)) {
            const auto p = sub.point(i);
            if (p[3] > std::cos(0.6 * 0.105)) bases.push_back(i);
            if (bases.size() == 5) break;
        }
        BaseStrategy list;
        list.kind = BaseStrategy::Kind::List;
        list.list = bases;
        EstimateOptions opts;
        opts.seed = 5;
        opts.truth = 3;
        auto rep = estimate_dimension(sub, s, list, opts);
        std::size_t wrong_n = 0;
        for (const auto& [n, c] : rep.sphere_tally)
            if (n != 3) wrong_n += c;
        const double secs = seconds_since(t0);
        pass3 = rep.estimated_dimension == 3 && rep.valid_count > 0 && wrong_n == 0 &&
                rep.non_sphere_count == 0 && secs < 120.0;
        os << " | S3: " << cap.size() << " pts (" << sub.size() << " subsample), valid "
           << rep.valid_count << ", skipped " << rep.skipped_count << "/"
           << rep.per_point.size() << " bases, dim " << rep.estimated_dimension << ", "
           << secs << " s";
    }

    return {4, "sphere caps", pass2 && pass3, os.str()};
}

// ---------------------------------------------------------------- criterion 5
Criterion shift_corpus() {
    const auto t0 = Clock::now();
    PointCloud imgs = shift_images();
    // Smallest schedule whose inner complex contains any 2-simplex at all
    // (first Rips triangle appears at threshold sqrt(84), so 2a must reach
    // it), with the minimal exclusion annulus on top of 3a.
    const double a = std::sqrt(84.0) / 2.0 + 0.01;
    ParamSchedule s = manual_schedule(a, 3 * a + 0.5, 3 * a + 1.0, 3 * a + 1.5, 2);
    // three spread-out interior offsets of the 40x56 offset grid
    BaseStrategy list;
    list.kind = BaseStrategy::Kind::List;
    list.list = {28 * 40 + 20, 14 * 40 + 10, 42 * 40 + 30};
    EstimateOptions opts;
    opts.seed = 9;
    opts.truth = 2;
    auto rep = estimate_dimension(imgs, s, list, opts);
    std::size_t plural = rep.sphere_tally.count(2) ? rep.sphere_tally.at(2) : 0;
    const bool pass = rep.estimated_dimension == 2 && rep.valid_count > 0 &&
                      plural * 10 >= rep.valid_count * 7 &&
                      seconds_since(t0) < 600.0;
    std::ostringstream os;
    os << imgs.size() << " pts, sphere(2) " << plural << " of " << rep.valid_count
       << " valid, skipped " << rep.skipped_count << "/" << rep.per_point.size()
       << " bases, dim " << rep.estimated_dimension << ", " << seconds_since(t0) << " s";
    return {5, "shift corpus", pass, os.str()};
}

// ---------------------------------------------------------------- criterion 6
Criterion property_suites() {
    std::mt19937_64 rng(606060);
    std::uniform_real_distribution<double> unif(0.02, 0.5);
    bool ok = true;
    std::string failed;

    // vertex-set monotonicity chain
    for (int t = 0; t < 100 && ok; ++t) {
        PointCloud cloud = random_cloud(50, 3, rng);
        const double a = unif(rng), r = unif(rng), b = unif(rng);
        auto inner = inner_vertex_set(cloud, cloud.point(0), a, r);
        auto outer = outer_vertex_set(cloud, cloud.point(0), a, r, b);
        auto grown = inner_vertex_set(cloud, cloud.point(0), a + 0.1, r + 0.1);
        if (!std::includes(inner.begin(), inner.end(), outer.begin(), outer.end()) ||
            !std::includes(grown.begin(), grown.end(), inner.begin(), inner.end())) {
            ok = false;
            failed = "monotonicity";
        }
    }

    // Rips face closure + clique oracle
    for (int t = 0; t < 100 && ok; ++t) {
        PointCloud cloud = random_cloud(10, 2, rng);
        std::vector<Index> verts(10);
        for (int i = 0; i < 10; ++i) verts[i] = i;
        const double th = unif(rng) * 2;
        auto cx = build_rips(cloud, verts, th, 3);
        auto ref = enumerate_cliques_bruteforce(cloud, verts, th, 3);
        std::sort(ref.begin(), ref.end(), simplex_less);
        if (cx.simplices != ref) {
            ok = false;
            failed = "clique oracle";
        }
        for (const auto& sx : cx.simplices) {
            if (sx.size() < 2) continue;
            for (std::size_t dropi = 0; dropi < sx.size(); ++dropi) {
                Simplex face;
                for (std::size_t i = 0; i < sx.size(); ++i)
                    if (i != dropi) face.push_back(sx[i]);
                if (!cx.contains(face)) {
                    ok = false;
                    failed = "face closure";
                }
            }
        }
    }

    // boundary-of-boundary, filtration validity, reorder invariance
    for (int t = 0; t < 100 && ok; ++t) {
        PointCloud cloud = random_cloud(6 + rng() % 7, 2, rng);
        ParamSchedule s = random_manual(rng, 2);
        auto pair = build_local_pair(cloud, cloud.point(0), s);

        // reduction-input validity: every facet of a quotient-suffix simplex
        // is dropped or appears earlier
        for (std::size_t i = pair.quotient_begin(); i < pair.filtration.size(); ++i) {
            const auto& sx = pair.filtration[i].vertices;
            if (sx.size() < 2) continue;
            for (std::size_t dropi = 0; dropi < sx.size(); ++dropi) {
                Simplex face;
                for (std::size_t k = 0; k < sx.size(); ++k)
                    if (k != dropi) face.push_back(sx[k]);
                bool found = false;
                for (std::size_t j = 0; j < i; ++j)
                    if (pair.filtration[j].vertices == face) found = true;
                if (!found) {
                    ok = false;
                    failed = "filtration validity";
                }
            }
        }

        // d(d(s)) = 0 on a full (nothing dropped) boundary matrix
        {
            std::vector<Index> verts(cloud.size());
            for (std::size_t i = 0; i < cloud.size(); ++i) verts[i] = static_cast<Index>(i);
            std::uniform_real_distribution<double> th(0.2, 0.9);
            auto cx = build_rips(cloud, verts, th(rng), 3);
            RipsComplex empty;
            auto full = make_local_pair(cx, empty, cx, empty);
            auto fmat = assemble_boundary(full);
            for (std::size_t j = 0; j < fmat.size(); ++j) {
                std::vector<int> dd;
                for (int row : fmat.columns[j])
                    for (int rr : fmat.columns[row]) {
                        auto it = std::find(dd.begin(), dd.end(), rr);
                        if (it != dd.end())
                            dd.erase(it);
                        else
                            dd.push_back(rr);
                    }
                if (!dd.empty()) {
                    ok = false;
                    failed = "dd=0";
                }
            }
        }

        auto mat = assemble_boundary(pair);
        auto red = reduce(mat);
        auto base = image_rank(mat, red, 2);
        auto shuffled = pair;
        auto& f = shuffled.filtration;
        std::size_t i = 0;
        while (i < f.size()) {
            std::size_t j = i;
            while (j < f.size() && f[j].region == f[i].region && f[j].dim() == f[i].dim())
                ++j;
            std::shuffle(f.begin() + i, f.begin() + j, rng);
            i = j;
        }
        auto mat2 = assemble_boundary(shuffled);
        auto red2 = reduce(mat2);
        if (image_rank(mat2, red2, 2).ranks != base.ranks) {
            ok = false;
            failed = "reorder invariance";
        }
    }

    return {6, "structural property suites", ok, ok ? "all randomized suites pass" : failed};
}

// ---------------------------------------------------------------- criterion 7
Criterion schedule_invariants() {
    std::mt19937_64 rng(707070);
    std::uniform_real_distribution<double> rho_d(0.1, 10.0);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    bool ok = true;
    for (int t = 0; t < 1000 && ok; ++t) {
        const double rho = rho_d(rng);
        const double eps = std::max(frac(rng) * rho / 58.0 * 0.999, 1e-9);
        ParamSchedule s = parameter_schedule(eps, rho, std::nullopt, 2);
        const double t1 = theta1(eps, rho);
        ok = ok && s.alpha >= t1 - 1e-12 && s.alpha <= (rho - 13 * eps) / 22.0 + 1e-12;
        ok = ok && std::abs(s.eta1 - (9 * s.alpha + 4 * eps)) < 1e-12;
        ok = ok && std::abs(s.eta2 - (s.eta1 + 12 * s.alpha + 6 * eps)) < 1e-12;
        ok = ok && std::abs(s.r - (s.eta1 + s.eta2)) < 1e-12;
        ok = ok && eps < s.eta1 && s.eta1 < s.eta2 && s.eta2 < rho;
    }
    int rejected = 0;
    for (int t = 0; t < 1000; ++t) {
        const double rho = rho_d(rng);
        const double eps = (1.0 + frac(rng) * 4.0) * rho / 58.0;
        try {
            parameter_schedule(eps, rho);
        } catch (const std::invalid_argument&) {
            ++rejected;
        }
    }
    std::ostringstream os;
    os << "1000 admissible ok, " << rejected << "/1000 coarse rejected";
    return {7, "parameter schedule invariants", ok && rejected == 1000, os.str()};
}

// ---------------------------------------------------------------- criterion 8
Criterion determinism() {
    const std::string tmp = "acceptance_circle.csv";
    save_point_cloud(circle_cloud(60), tmp);
    const std::string cli = LHDIM_CLI_PATH;
    const std::string base = cli +
        " estimate " + tmp +
        " --alpha 0.15 --eta1 1.0 --eta2 1.3 --r 1.5 --kmax 1 --seed 11 --truth 1 --out ";
    std::string out1 = "acceptance_run1.json", out2 = "acceptance_run2.json";
    const int rc1 = std::system((base + out1).c_str());
    const int rc2 = std::system((base + out2).c_str());
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const std::string a = slurp(out1), b = slurp(out2);
    const bool pass = rc1 == 0 && rc2 == 0 && !a.empty() && a == b;
    std::ostringstream os;
    os << "two runs, " << a.size() << " bytes, " << (a == b ? "identical" : "DIFFER");
    return {8, "determinism", pass, os.str()};
}

}  // namespace

int main() {
    std::vector<Criterion> results;
    results.push_back(oracle_equivalence());
    results.push_back(relative_homology());
    results.push_back(circle_golden());
    results.push_back(sphere_caps());
    results.push_back(shift_corpus());
    results.push_back(property_suites());
    results.push_back(schedule_invariants());
    results.push_back(determinism());

    bool all = true;
    for (const auto& c : results) {
        std::printf("criterion %d (%s): %s — %s\n", c.id, c.name.c_str(),
                    c.pass ? "pass" : "FAIL", c.detail.c_str());
        all = all && c.pass;
    }
    return all ? 0 : 1;
}
