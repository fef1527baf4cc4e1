#include <algorithm>
#include <random>

#include "doctest.h"
#include "lhdim/rips.hpp"
#include "test_util.hpp"

using namespace lhdim;
using testutil::all_indices;
using testutil::random_cloud;

TEST_CASE("unit square corners at threshold 1: edges but no diagonals") {
    PointCloud sq = PointCloud::from_rows({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto cx = build_rips(sq, all_indices(4), 1.0, 2);
    // 4 vertices + 4 side edges, no diagonal (length sqrt(2)), no triangle.
    CHECK(cx.size() == 8);
    CHECK(cx.contains({0, 1}));
    CHECK(cx.contains({0, 2}));
    CHECK(cx.contains({1, 3}));
    CHECK(cx.contains({2, 3}));
    CHECK_FALSE(cx.contains({0, 3}));
    CHECK_FALSE(cx.contains({1, 2}));

    // At threshold sqrt(2) the square fills in completely up to the cap.
    auto full = build_rips(sq, all_indices(4), std::sqrt(2.0) + 1e-12, 3);
    CHECK(full.size() == 4 + 6 + 4 + 1);
    CHECK(full.contains({0, 1, 2, 3}));
}

TEST_CASE("clique expansion matches brute-force enumeration on small clouds") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        PointCloud cloud = random_cloud(10, 3, seed);
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> unif(0.1, 1.2);
        const double t = unif(rng);
        const int cap = static_cast<int>(rng() % 4);
        auto cx = build_rips(cloud, all_indices(10), t, cap);
        auto ref = enumerate_cliques_bruteforce(cloud, all_indices(10), t, cap);
        std::sort(ref.begin(), ref.end(), simplex_less);
        CHECK(cx.simplices == ref);
    }
}

TEST_CASE("Rips complexes are face-closed and sorted") {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        PointCloud cloud = random_cloud(25, 2, seed);
        auto cx = build_rips(cloud, all_indices(25), 0.4, 3);
        CHECK(std::is_sorted(cx.simplices.begin(), cx.simplices.end(), simplex_less));
        for (const auto& s : cx.simplices) {
            CHECK(std::is_sorted(s.begin(), s.end()));
            if (s.size() < 2) continue;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                CHECK(cx.contains(face));
            }
        }
    }
}

TEST_CASE("Rips monotonicity in threshold and dim_cap") {
    PointCloud cloud = random_cloud(30, 2, 3);
    auto small = build_rips(cloud, all_indices(30), 0.25, 2);
    auto large = build_rips(cloud, all_indices(30), 0.45, 2);
    for (const auto& s : small.simplices) CHECK(large.contains(s));

    auto low_cap = build_rips(cloud, all_indices(30), 0.45, 1);
    for (const auto& s : low_cap.simplices) CHECK(large.contains(s));
    for (const auto& s : large.simplices)
        if (s.size() <= 2) CHECK(low_cap.contains(s));
}

TEST_CASE("Rips restricted to a vertex subset") {
    PointCloud cloud = random_cloud(20, 2, 9);
    std::vector<Index> sub = {1, 4, 5, 9, 13, 17};
    auto cx = build_rips(cloud, sub, 0.5, 2);
    CHECK(cx.vertices == sub);
    for (const auto& s : cx.simplices)
        for (Index v : s)
            CHECK(std::binary_search(sub.begin(), sub.end(), v));
}

TEST_CASE("empty vertex set and single point") {
    PointCloud cloud = random_cloud(5, 2, 1);
    auto empty = build_rips(cloud, {}, 0.5, 2);
    CHECK(empty.size() == 0);
    auto one = build_rips(cloud, {2}, 0.5, 2);
    REQUIRE(one.size() == 1);
    CHECK(one.simplices[0] == Simplex{2});
}

TEST_CASE("simplex budget enforcement") {
    PointCloud cloud = random_cloud(40, 2, 2);
    // Threshold large enough that the complex is complete: way over 100 cells.
    CHECK_THROWS_AS(build_rips(cloud, all_indices(40), 10.0, 5, 100), BudgetExceeded);
}
