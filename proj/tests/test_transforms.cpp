#include <cmath>
#include <set>

#include "doctest.h"
#include "wspec/enumeration.hpp"
#include "wspec/graph.hpp"
#include "wspec/prng.hpp"
#include "wspec/scan.hpp"
#include "wspec/spectral.hpp"
#include "wspec/transforms.hpp"
#include "wspec/weights.hpp"

using namespace wspec;

namespace {

double rho_of(const Graph& g, const WeightFunction& f) {
    return spectral_radius(build_weighted_adjacency(g, f));
}

std::vector<WeightFunction> restricted_catalog() {
    std::vector<WeightFunction> out;
    for (auto& f : catalog())
        if (f.restricted) out.push_back(f);
    return out;
}

}  // namespace

TEST_SUITE("transforms") {

TEST_CASE("kelmans on a path re-centers into a star") {
    Graph p4 = path(4);
    Graph moved = kelmans(p4, 1, 2);
    CHECK(tree_canonical_form(moved) == tree_canonical_form(star(4)));
    CHECK(moved.degree(2) == 3);
}

TEST_CASE("kelmans context sets") {
    auto ctx = kelmans_context(path(5), 0, 4);
    CHECK(ctx.n1 == std::vector<int>{1});
    CHECK(ctx.n2 == std::vector<int>{3});
    CHECK(ctx.n3.empty());
    CHECK_FALSE(is_kelmans_trivial(path(5), 0, 4));
    CHECK_THROWS_AS(kelmans(path(5), 2, 2), GraphError);
}

TEST_CASE("context sets are disjoint and exclude the pair") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng.next_below(8));
        Graph g = random_connected_graph(n, rng);
        int v1 = static_cast<int>(rng.next_below(n));
        int v2 = static_cast<int>(rng.next_below(n - 1));
        if (v2 >= v1) ++v2;
        auto ctx = kelmans_context(g, v1, v2);
        std::set<int> all;
        for (const auto* s : {&ctx.n1, &ctx.n2, &ctx.n3})
            for (int w : *s) {
                CHECK(w != v1);
                CHECK(w != v2);
                CHECK(all.insert(w).second);
            }
    }
}

TEST_CASE("empty N1 leaves the graph unchanged") {
    Graph s5 = star(5);
    // leaf -> center: the leaf has no private neighbors
    CHECK(kelmans(s5, 1, 0) == s5);
    CHECK(is_kelmans_trivial(s5, 1, 0));
}

TEST_CASE("star re-centering is trivial and isomorphic") {
    Graph s6 = star(6);
    CHECK(is_kelmans_trivial(s6, 0, 3));  // N2 empty
    Graph moved = kelmans(s6, 0, 3);
    CHECK(tree_canonical_form(moved) == tree_canonical_form(s6));
    CHECK(moved.degree(3) == 5);
}

TEST_CASE("kelmans can disconnect; counts are conserved") {
    Graph p4 = path(4);
    Graph moved = kelmans(p4, 0, 3);
    CHECK(moved.vertex_count() == 4);
    CHECK(moved.edge_count() == 3);
    CHECK_FALSE(moved.is_connected());
    CHECK(moved.degree(0) == 0);
}

TEST_CASE("kelmans degree ledger") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng.next_below(8));
        Graph g = random_connected_graph(n, rng);
        int v1 = static_cast<int>(rng.next_below(n));
        int v2 = static_cast<int>(rng.next_below(n - 1));
        if (v2 >= v1) ++v2;
        auto ctx = kelmans_context(g, v1, v2);
        Graph moved = kelmans(g, v1, v2);
        CHECK(moved.vertex_count() == g.vertex_count());
        CHECK(moved.edge_count() == g.edge_count());
        CHECK(moved.degree(v1) == g.degree(v1) - ctx.n1_size());
        CHECK(moved.degree(v2) == g.degree(v2) + ctx.n1_size());
        for (int v = 0; v < n; ++v)
            if (v != v1 && v != v2) CHECK(moved.degree(v) == g.degree(v));
    }
}

TEST_CASE("kelmans strictly raises rho on nontrivial pairs") {
    // Lemma 3.1 at sampling scale, all six restricted weights
    for (const auto& f : restricted_catalog()) {
        auto trials = kelmans_trials(f, 9, 200, 0xbeef, 1);
        for (const auto& t : trials) {
            if (t.trivial)
                CHECK(std::abs(t.rho_after - t.rho_before) <= 1e-10);
            else
                CHECK(t.rho_after > t.rho_before + 1e-10);
        }
    }
}

TEST_CASE("both orientations of kelmans give isomorphic trees") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 40; ++trial) {
        Graph t = random_tree(8, rng);
        int v1 = static_cast<int>(rng.next_below(8));
        int v2 = static_cast<int>(rng.next_below(7));
        if (v2 >= v1) ++v2;
        Graph a = kelmans(t, v1, v2);
        Graph b = kelmans(t, v2, v1);
        if (a.is_connected() && b.is_connected()) {
            REQUIRE(a.is_tree());
            REQUIRE(b.is_tree());
            CHECK(tree_canonical_form(a) == tree_canonical_form(b));
        }
    }
}

TEST_CASE("star_collapse examples") {
    // broom: edge 3-0 is H, the path 0-1-2 hangs at u=0
    Graph broom(4, {{0, 3}, {0, 1}, {1, 2}});
    Graph collapsed = star_collapse(broom, 0);
    CHECK(tree_canonical_form(collapsed) == tree_canonical_form(star(4)));
    CHECK(collapsed.degree(0) == 3);

    CHECK(tree_canonical_form(star_collapse(spider_t1(), 0)) ==
          tree_canonical_form(star(7)));

    CHECK_THROWS_AS(star_collapse(star(5), 0), AlreadyStarError);
    // bowtie: both sides of u carry a cycle, no pendant tree anywhere
    Graph bowtie(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CHECK_THROWS_AS(star_collapse(bowtie, 0), NoTreeSideError);
}

TEST_CASE("star_collapse raises rho on random brooms and spiders") {
    SplitMix64 rng(41);
    for (const auto& f : {sombor(), first_zagreb()}) {
        for (int trial = 0; trial < 20; ++trial) {
            // caterpillar with a long first leg hanging at the spine end
            int spine = 3 + static_cast<int>(rng.next_below(3));
            std::vector<int> leaves(spine);
            for (int& c : leaves) c = static_cast<int>(rng.next_below(3));
            Graph g = caterpillar(spine, leaves);
            Graph collapsed = star_collapse(g, 0);
            REQUIRE(collapsed.is_tree());
            if (tree_canonical_form(collapsed) != tree_canonical_form(g))
                CHECK(rho_of(collapsed, f) > rho_of(g, f) + 1e-10);
            else
                CHECK(rho_of(collapsed, f) ==
                      doctest::Approx(rho_of(g, f)).epsilon(1e-10));
        }
    }
}

TEST_CASE("move_pendant walks the double star chain") {
    Graph s78 = double_star(7, 15);
    // centers are 0 (degree 7) and 1 (degree 8)
    Graph moved = move_pendant(s78, 0, 1);
    CHECK(tree_canonical_form(moved) == tree_canonical_form(double_star(6, 15)));

    Graph s22 = double_star(2, 4);
    Graph collapsed = move_pendant(s22, 0, 1);
    CHECK(tree_canonical_form(collapsed) == tree_canonical_form(star(4)));

    // balanced F with n1 = n2 = 3, n3 = 0: S_{4,4} -> S_{3,5}
    Graph s44 = double_star(4, 8);
    CHECK(tree_canonical_form(move_pendant(s44, 0, 1)) ==
          tree_canonical_form(double_star(3, 8)));
}

TEST_CASE("move_pendant structural errors") {
    CHECK_THROWS_AS(move_pendant(path(5), 0, 2), PendantMoveError);   // not an edge
    CHECK_THROWS_AS(move_pendant(path(5), 1, 2), PendantMoveError);   // non-pendant private nbr
    CHECK_THROWS_AS(move_pendant(star(5), 1, 0), PendantMoveError);   // n1 = 0
    CHECK_THROWS_AS(move_pendant(double_star(5, 8), 1, 0), PendantMoveError);  // n1 > n2
}

TEST_CASE("move_pendant strictly raises rho for restricted weights") {
    // F-configurations with n1+n2+n3 <= 10; H empty or one pendant per common
    // neighbor. v1 = 0 and v2 = 1; common neighbors follow, then pendants.
    for (const auto& f : restricted_catalog()) {
        for (int n3 = 0; n3 <= 3; ++n3) {
            for (int n1 = 1; n1 + n1 + n3 <= 10; ++n1) {
                for (int n2 = n1; n1 + n2 + n3 <= 10; ++n2) {
                    for (int with_h = 0; with_h <= (n3 > 0 ? 1 : 0); ++with_h) {
                        std::vector<std::pair<int, int>> edges{{0, 1}};
                        int next = 2;
                        std::vector<int> common;
                        for (int i = 0; i < n3; ++i) {
                            edges.emplace_back(0, next);
                            edges.emplace_back(1, next);
                            common.push_back(next++);
                        }
                        for (int i = 0; i < n1; ++i) edges.emplace_back(0, next++);
                        for (int i = 0; i < n2; ++i) edges.emplace_back(1, next++);
                        if (with_h)
                            for (int z : common) edges.emplace_back(z, next++);
                        Graph g(next, edges);
                        REQUIRE(g.is_connected());
                        Graph moved = move_pendant(g, 0, 1);
                        CHECK(moved.is_connected());
                        CHECK(moved.degree(0) == n1 + n3);
                        CHECK(moved.degree(1) == n2 + n3 + 2);
                        CHECK(rho_of(moved, f) > rho_of(g, f) + 1e-10);
                    }
                }
            }
        }
    }
}

TEST_CASE("double star chain is strictly increasing for restricted weights") {
    // Corollary 3.2 via the closed forms
    for (const auto& f : restricted_catalog()) {
        for (int n = 4; n <= 20; ++n) {
            double prev = 0.0;
            for (int d = n / 2; d >= 2; --d) {
                double rho = double_star_radius_closed_form(d, n, f);
                if (d < n / 2) CHECK(rho > prev + 1e-10);
                prev = rho;
            }
            CHECK(star_radius_closed_form(n, f) > prev + 1e-10);
        }
    }
}

}  // TEST_SUITE
