#include <algorithm>
#include <set>
#include <sstream>

#include "doctest.h"
#include "support/oracles.hpp"
#include "wspec/graph.hpp"
#include "wspec/prng.hpp"

using namespace wspec;

TEST_SUITE("graph") {

TEST_CASE("construction and degrees") {
    Graph g1(1);
    CHECK(g1.vertex_count() == 1);
    CHECK(g1.edge_count() == 0);
    CHECK_THROWS_AS(Graph(0), GraphError);

    Graph g5(5);
    for (int v = 0; v < 5; ++v) CHECK(g5.degree(v) == 0);

    Graph p3 = Graph(3).add_edge(0, 1).add_edge(1, 2);
    CHECK(p3 == path(3));

    CHECK(star(15).degree(0) == 14);
    CHECK(star(15).degree(7) == 1);
    CHECK(path(6).degree(3) == 2);
    CHECK_THROWS_AS(path(4).degree(4), VertexRangeError);
}

TEST_CASE("add_edge error cases are distinct") {
    Graph g(2);
    Graph p2 = g.add_edge(0, 1);
    CHECK(p2.has_edge(0, 1));
    CHECK_THROWS_AS(g.add_edge(0, 0), SelfLoopError);
    CHECK_THROWS_AS(g.add_edge(0, 5), VertexRangeError);
    CHECK_THROWS_AS(p2.add_edge(1, 0), DuplicateEdgeError);
}

TEST_CASE("remove_edge") {
    Graph p2 = path(2);
    Graph bare = p2.remove_edge(0, 1);
    CHECK(bare.edge_count() == 0);
    CHECK(bare.add_edge(0, 1) == p2);
    CHECK_THROWS_AS(path(3).remove_edge(0, 2), MissingEdgeError);
}

TEST_CASE("immutability: edits do not touch the source graph") {
    Graph p4 = path(4);
    Graph q = p4.add_edge(0, 3);
    CHECK(p4.edge_count() == 3);
    CHECK(q.edge_count() == 4);
}

TEST_CASE("is_connected") {
    CHECK(path(10).is_connected());
    CHECK(Graph(1).is_connected());
    Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(two_edges.is_connected());
    // triangle plus isolated vertex, the shape a Kelmans application can leave
    Graph iso(4, {{1, 2}, {2, 3}, {1, 3}});
    CHECK_FALSE(iso.is_connected());
}

TEST_CASE("named constructors") {
    Graph ds = double_star(2, 4);
    CHECK(tree_canonical_form(ds) == tree_canonical_form(path(4)));

    auto degseq = [](const Graph& g) {
        std::vector<int> d;
        for (int v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(v));
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    };
    CHECK(degseq(spider_t1()) == std::vector<int>{3, 2, 2, 2, 1, 1, 1});

    Graph s15 = star(15);
    int leaves = 0;
    for (int v = 0; v < 15; ++v) leaves += s15.degree(v) == 1;
    CHECK(leaves == 14);

    CHECK_THROWS_AS(star(1), GraphError);
    CHECK_THROWS_AS(double_star(1, 5), GraphError);
    CHECK_THROWS_AS(double_star(4, 5), GraphError);
    CHECK_THROWS_AS(caterpillar(2, {1}), GraphError);

    Graph cat = caterpillar(3, {2, 0, 1});
    CHECK(cat.vertex_count() == 6);
    CHECK(cat.is_tree());
}

TEST_CASE("double star degrees") {
    for (int n = 4; n <= 12; ++n) {
        for (int d = 2; d <= n - 2; ++d) {
            Graph g = double_star(d, n);
            int dd = std::min(d, n - d);
            std::vector<int> nonleaf;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) > 1) nonleaf.push_back(v);
            REQUIRE(nonleaf.size() == 2);
            CHECK(g.degree(nonleaf[0]) == dd);
            CHECK(g.degree(nonleaf[1]) == n - dd);
            CHECK(g.has_edge(nonleaf[0], nonleaf[1]));
        }
    }
}

TEST_CASE("degree sum equals twice the edge count") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.next_below(10));
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_double() < 0.4) edges.emplace_back(u, v);
        Graph g(n, edges);
        int sum = 0;
        for (int v = 0; v < n; ++v) sum += g.degree(v);
        CHECK(sum == 2 * g.edge_count());
    }
}

TEST_CASE("tree constructors yield connected trees") {
    for (int n : {1, 2, 3, 7, 20}) {
        Graph p = path(n);
        CHECK(p.is_connected());
        CHECK(p.edge_count() == n - 1);
    }
    for (int n : {2, 5, 16}) CHECK(star(n).is_tree());
    CHECK(spider_t1().is_tree());
}

TEST_CASE("canonical forms separate and identify trees") {
    CHECK(tree_canonical_form(star(5)) != tree_canonical_form(path(5)));
    CHECK(tree_canonical_form(path(4)) == tree_canonical_form(double_star(2, 4)));
    CHECK_THROWS_AS(tree_canonical_form(Graph(3, {{0, 1}})), NotATreeError);

    // brute force over all 6^4 labeled trees on 6 vertices: exactly 6 classes
    auto forms = oracles::free_tree_forms_by_prufer(6);
    CHECK(forms.size() == 6);
}

TEST_CASE("canonical form is invariant under relabeling") {
    SplitMix64 rng(99);
    auto reps = oracles::free_tree_forms_by_prufer(7);
    std::vector<Graph> trees;
    // rebuild one representative per class from random Prüfer draws
    std::set<std::vector<int>> seen;
    while (seen.size() < reps.size()) {
        std::vector<int> seq(5);
        for (int& s : seq) s = static_cast<int>(rng.next_below(7));
        Graph t = oracles::prufer_to_tree(seq, 7);
        if (seen.insert(tree_canonical_form(t)).second) trees.push_back(t);
    }
    for (const Graph& t : trees) {
        auto base = tree_canonical_form(t);
        for (int rep = 0; rep < 5; ++rep) {
            std::vector<int> perm(7);
            for (int i = 0; i < 7; ++i) perm[i] = i;
            for (int i = 6; i > 0; --i)
                std::swap(perm[i], perm[rng.next_below(i + 1)]);
            CHECK(tree_canonical_form(relabel(t, perm)) == base);
        }
    }
}

TEST_CASE("graph text format round trip") {
    Graph g = double_star(3, 7);
    std::string text = write_graph_text(g);
    CHECK(text.substr(0, 4) == "7 6\n");
    std::istringstream in(text);
    CHECK(read_graph_text(in) == g);

    std::istringstream bad("3 1\n1 0\n");
    CHECK_THROWS_AS(read_graph_text(bad), GraphError);  // u < v required
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(read_graph_text(truncated), GraphError);
}

}  // TEST_SUITE
