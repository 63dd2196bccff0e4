#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wspec {

struct GraphError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SelfLoopError : GraphError {
    using GraphError::GraphError;
};
struct VertexRangeError : GraphError {
    using GraphError::GraphError;
};
struct DuplicateEdgeError : GraphError {
    using GraphError::GraphError;
};
struct MissingEdgeError : GraphError {
    using GraphError::GraphError;
};
struct NotATreeError : GraphError {
    using GraphError::GraphError;
};

// Simple undirected graph on vertices 0..n-1. Immutable: edits return a new
// graph, so a transformation can keep the original around for comparison.
// Edge list (u < v, sorted) and per-vertex sorted neighbor lists always
// describe the same relation.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;

    int degree(int v) const;
    int max_degree() const;
    bool has_edge(int u, int v) const;

    Graph add_edge(int u, int v) const;
    Graph remove_edge(int u, int v) const;

    bool is_connected() const;
    bool is_tree() const { return is_connected() && edge_count() == n_ - 1; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void link(int u, int v);  // construction only
    void check_vertex(int v) const;

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Named trees.
Graph path(int n);
Graph star(int n);
// Double star S_{d,n-d}: centers of degree d and n-d, adjacent, all other
// vertices pendant. Accepts any 2 <= d <= n-2 and canonicalizes d <= n-d.
Graph double_star(int d, int n);
Graph caterpillar(int spine_len, const std::vector<int>& leaf_counts);
// The 7-vertex spider: one degree-3 center, three degree-2 middles, three leaves.
Graph spider_t1();

// Applies perm (old index -> new index); perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Canonical form of a free tree: the level sequence of the tree rooted at its
// centroid (lexicographically smaller of the two rootings when bicentroidal),
// children ordered to make each rooted sequence lexicographically largest.
// Two trees have equal forms iff they are isomorphic.
std::vector<int> tree_canonical_form(const Graph& g);
std::string canonical_to_string(const std::vector<int>& form);

// Fixture text format: first line "n m", then m lines "u v" with u < v.
std::string write_graph_text(const Graph& g);
Graph read_graph_text(std::istream& in);

}  // namespace wspec
