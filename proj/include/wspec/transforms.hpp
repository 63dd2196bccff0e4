#pragma once

#include <vector>

#include "wspec/graph.hpp"

namespace wspec {

struct NoTreeSideError : GraphError {
    using GraphError::GraphError;
};
struct AlreadyStarError : GraphError {
    using GraphError::GraphError;
};
struct PendantMoveError : GraphError {
    using GraphError::GraphError;
};

// Neighborhood split around an ordered vertex pair:
//   n1 = N(v1) - N[v2]   private neighbors of v1
//   n2 = N(v2) - N[v1]   private neighbors of v2
//   n3 = N(v1) ^ N(v2)   common neighbors
// The three sets are pairwise disjoint and contain neither v1 nor v2.
struct KelmansContext {
    int v1 = 0, v2 = 0;
    std::vector<int> n1, n2, n3;  // sorted
    int n1_size() const { return static_cast<int>(n1.size()); }
};

KelmansContext kelmans_context(const Graph& g, int v1, int v2);

// Kelmans operation: every edge v1-w with w in n1 becomes v2-w. Preserves
// vertex and edge counts; the result can be disconnected (v1 may end up
// isolated), which callers detect via is_connected.
Graph kelmans(const Graph& g, int v1, int v2);

// The exact isomorphism criterion for the operation: output is isomorphic to
// the input iff n1 or n2 is empty. No general isomorphism test involved.
bool is_kelmans_trivial(const Graph& g, int v1, int v2);

// Collapses the pendant tree hanging at u (the union of all acyclic
// components of g-u, each a tree together with u) into pendant edges at u,
// as a sequence of Kelmans operations walking the farthest non-pendant
// vertex toward u. Throws NoTreeSideError if no component of g-u is a tree,
// AlreadyStarError if the hanging tree is already a star centered at u.
Graph star_collapse(const Graph& g, int u);

// Moves one pendant neighbor from v1 to v2 across the edge v1v2. Requires all
// private neighbors of v1 and v2 pendant and 1 <= n1 <= n2; common neighbors
// may attach to anything. Degrees go (n1+n3+1, n2+n3+1) -> (n1+n3, n2+n3+2).
Graph move_pendant(const Graph& g, int v1, int v2);

}  // namespace wspec
