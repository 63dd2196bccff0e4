#include "wspec/transforms.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace wspec {

KelmansContext kelmans_context(const Graph& g, int v1, int v2) {
    if (v1 == v2) throw GraphError("Kelmans operation needs two distinct vertices");
    KelmansContext ctx;
    ctx.v1 = v1;
    ctx.v2 = v2;
    const auto& a1 = g.neighbors(v1);
    const auto& a2 = g.neighbors(v2);
    for (int w : a1) {
        if (w == v2) continue;
        if (std::binary_search(a2.begin(), a2.end(), w))
            ctx.n3.push_back(w);
        else
            ctx.n1.push_back(w);
    }
    for (int w : a2) {
        if (w == v1) continue;
        if (!std::binary_search(a1.begin(), a1.end(), w)) ctx.n2.push_back(w);
    }
    return ctx;
}

Graph kelmans(const Graph& g, int v1, int v2) {
    auto ctx = kelmans_context(g, v1, v2);
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int w : ctx.n1) {
        auto old_edge = std::minmax(v1, w);
        auto new_edge = std::minmax(v2, w);
        auto it = std::find(edges.begin(), edges.end(),
                            std::make_pair(old_edge.first, old_edge.second));
        *it = {new_edge.first, new_edge.second};
    }
    return Graph(g.vertex_count(), edges);
}

bool is_kelmans_trivial(const Graph& g, int v1, int v2) {
    auto ctx = kelmans_context(g, v1, v2);
    return ctx.n1.empty() || ctx.n2.empty();
}

namespace {

// Components of g - u, each as a sorted vertex list.
std::vector<std::vector<int>> components_without(const Graph& g, int u) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[u] = 1;
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// The induced subgraph on comp + {u} is a tree iff it is acyclic, i.e. its
// edge count equals |comp| (it is connected since comp is a component of g-u
// and g is connected at u).
bool hangs_as_tree(const Graph& g, int u, const std::vector<int>& comp) {
    int edges = 0;
    for (int v : comp) {
        for (int w : g.neighbors(v))
            if (w == u || (w > v && std::binary_search(comp.begin(), comp.end(), w)))
                ++edges;
    }
    return edges == static_cast<int>(comp.size());
}

}  // namespace

Graph star_collapse(const Graph& g, int u) {
    std::set<int> tree_side;
    bool any_tree = false, any_nonleaf = false;
    for (const auto& comp : components_without(g, u)) {
        if (!hangs_as_tree(g, u, comp)) continue;
        any_tree = true;
        if (comp.size() > 1) any_nonleaf = true;
        tree_side.insert(comp.begin(), comp.end());
    }
    if (!any_tree)
        throw NoTreeSideError("vertex " + std::to_string(u) + " has no pendant tree side");
    if (!any_nonleaf)
        throw AlreadyStarError("pendant tree at vertex " + std::to_string(u) +
                               " is already a star centered there");

    Graph cur = g;
    for (;;) {
        // farthest non-pendant tree-side vertex; parent = next hop toward u
        std::vector<int> dist(static_cast<std::size_t>(cur.vertex_count()), -1);
        std::vector<int> parent(static_cast<std::size_t>(cur.vertex_count()), -1);
        std::vector<int> queue{u};
        dist[u] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            int v = queue[i];
            for (int w : cur.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
        int w = -1;
        for (int v : tree_side)
            if (cur.degree(v) >= 2 && (w < 0 || dist[v] > dist[w])) w = v;
        if (w < 0) return cur;
        cur = kelmans(cur, w, parent[w]);
    }
}

Graph move_pendant(const Graph& g, int v1, int v2) {
    if (!g.has_edge(v1, v2)) throw PendantMoveError("move_pendant needs v1v2 to be an edge");
    auto ctx = kelmans_context(g, v1, v2);
    for (int w : ctx.n1)
        if (g.degree(w) != 1)
            throw PendantMoveError("private neighbor " + std::to_string(w) +
                                   " of v1 is not pendant");
    for (int w : ctx.n2)
        if (g.degree(w) != 1)
            throw PendantMoveError("private neighbor " + std::to_string(w) +
                                   " of v2 is not pendant");
    if (ctx.n1.empty()) throw PendantMoveError("v1 has no pendant neighbor to move");
    if (ctx.n1.size() > ctx.n2.size())
        throw PendantMoveError("move_pendant needs n1 <= n2");
    int w = ctx.n1.front();
    return g.remove_edge(v1, w).add_edge(v2, w);
}

}  // namespace wspec
