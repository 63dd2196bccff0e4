#include "wspec/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace wspec {

Graph::Graph(int n) : n_(n) {
    if (n < 1) throw GraphError("graph needs at least one vertex");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) link(u, v);
    std::sort(edges_.begin(), edges_.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw VertexRangeError("vertex " + std::to_string(v) + " out of range [0," +
                               std::to_string(n_) + ")");
}

void Graph::link(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (has_edge(u, v))
        throw DuplicateEdgeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") already present");
    edges_.emplace_back(u, v);
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

Graph Graph::add_edge(int u, int v) const {
    Graph g = *this;
    g.link(u, v);
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

Graph Graph::remove_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u > v) std::swap(u, v);
    if (!has_edge(u, v))
        throw MissingEdgeError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                               ") not present");
    Graph g = *this;
    g.edges_.erase(std::find(g.edges_.begin(), g.edges_.end(), std::make_pair(u, v)));
    auto drop = [](std::vector<int>& a, int x) {
        a.erase(std::find(a.begin(), a.end(), x));
    };
    drop(g.adj_[u], v);
    drop(g.adj_[v], u);
    return g;
}

bool Graph::is_connected() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

Graph path(int n) {
    Graph g(n);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph star(int n) {
    if (n < 2) throw GraphError("star needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph(n, edges);
}

Graph double_star(int d, int n) {
    if (n < 4 || d < 2 || d > n - 2)
        throw GraphError("double star needs n >= 4 and 2 <= d <= n-2");
    d = std::min(d, n - d);
    // 0 and 1 are the centers of degree d and n-d; leaves follow.
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int i = 0; i < d - 1; ++i) edges.emplace_back(0, 2 + i);
    for (int i = 0; i < n - d - 1; ++i) edges.emplace_back(1, d + 1 + i);
    return Graph(n, edges);
}

Graph caterpillar(int spine_len, const std::vector<int>& leaf_counts) {
    if (spine_len < 1) throw GraphError("caterpillar needs spine_len >= 1");
    if (static_cast<int>(leaf_counts.size()) != spine_len)
        throw GraphError("caterpillar needs one leaf count per spine vertex");
    int n = spine_len;
    for (int c : leaf_counts) {
        if (c < 0) throw GraphError("caterpillar leaf counts must be nonnegative");
        n += c;
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine_len; ++i) edges.emplace_back(i, i + 1);
    int next = spine_len;
    for (int i = 0; i < spine_len; ++i)
        for (int j = 0; j < leaf_counts[i]; ++j) edges.emplace_back(i, next++);
    return Graph(n, edges);
}

Graph spider_t1() {
    return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n) throw GraphError("relabel: permutation size mismatch");
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw GraphError("relabel: not a permutation");
        seen[p] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph(n, edges);
}

namespace {

// Centroid(s): vertices minimizing the largest component of g - v. One or two,
// adjacent when two.
std::vector<int> tree_centroids(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return {0};
    std::vector<int> order, parent(static_cast<std::size_t>(n), -1);
    order.reserve(static_cast<std::size_t>(n));
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : g.neighbors(v))
            if (w != parent[v]) {
                parent[w] = v;
                order.push_back(w);
            }
    }
    std::vector<int> size(static_cast<std::size_t>(n), 1);
    std::vector<int> heaviest(static_cast<std::size_t>(n), 0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        if (parent[v] >= 0) {
            size[parent[v]] += size[v];
            heaviest[parent[v]] = std::max(heaviest[parent[v]], size[v]);
        }
    }
    std::vector<int> cents;
    int best = n;
    for (int v = 0; v < n; ++v) {
        int h = std::max(heaviest[v], n - size[v]);
        if (h < best) {
            best = h;
            cents.clear();
        }
        if (h == best) cents.push_back(v);
    }
    return cents;
}

std::vector<int> encode_rooted(const Graph& g, int v, int parent) {
    std::vector<std::vector<int>> kids;
    for (int w : g.neighbors(v))
        if (w != parent) kids.push_back(encode_rooted(g, w, v));
    std::sort(kids.begin(), kids.end(), std::greater<>());
    std::vector<int> out{1};
    for (const auto& kid : kids)
        for (int level : kid) out.push_back(level + 1);
    return out;
}

}  // namespace

std::vector<int> tree_canonical_form(const Graph& g) {
    if (!g.is_tree()) throw NotATreeError("canonical form is defined for trees only");
    std::vector<int> form;
    for (int c : tree_centroids(g)) {
        auto cand = encode_rooted(g, c, -1);
        if (form.empty() || cand < form) form = std::move(cand);
    }
    return form;
}

std::string canonical_to_string(const std::vector<int>& form) {
    std::string s;
    for (std::size_t i = 0; i < form.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(form[i]);
    }
    return s;
}

std::string write_graph_text(const Graph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

Graph read_graph_text(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw GraphError("graph text: missing 'n m' header");
    if (m < 0) throw GraphError("graph text: negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v)) throw GraphError("graph text: truncated edge list");
        if (u >= v) throw GraphError("graph text: edges must satisfy u < v");
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

}  // namespace wspec
