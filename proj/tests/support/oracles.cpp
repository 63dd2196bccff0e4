#include "support/oracles.hpp"

#include <map>
#include <stdexcept>

namespace wspec::oracles {

Graph prufer_to_tree(const std::vector<int>& seq, int n) {
    if (n < 2) return Graph(1);
    if (static_cast<int>(seq.size()) != n - 2)
        throw std::invalid_argument("prufer sequence must have length n-2");
    std::vector<int> deg(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++deg[s];
    std::vector<std::pair<int, int>> edges;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    int leaf = -1, ptr = 0;
    for (int s : seq) {
        if (leaf < 0) {
            while (deg[ptr] != 1 || used[ptr]) ++ptr;
            leaf = ptr;
        }
        edges.emplace_back(std::min(leaf, s), std::max(leaf, s));
        used[leaf] = 1;
        leaf = (--deg[s] == 1 && s < ptr) ? s : -1;
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!used[v] && deg[v] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(std::min(a, b), std::max(a, b));
    return Graph(n, edges);
}

std::set<std::vector<int>> free_tree_forms_by_prufer(int n) {
    std::set<std::vector<int>> forms;
    if (n <= 2) {
        forms.insert(tree_canonical_form(n == 1 ? Graph(1) : path(2)));
        return forms;
    }
    if (n > 8) throw std::invalid_argument("prufer oracle is practical only for n <= 8");
    std::vector<int> seq(static_cast<std::size_t>(n) - 2, 0);
    for (;;) {
        forms.insert(tree_canonical_form(prufer_to_tree(seq, n)));
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return forms;
}

long long count_free_trees_by_prufer(int n) {
    return static_cast<long long>(free_tree_forms_by_prufer(n).size());
}

std::vector<Graph> extend_by_leaf(const std::vector<Graph>& reps) {
    std::map<std::vector<int>, Graph> out;
    for (const Graph& g : reps) {
        const int n = g.vertex_count();
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> edges = g.edges();
            edges.emplace_back(v, n);
            Graph bigger(n + 1, edges);
            out.try_emplace(tree_canonical_form(bigger), bigger);
        }
    }
    std::vector<Graph> result;
    result.reserve(out.size());
    for (auto& [form, g] : out) result.push_back(std::move(g));
    return result;
}

std::vector<Graph> free_tree_reps_by_extension(int n, int base_n) {
    if (n <= base_n) throw std::invalid_argument("extension oracle expects n > base_n");
    std::map<std::vector<int>, Graph> base;
    std::vector<int> seq(static_cast<std::size_t>(base_n) - 2, 0);
    for (;;) {
        Graph t = prufer_to_tree(seq, base_n);
        base.try_emplace(tree_canonical_form(t), t);
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == base_n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    std::vector<Graph> reps;
    reps.reserve(base.size());
    for (auto& [form, g] : base) reps.push_back(std::move(g));
    for (int k = base_n; k < n; ++k) reps = extend_by_leaf(reps);
    return reps;
}

}  // namespace wspec::oracles
