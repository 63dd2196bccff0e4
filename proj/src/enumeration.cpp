#include "wspec/enumeration.hpp"

#include <numeric>
#include <stdexcept>

namespace wspec {

TreeIterator::TreeIterator(int n) : n_(n) {
    if (n < 1 || n > kMaxEnumerationOrder)
        throw std::invalid_argument("free tree enumeration supports 1 <= n <= " +
                                    std::to_string(kMaxEnumerationOrder));
    seq_.resize(static_cast<std::size_t>(n));
    std::iota(seq_.begin(), seq_.end(), 1);  // the path rooted at an end
}

// Beyer-Hedetniemi successor: the level sequences of canonical rooted trees in
// lexicographically decreasing order.
bool TreeIterator::advance() {
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i)
        if (seq_[i] > 2) {
            p = i;
            break;
        }
    if (p < 0) return false;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
        if (seq_[i] == seq_[p] - 1) {
            q = i;
            break;
        }
    for (int i = p; i < n_; ++i) seq_[i] = seq_[i - (p - q)];
    return true;
}

Graph TreeIterator::build() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(n_) - 1);
    std::vector<int> last_at_level(static_cast<std::size_t>(n_) + 2, -1);
    last_at_level[1] = 0;
    for (int i = 1; i < n_; ++i) {
        edges.emplace_back(last_at_level[seq_[i] - 1], i);
        last_at_level[seq_[i]] = i;
    }
    return Graph(n_, edges);
}

std::optional<Graph> TreeIterator::next() {
    while (!done_) {
        if (fresh_)
            fresh_ = false;
        else if (!advance()) {
            done_ = true;
            break;
        }
        Graph t = build();
        if (tree_canonical_form(t) == seq_) return t;
    }
    return std::nullopt;
}

TreeIterator free_trees(int n) { return TreeIterator(n); }

long long count_free_trees(int n) {
    TreeIterator it(n);
    long long count = 0;
    while (it.next()) ++count;
    return count;
}

std::vector<Graph> double_star_chain(int n) {
    if (n < 4) throw std::invalid_argument("double star chain needs n >= 4");
    std::vector<Graph> chain;
    for (int d = n / 2; d >= 2; --d) chain.push_back(double_star(d, n));
    chain.push_back(star(n));
    return chain;
}

std::vector<std::string> double_star_chain_labels(int n) {
    if (n < 4) throw std::invalid_argument("double star chain needs n >= 4");
    std::vector<std::string> labels;
    for (int d = n / 2; d >= 2; --d)
        labels.push_back("S_" + std::to_string(d) + "_" + std::to_string(n - d));
    labels.push_back("S_" + std::to_string(n));
    return labels;
}

}  // namespace wspec
