#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wspec/graph.hpp"

namespace wspec {

// Enumeration cap: 123867 trees at n = 18 keeps a full scan under a minute
// with the dense eigensolver.
inline constexpr int kMaxEnumerationOrder = 18;

// Streams every non-isomorphic free tree on n vertices exactly once, in
// constant memory. Rooted trees are generated as canonical level sequences
// (Beyer-Hedetniemi successor rule, lexicographically decreasing); a rooted
// tree is kept iff its sequence is the canonical form of its free tree, i.e.
// the rooting at the centroid. Single-consumer.
class TreeIterator {
public:
    explicit TreeIterator(int n);
    int order() const { return n_; }
    std::optional<Graph> next();

private:
    bool advance();
    Graph build() const;

    int n_;
    std::vector<int> seq_;  // level sequence, seq_[0] == 1
    bool fresh_ = true;
    bool done_ = false;
};

TreeIterator free_trees(int n);
long long count_free_trees(int n);

// [S_{floor(n/2),ceil(n/2)}, ..., S_{2,n-2}, S_n] in the order whose spectral
// radii increase for restricted weights.
std::vector<Graph> double_star_chain(int n);
std::vector<std::string> double_star_chain_labels(int n);

}  // namespace wspec
