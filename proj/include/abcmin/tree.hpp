#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abcmin/errors.hpp"

namespace abcmin {

// Unlabeled tree with vertices 0..n-1. Immutable once built.
class Tree {
public:
    // Validates that `edges` over `n` vertices form a tree (n-1 distinct
    // edges, no self loops, connected, acyclic). Throws ParseError with
    // line = 1-based index into `edges` on violation.
    static Tree from_edges(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int leaf_count() const;

    bool is_leaf(int v) const { return degree(v) == 1; }

private:
    Tree() = default;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Parses the text edge-list format: '#' lines are comments, other non-empty
// lines are "u v" with non-negative integer ids separated by spaces. Ids are
// normalized to 0..n-1 in sorted order of the original ids.
Tree parse_tree(std::string_view text);

// Serializes to the same format, one edge per line with endpoints sorted and
// edges in lexicographic order. `header` lines, if any, are emitted first as
// '#' comments.
std::string serialize_tree(const Tree& t, const std::vector<std::string>& header = {});

// Contribution of one edge with endpoint degrees du, dv:
// sqrt((du + dv - 2) / (du * dv)). Throws DomainError unless du, dv >= 1.
double edge_contribution(long du, long dv);

// Sum of edge contributions over the whole tree. The edge terms are
// evaluated and summed in extended precision over a canonically sorted
// multiset of degree pairs and rounded once, so the result is the correctly
// rounded double of the exact value and does not depend on vertex labels.
// Throws EmptyTreeError for trees on fewer than two vertices.
double abc_index(const Tree& t);

enum class VertexKind { Leaf, Root, Star, Mixed };

struct VertexClass {
    VertexKind kind = VertexKind::Leaf;
    // For Star: number of adjacent leaves (the branch order). 0 otherwise.
    int branch_order = 0;
};

// Classifies every vertex: Leaf (degree 1), Root (degree > 1, no leaf
// neighbor), Star (degree d > 1 with >= d-1 leaf neighbors), Mixed (>= 1
// leaf neighbor and >= 2 non-leaf neighbors). The four classes partition the
// vertices of any tree on >= 2 vertices.
std::vector<VertexClass> classify_vertices(const Tree& t);

// Canonical form: rooted code at the centroid (the code-smaller one if the
// tree has two centroids). Equal codes <=> isomorphic trees.
std::string canonical_code(const Tree& t);

}  // namespace abcmin
