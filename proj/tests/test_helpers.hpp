#pragma once

#include <random>
#include <utility>
#include <vector>

#include "abcmin/tree.hpp"

namespace testutil {

inline abcmin::Tree star(int k) {
    std::vector<std::pair<int, int>> e;
    e.reserve(k);
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return abcmin::Tree::from_edges(k + 1, e);
}

inline abcmin::Tree path(int n) {
    std::vector<std::pair<int, int>> e;
    e.reserve(n - 1);
    for (int i = 1; i < n; ++i) e.emplace_back(i - 1, i);
    return abcmin::Tree::from_edges(n, e);
}

// Uniform random attachment tree on n vertices.
inline abcmin::Tree random_tree(int n, std::mt19937& rng) {
    std::vector<std::pair<int, int>> e;
    e.reserve(n - 1);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        e.emplace_back(pick(rng), v);
    }
    return abcmin::Tree::from_edges(n, e);
}

// Labeled tree on m >= 2 vertices from a sequence over [0, m); the sequence
// is empty for m = 2.
inline abcmin::Tree tree_from_sequence(const std::vector<int>& code, int m) {
    std::vector<int> deg(m, 1);
    for (int v : code) deg[v]++;
    std::vector<bool> used(m, false);
    std::vector<std::pair<int, int>> edges;
    for (int c : code) {
        for (int i = 0; i < m; ++i) {
            if (deg[i] == 1 && !used[i]) {
                used[i] = true;
                deg[c]--;
                edges.emplace_back(i, c);
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int i = 0; i < m; ++i)
        if (!used[i] && deg[i] == 1) (a < 0 ? a : b) = i;
    edges.emplace_back(a, b);
    return abcmin::Tree::from_edges(m, edges);
}

}  // namespace testutil
