#include "abcmin/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "abcmin/bigfloat.hpp"
#include "abcmin/errors.hpp"
#include "numeric.hpp"

namespace abcmin {

namespace {

// Labeled tree on m >= 3 vertices from a length m-2 sequence over [0, m).
std::vector<std::pair<int, int>> decode_sequence(const std::vector<int>& code, int m) {
    std::vector<int> deg(m, 1);
    for (int v : code) deg[v]++;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m - 1);
    std::vector<bool> used(m, false);
    for (int c : code) {
        int u = -1;
        for (int i = 0; i < m; ++i)
            if (deg[i] == 1 && !used[i]) { u = i; break; }
        used[u] = true;
        deg[c]--;
        edges.emplace_back(u, c);
    }
    int a = -1, b = -1;
    for (int i = 0; i < m; ++i)
        if (!used[i] && deg[i] == 1) (a < 0 ? a : b) = i;
    edges.emplace_back(a, b);
    return edges;
}

// Internal skeletons on m vertices, one labeled representative per
// isomorphism class.
std::vector<Tree> skeletons(int m) {
    std::vector<Tree> out;
    if (m == 1) {
        out.push_back(Tree::from_edges(1, {}));
        return out;
    }
    if (m == 2) {
        out.push_back(Tree::from_edges(2, {{0, 1}}));
        return out;
    }
    std::map<std::string, Tree> classes;
    std::vector<int> code(m - 2, 0);
    for (;;) {
        Tree t = Tree::from_edges(m, decode_sequence(code, m));
        std::string key = canonical_code(t);
        classes.emplace(std::move(key), std::move(t));
        int i = m - 3;
        while (i >= 0 && code[i] == m - 1) code[i--] = 0;
        if (i < 0) break;
        code[i]++;
    }
    for (auto& [key, t] : classes) out.push_back(std::move(t));
    return out;
}

// All ways to hand `total` leaves to the skeleton vertices with per-vertex
// lower bounds `need`.
void distributions(const std::vector<long>& need, long total, size_t idx,
                   std::vector<long>& x, const std::vector<long>& tail_need,
                   const std::function<void(const std::vector<long>&)>& emit) {
    if (idx + 1 == need.size()) {
        x[idx] = total;
        emit(x);
        return;
    }
    for (long v = need[idx]; v <= total - tail_need[idx + 1]; ++v) {
        x[idx] = v;
        distributions(need, total - v, idx + 1, x, tail_need, emit);
    }
}

}  // namespace

std::vector<Tree> enumerate_leaf_trees(long t, const OracleOptions& opt) {
    if (t < 2) throw DomainError("need at least two leaves");
    if (t - 2 > opt.max_internal)
        throw LimitExceededError("t - 2 exceeds max_internal; raise the internal vertex cap to opt in");

    std::map<std::string, Tree> classes;
    if (t == 2) {
        Tree k2 = Tree::from_edges(2, {{0, 1}});
        classes.emplace(canonical_code(k2), std::move(k2));
    }
    for (int m = 1; m <= t - 2; ++m) {
        for (const Tree& skel : skeletons(m)) {
            std::vector<long> need(m);
            long need_total = 0;
            for (int v = 0; v < m; ++v) {
                need[v] = std::max(0L, 3L - skel.degree(v));
                need_total += need[v];
            }
            if (need_total > t) continue;
            std::vector<long> tail_need(m + 1, 0);
            for (int v = m - 1; v >= 0; --v) tail_need[v] = tail_need[v + 1] + need[v];

            std::vector<long> x(m);
            distributions(need, t, 0, x, tail_need, [&](const std::vector<long>& leaves) {
                std::vector<std::pair<int, int>> edges = skel.edges();
                int next = m;
                for (int v = 0; v < m; ++v)
                    for (long i = 0; i < leaves[v]; ++i) edges.emplace_back(v, next++);
                Tree full = Tree::from_edges(next, edges);
                std::string key = canonical_code(full);
                classes.emplace(std::move(key), std::move(full));
            });
        }
    }
    std::vector<Tree> out;
    out.reserve(classes.size());
    for (auto& [key, tree] : classes) out.push_back(std::move(tree));
    return out;
}

namespace {

BigFloat abc_big(const Tree& t) {
    std::vector<detail::DegreeRun> runs;
    runs.reserve(t.edges().size());
    for (auto [u, v] : t.edges())
        runs.push_back({t.degree(u), t.degree(v), 1});
    return detail::abc_sum_big(std::move(runs));
}

}  // namespace

OracleResult oracle_minimal(long t, const OracleOptions& opt) {
    std::vector<Tree> trees = enumerate_leaf_trees(t, opt);

    OracleResult res;
    res.t = t;
    res.trees_considered = static_cast<long>(trees.size());

    // Preselect in double with a generous window, then settle in extended
    // precision.
    double best = abc_index(trees.front());
    std::vector<double> vals(trees.size());
    for (size_t i = 0; i < trees.size(); ++i) {
        vals[i] = abc_index(trees[i]);
        best = std::min(best, vals[i]);
    }
    std::vector<size_t> near;
    for (size_t i = 0; i < trees.size(); ++i)
        if (vals[i] <= best + 1e-9) near.push_back(i);

    std::vector<BigFloat> exact;
    exact.reserve(near.size());
    for (size_t i : near) exact.push_back(abc_big(trees[i]));
    size_t arg = 0;
    for (size_t j = 1; j < exact.size(); ++j)
        if (exact[j] < exact[arg]) arg = j;

    res.min_abc = exact[arg].to_double();
    for (size_t j = 0; j < exact.size(); ++j) {
        if (!extended_equal(exact[j], exact[arg])) continue;
        res.minimizers.push_back(trees[near[j]]);
        res.minimizer_codes.push_back(canonical_code(trees[near[j]]));
    }
    return res;
}

}  // namespace abcmin
