#include "abcmin/transforms.hpp"

#include <algorithm>

#include "numeric.hpp"

namespace abcmin {

namespace {

using detail::f_edge;

void check_vertex(const Tree& t, int v) {
    if (v < 0 || v >= t.vertex_count()) throw DomainError("vertex id out of range");
}

bool has_edge(const Tree& t, int u, int v) {
    const auto& nb = t.neighbors(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

// Vertices of the component of v in t - uv.
std::vector<char> far_component(const Tree& t, int u, int v) {
    std::vector<char> in(t.vertex_count(), 0);
    std::vector<int> stack{v};
    in[v] = 1;
    while (!stack.empty()) {
        int w = stack.back();
        stack.pop_back();
        for (int x : t.neighbors(w)) {
            if ((w == v && x == u) || in[x]) continue;
            in[x] = 1;
            stack.push_back(x);
        }
    }
    return in;
}

bool same_edge(int a, int b, int c, int d) {
    return (a == c && b == d) || (a == d && b == c);
}

}  // namespace

TransformResult exchange_subtrees(const Tree& t, int u, int v, int u2, int v2) {
    check_vertex(t, u);
    check_vertex(t, v);
    check_vertex(t, u2);
    check_vertex(t, v2);
    if (!has_edge(t, u, v) || !has_edge(t, u2, v2))
        throw DomainError("exchange endpoints must form edges");
    if (same_edge(u, v, u2, v2))
        throw OverlappingSubtreesError("the two exchanged edges must be distinct");

    std::vector<char> below_v = far_component(t, u, v);
    std::vector<char> below_v2 = far_component(t, u2, v2);
    if (below_v[v2] || below_v2[v])
        throw OverlappingSubtreesError("one exchanged subtree contains the other");

    auto edges = t.edges();
    for (auto& [a, b] : edges) {
        if (same_edge(a, b, u, v)) {
            a = u;
            b = v2;
        } else if (same_edge(a, b, u2, v2)) {
            a = u2;
            b = v;
        }
    }

    BigFloat delta = f_edge<BigFloat>(t.degree(u), t.degree(v)) +
                     f_edge<BigFloat>(t.degree(u2), t.degree(v2)) -
                     f_edge<BigFloat>(t.degree(u), t.degree(v2)) -
                     f_edge<BigFloat>(t.degree(u2), t.degree(v));
    return {Tree::from_edges(t.vertex_count(), std::move(edges)), delta.to_double()};
}

TransformResult contract_root_edge(const Tree& t, int x, int y) {
    check_vertex(t, x);
    check_vertex(t, y);
    if (x == y || !has_edge(t, x, y))
        throw NotBothRootsError("x and y must be distinct adjacent vertices");
    auto classes = classify_vertices(t);
    if (classes[x].kind != VertexKind::Root || classes[y].kind != VertexKind::Root)
        throw NotBothRootsError("both contraction endpoints must be roots");

    long dx = t.degree(x), dy = t.degree(y);
    long dw = dx + dy - 2;
    BigFloat delta = f_edge<BigFloat>(dx, dy);
    for (int xi : t.neighbors(x)) {
        if (xi == y) continue;
        delta += f_edge<BigFloat>(dx, t.degree(xi)) - f_edge<BigFloat>(dw, t.degree(xi));
    }
    for (int yj : t.neighbors(y)) {
        if (yj == x) continue;
        delta += f_edge<BigFloat>(dy, t.degree(yj)) - f_edge<BigFloat>(dw, t.degree(yj));
    }

    int keep = std::min(x, y), drop = std::max(x, y);
    auto remap = [&](int v) {
        if (v == drop) v = keep;
        return v > drop ? v - 1 : v;
    };
    std::vector<std::pair<int, int>> edges;
    edges.reserve(t.edges().size() - 1);
    for (const auto& [a, b] : t.edges()) {
        if (same_edge(a, b, x, y)) continue;
        edges.emplace_back(remap(a), remap(b));
    }
    return {Tree::from_edges(t.vertex_count() - 1, std::move(edges)),
            delta.to_double()};
}

double move_leaf_delta(long d, long k, long l) {
    if (d < 2 || l < 1) throw DomainError("need hub degree >= 2 and target order >= 1");
    if (k < l + 2)
        throw OrderGapTooSmallError("moving a leaf needs source order >= target order + 2");
    BigFloat delta = f_edge<BigFloat>(d, k + 1) + f_edge<BigFloat>(d, l + 1) -
                     f_edge<BigFloat>(d, k) - f_edge<BigFloat>(d, l + 2) +
                     BigFloat(k) * f_edge<BigFloat>(k + 1, 1) +
                     BigFloat(l) * f_edge<BigFloat>(l + 1, 1) -
                     BigFloat(k - 1) * f_edge<BigFloat>(k, 1) -
                     BigFloat(l + 1) * f_edge<BigFloat>(l + 2, 1);
    return delta.to_double();
}

namespace {

// The unique non-leaf neighbor of a star vertex, or -1 when all neighbors
// are leaves (a free-standing star center has no hub).
int hub_of(const Tree& t, int star) {
    int hub = -1;
    for (int w : t.neighbors(star)) {
        if (t.is_leaf(w)) continue;
        if (hub != -1) return -1;
        hub = w;
    }
    return hub;
}

}  // namespace

TransformResult move_leaf_between_branches(const Tree& t, int from_star, int to_star) {
    check_vertex(t, from_star);
    check_vertex(t, to_star);
    if (from_star == to_star)
        throw BranchesNotSiblingsError("the two branches must be distinct");
    auto classes = classify_vertices(t);
    if (classes[from_star].kind != VertexKind::Star ||
        classes[to_star].kind != VertexKind::Star)
        throw BranchesNotSiblingsError("both endpoints must be star vertices");
    int hub = hub_of(t, from_star);
    if (hub == -1 || hub != hub_of(t, to_star))
        throw BranchesNotSiblingsError("branches must hang from the same hub");

    long k = classes[from_star].branch_order;
    long l = classes[to_star].branch_order;
    double delta = move_leaf_delta(t.degree(hub), k, l);

    int moved = -1;
    for (int w : t.neighbors(from_star)) {
        if (t.is_leaf(w) && (moved == -1 || w < moved)) moved = w;
    }
    auto edges = t.edges();
    for (auto& [a, b] : edges) {
        if (same_edge(a, b, from_star, moved)) {
            a = to_star;
            b = moved;
            break;
        }
    }
    return {Tree::from_edges(t.vertex_count(), std::move(edges)), delta};
}

}  // namespace abcmin
