#include "abcmin/tree.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "numeric.hpp"

namespace abcmin {

namespace {

// Union-find over 0..n-1, path halving.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) {
        while (p[x] != x) {
            p[x] = p[p[x]];
            x = p[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

}  // namespace

Tree Tree::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    Tree t;
    t.n_ = n;
    t.adj_.assign(std::max(n, 0), {});

    Dsu dsu(std::max(n, 0));
    std::vector<std::vector<int>> seen(std::max(n, 0));
    for (size_t i = 0; i < edges.size(); ++i) {
        int line = static_cast<int>(i) + 1;
        auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(ParseError::Kind::BadToken, line, "vertex id out of range");
        if (u == v)
            throw ParseError(ParseError::Kind::CycleDetected, line, "self loop");
        int a = std::min(u, v), b = std::max(u, v);
        auto& row = seen[a];
        if (std::find(row.begin(), row.end(), b) != row.end())
            throw ParseError(ParseError::Kind::DuplicateEdge, line, "duplicate edge");
        row.push_back(b);
        if (!dsu.unite(u, v))
            throw ParseError(ParseError::Kind::CycleDetected, line, "edge closes a cycle");
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }

    if (n > 0) {
        int root = dsu.find(0);
        for (size_t i = 0; i < edges.size(); ++i) {
            if (dsu.find(edges[i].first) != root)
                throw ParseError(ParseError::Kind::Disconnected,
                                 static_cast<int>(i) + 1, "graph is disconnected");
        }
        for (int v = 0; v < n; ++v) {
            if (dsu.find(v) != root)
                throw ParseError(ParseError::Kind::Disconnected, 0,
                                 "graph is disconnected");
        }
    }

    t.edges_ = std::move(edges);
    return t;
}

int Tree::leaf_count() const {
    int c = 0;
    for (int v = 0; v < n_; ++v)
        if (degree(v) == 1) ++c;
    return c;
}

namespace {

const char* parse_reason(ParseError::Kind k) {
    switch (k) {
        case ParseError::Kind::BadToken: return "expected two integer vertex ids";
        case ParseError::Kind::DuplicateEdge: return "duplicate edge";
        case ParseError::Kind::CycleDetected: return "edge closes a cycle";
        case ParseError::Kind::Disconnected: return "edges do not connect all vertices";
    }
    return "invalid input";
}

[[noreturn]] void fail_line(ParseError::Kind kind, int file_line) {
    std::ostringstream msg;
    msg << "line " << file_line << ": " << parse_reason(kind);
    throw ParseError(kind, file_line, msg.str());
}

}  // namespace

Tree parse_tree(std::string_view text) {
    std::vector<std::pair<long long, long long>> raw;
    std::vector<int> file_line_of;  // per raw edge

    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                     ? text.size() - pos
                                                     : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        size_t first = line.find_first_not_of(" \t");
        if (first == std::string_view::npos || line[first] == '#') continue;

        long long ids[2];
        size_t cur = first;
        for (int field = 0; field < 2; ++field) {
            size_t end = cur;
            while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
            auto [ptr, ec] = std::from_chars(line.data() + cur, line.data() + end,
                                             ids[field]);
            if (ec != std::errc() || ptr != line.data() + end || ids[field] < 0)
                fail_line(ParseError::Kind::BadToken, line_no);
            cur = line.find_first_not_of(" \t", end);
            if (field == 0 && cur == std::string_view::npos)
                fail_line(ParseError::Kind::BadToken, line_no);
        }
        if (cur != std::string_view::npos)
            fail_line(ParseError::Kind::BadToken, line_no);

        raw.emplace_back(ids[0], ids[1]);
        file_line_of.push_back(line_no);
    }

    std::map<long long, int> id_map;
    for (auto& [u, v] : raw) {
        id_map.emplace(u, 0);
        id_map.emplace(v, 0);
    }
    int next = 0;
    for (auto& [id, slot] : id_map) slot = next++;

    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (auto& [u, v] : raw) edges.emplace_back(id_map[u], id_map[v]);

    try {
        return Tree::from_edges(next, std::move(edges));
    } catch (const ParseError& e) {
        int file_line = e.line >= 1 && e.line <= static_cast<int>(file_line_of.size())
                            ? file_line_of[e.line - 1]
                            : e.line;
        fail_line(e.kind, file_line);
    }
}

std::string serialize_tree(const Tree& t, const std::vector<std::string>& header) {
    std::ostringstream out;
    for (const auto& h : header) out << "# " << h << "\n";
    auto edges = t.edges();
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) out << u << " " << v << "\n";
    return out.str();
}

double edge_contribution(long du, long dv) {
    if (du < 1 || dv < 1) throw DomainError("edge endpoint degrees must be >= 1");
    return detail::f_edge<double>(du, dv);
}

double abc_index(const Tree& t) {
    if (t.vertex_count() < 2)
        throw EmptyTreeError("abc index needs at least one edge");
    std::vector<detail::DegreeRun> runs;
    runs.reserve(t.edges().size());
    for (const auto& [u, v] : t.edges())
        runs.push_back({t.degree(u), t.degree(v), 1});
    return detail::abc_from_degree_runs(std::move(runs));
}

std::vector<VertexClass> classify_vertices(const Tree& t) {
    int n = t.vertex_count();
    std::vector<VertexClass> out(n);
    for (int v = 0; v < n; ++v) {
        int deg = t.degree(v);
        if (deg <= 1) {
            out[v] = {VertexKind::Leaf, 0};
            continue;
        }
        int leaf_nbrs = 0;
        for (int w : t.neighbors(v))
            if (t.is_leaf(w)) ++leaf_nbrs;
        int other = deg - leaf_nbrs;
        if (leaf_nbrs == 0)
            out[v] = {VertexKind::Root, 0};
        else if (other <= 1)
            out[v] = {VertexKind::Star, leaf_nbrs};
        else
            out[v] = {VertexKind::Mixed, 0};
    }
    return out;
}

namespace {

std::vector<int> bfs_order(const Tree& t, int root, std::vector<int>& parent) {
    int n = t.vertex_count();
    parent.assign(n, -1);
    std::vector<int> order;
    order.reserve(n);
    order.push_back(root);
    parent[root] = root;
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : t.neighbors(v)) {
            if (parent[w] == -1) {
                parent[w] = v;
                order.push_back(w);
            }
        }
    }
    parent[root] = -1;
    return order;
}

std::string rooted_code(const Tree& t, int root) {
    std::vector<int> parent;
    std::vector<int> order = bfs_order(t, root, parent);
    int n = t.vertex_count();
    std::vector<std::string> code(n);
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        std::vector<std::string> kids;
        for (int w : t.neighbors(v))
            if (w != parent[v]) kids.push_back(std::move(code[w]));
        std::sort(kids.begin(), kids.end());
        std::string& c = code[v];
        c = "(";
        for (const auto& k : kids) c += k;
        c += ")";
    }
    return code[root];
}

std::vector<int> centroids(const Tree& t) {
    int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> parent;
    std::vector<int> order = bfs_order(t, 0, parent);
    std::vector<int> size(n, 1), heaviest(n, 0);
    for (int i = n - 1; i >= 1; --i) {
        int v = order[i];
        size[parent[v]] += size[v];
        heaviest[parent[v]] = std::max(heaviest[parent[v]], size[v]);
    }
    std::vector<int> best;
    int best_weight = n;
    for (int v = 0; v < n; ++v) {
        int weight = std::max(heaviest[v], n - size[v]);
        if (weight < best_weight) {
            best_weight = weight;
            best.clear();
        }
        if (weight == best_weight) best.push_back(v);
    }
    return best;
}

}  // namespace

std::string canonical_code(const Tree& t) {
    if (t.vertex_count() == 0) return "";
    std::string best;
    for (int c : centroids(t)) {
        std::string code = rooted_code(t, c);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

}  // namespace abcmin
