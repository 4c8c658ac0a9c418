#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abcmin/contrib.hpp"
#include "abcmin/errors.hpp"
#include "abcmin/oracle.hpp"
#include "abcmin/search.hpp"
#include "abcmin/shapes.hpp"
#include "abcmin/transforms.hpp"
#include "abcmin/tree.hpp"
#include "abcmin/verify.hpp"

namespace py = pybind11;
using namespace abcmin;

namespace {

using Edges = std::vector<std::pair<long, long>>;

// Accepts arbitrary integer vertex ids; they are normalized to 0..n-1 in
// sorted order, like the text parser does.
Tree tree_of(const Edges& edges) {
    if (edges.empty()) throw DomainError("edge list is empty");
    std::map<long, int> ids;
    for (const auto& [u, v] : edges) {
        ids.emplace(u, 0);
        ids.emplace(v, 0);
    }
    int next = 0;
    for (auto& [orig, idx] : ids) idx = next++;
    std::vector<std::pair<int, int>> norm;
    norm.reserve(edges.size());
    for (const auto& [u, v] : edges) norm.emplace_back(ids[u], ids[v]);
    return Tree::from_edges(next, std::move(norm));
}

// Strict variant for operations that address vertices by id: ids must
// already be 0..n-1 so the arguments keep their meaning.
Tree tree_exact(const Edges& edges) {
    long n = 0;
    for (const auto& [u, v] : edges) n = std::max({n, u + 1, v + 1});
    std::vector<std::pair<int, int>> cast;
    cast.reserve(edges.size());
    for (const auto& [u, v] : edges)
        cast.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return Tree::from_edges(static_cast<int>(n), std::move(cast));
}

Edges edges_of(const Tree& t) {
    Edges out;
    out.reserve(t.edges().size());
    for (const auto& [u, v] : t.edges()) out.emplace_back(u, v);
    return out;
}

HubDegree hub_degree(const std::optional<long>& d) {
    return d ? HubDegree::finite(*d) : HubDegree::infinite();
}

const char* pattern_name(LargeTPattern p) {
    return p == LargeTPattern::TenEleven ? "TenEleven" : "NineTen";
}

py::dict shape_dict(const CandidateShape& s) {
    py::dict d;
    d["family"] = family_name(s.family);
    d["d_R"] = s.d_R;
    d["d_M"] = s.d_M;
    d["l"] = s.l;
    d["k_R"] = s.k_R;
    d["s_R"] = s.s_R;
    d["k_M"] = s.k_M;
    d["s_M"] = s.s_M;
    d["text"] = shape_to_string(s);
    return d;
}

py::dict record_dict(const ExtremalRecord& rec) {
    py::dict d;
    d["t"] = rec.t;
    d["abc"] = rec.abc;
    d["family"] = family_name(rec.shapes.front().family);
    d["parameters"] = shape_dict(rec.shapes.front());
    d["order"] = rec.order;
    d["unique"] = rec.unique;
    d["cap_hit"] = rec.cap_hit;
    py::list ties;
    for (const CandidateShape& s : rec.shapes) ties.append(shape_dict(s));
    d["ties"] = ties;
    return d;
}

py::dict report_dict(const VerificationReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["range"] = r.range;
    d["checked"] = r.checked;
    d["worst_margin"] = r.worst_margin;
    py::dict wp;
    for (const auto& [k, v] : r.worst_point) wp[py::str(k)] = v;
    d["worst_point"] = wp;
    d["direction"] = r.direction;
    d["passed"] = r.passed;
    py::list subs;
    for (const auto& [name, ok] : r.subchecks) {
        py::dict s;
        s["name"] = name;
        s["passed"] = ok;
        subs.append(s);
    }
    d["subchecks"] = subs;
    return d;
}

py::dict transform_dict(const TransformResult& r) {
    py::dict d;
    d["edges"] = edges_of(r.tree);
    d["delta"] = r.delta;
    return d;
}

SearchCaps caps_of(long k_cap, long d_cap) {
    SearchCaps caps;
    caps.k_cap = k_cap;
    caps.d_cap = d_cap;
    return caps;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "trees minimizing the atom-bond connectivity index: exact "
              "evaluation, shape search, exhaustive oracles, inequality checks";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "abc_index_edges",
        [](const Edges& edges) { return abc_index(tree_of(edges)); },
        py::arg("edges"),
        "abc index of a tree given as (u, v) pairs; vertex ids are arbitrary "
        "integers");
    m.def(
        "abc_index_text",
        [](const std::string& text) { return abc_index(parse_tree(text)); },
        py::arg("text"), "abc index of a tree in edge-list text form");
    m.def("edge_contribution", &edge_contribution, py::arg("du"), py::arg("dv"),
          "contribution of one edge with the given endpoint degrees");

    m.def(
        "parse", [](const std::string& text) { return edges_of(parse_tree(text)); },
        py::arg("text"), "parse edge-list text into normalized (u, v) pairs");
    m.def(
        "serialize",
        [](const Edges& edges, const std::vector<std::string>& header) {
            return serialize_tree(tree_of(edges), header);
        },
        py::arg("edges"), py::arg("header") = std::vector<std::string>{},
        "render edges as sorted edge-list text with optional comment header");
    m.def(
        "canonical_code",
        [](const Edges& edges) { return canonical_code(tree_of(edges)); },
        py::arg("edges"),
        "canonical bracket code; equal codes mean isomorphic trees");
    m.def(
        "classify",
        [](const Edges& edges) {
            Tree t = tree_exact(edges);
            std::vector<py::dict> out;
            for (const VertexClass& c : classify_vertices(t)) {
                py::dict d;
                switch (c.kind) {
                    case VertexKind::Leaf: d["kind"] = "Leaf"; break;
                    case VertexKind::Root: d["kind"] = "Root"; break;
                    case VertexKind::Star: d["kind"] = "Star"; break;
                    case VertexKind::Mixed: d["kind"] = "Mixed"; break;
                }
                d["branch_order"] = c.branch_order;
                out.push_back(d);
            }
            return out;
        },
        py::arg("edges"),
        "per-vertex class (Leaf/Root/Star/Mixed); ids must be 0..n-1");

    m.def(
        "minimal_tree",
        [](long t, long k_cap, long d_cap) {
            return record_dict(minimal_tree(t, caps_of(k_cap, d_cap)));
        },
        py::arg("t"), py::arg("k_cap") = SearchCaps{}.k_cap,
        py::arg("d_cap") = SearchCaps{}.d_cap,
        "minimum abc configuration over all candidate shapes with t leaves");
    m.def(
        "minimal_tree_edges",
        [](long t) {
            return edges_of(build_extremal_tree(minimal_tree(t).shapes.front()));
        },
        py::arg("t"), "edge list of the minimal tree for t leaves");
    m.def(
        "scan",
        [](long t1, long t2, long k_cap, long d_cap, int threads) {
            ScanResult res = scan(t1, t2, caps_of(k_cap, d_cap), threads);
            py::dict d;
            py::list records;
            for (const ExtremalRecord& rec : res.records)
                records.append(record_dict(rec));
            d["records"] = records;
            d["change_points"] = res.change_points;
            d["cap_hit"] = res.cap_hit;
            return d;
        },
        py::arg("t1"), py::arg("t2"), py::arg("k_cap") = SearchCaps{}.k_cap,
        py::arg("d_cap") = SearchCaps{}.d_cap, py::arg("threads") = 0,
        "minimal configurations for every t in [t1, t2]");

    m.def(
        "closed_form_abc",
        [](long t) {
            ClosedForm cf = closed_form_abc(t);
            py::dict d;
            d["abc"] = cf.abc;
            d["pattern"] = pattern_name(cf.pattern);
            return d;
        },
        py::arg("t"),
        "closed-form minimum abc in the validated large-t range");
    m.def("asymptotic_abc", &asymptotic_abc, py::arg("t"),
          "first-order asymptotic value, valid for t >= 1195");
    m.def(
        "large_t_shape",
        [](long t, const std::string& pattern) {
            LargeTPattern p;
            if (pattern == "TenEleven")
                p = LargeTPattern::TenEleven;
            else if (pattern == "NineTen")
                p = LargeTPattern::NineTen;
            else
                throw DomainError("pattern must be 'TenEleven' or 'NineTen'");
            return shape_dict(large_t_shape(t, p));
        },
        py::arg("t"), py::arg("pattern"),
        "the RootOnly shape the named large-t pattern takes at t");

    m.def(
        "oracle_minimal",
        [](long t, int max_internal) {
            OracleOptions opt;
            opt.max_internal = max_internal;
            OracleResult res = oracle_minimal(t, opt);
            py::dict d;
            d["t"] = res.t;
            d["trees_considered"] = res.trees_considered;
            d["min_abc"] = res.min_abc;
            d["minimizer_codes"] = res.minimizer_codes;
            return d;
        },
        py::arg("t"), py::arg("max_internal") = OracleOptions{}.max_internal,
        "exhaustive minimum over all trees with t leaves and no degree-2 "
        "vertex");
    m.def(
        "enumerate_leaf_codes",
        [](long t, int max_internal) {
            OracleOptions opt;
            opt.max_internal = max_internal;
            std::vector<std::string> codes;
            for (const Tree& tr : enumerate_leaf_trees(t, opt))
                codes.push_back(canonical_code(tr));
            return codes;
        },
        py::arg("t"), py::arg("max_internal") = OracleOptions{}.max_internal,
        "canonical codes of all trees with t leaves and no degree-2 vertex");

    m.def(
        "run_verification",
        [](const std::string& name) { return report_dict(run_verification(name)); },
        py::arg("name"), "run one named inequality check");
    m.def(
        "verify_all",
        [] {
            py::list out;
            for (const VerificationReport& r : verify_all())
                out.append(report_dict(r));
            return out;
        },
        "run every inequality check in fixed order");
    m.def(
        "verification_names", [] { return verification_names(); },
        "names accepted by run_verification");

    m.def(
        "table1",
        [] {
            py::list out;
            for (const ContribRow& row : table1()) {
                py::dict d;
                d["k"] = row.k;
                d["c_120"] = row.c_120;
                d["diff_120"] = row.diff_120;
                d["c_inf"] = row.c_inf;
                d["diff_inf"] = row.diff_inf;
                out.append(d);
            }
            return out;
        },
        "per-branch cost rows for k = 5..16 at hub degree 120 and very large "
        "degree");
    m.def(
        "leaf_contribution",
        [](long k, const std::optional<long>& d) {
            return leaf_contribution(k, hub_degree(d));
        },
        py::arg("k"), py::arg("d") = std::nullopt,
        "per-leaf cost c(k, d) of an S_k branch; d=None means the large-degree "
        "limit");
    m.def(
        "delta0",
        [](long k, const std::optional<long>& d) { return delta0(k, hub_degree(d)); },
        py::arg("k"), py::arg("d") = std::nullopt,
        "cost of regrouping k+1 order-k branches into k order-(k+1) branches");
    m.def(
        "f_bounds",
        [](long d, long k) {
            FBounds b = f_bounds_check(d, k);
            return py::make_tuple(b.lower, b.value, b.upper);
        },
        py::arg("d"), py::arg("k"),
        "(lower, value, upper) bracket for the edge contribution f(d, k)");

    m.def(
        "exchange_subtrees",
        [](const Edges& edges, int u, int v, int u2, int v2) {
            return transform_dict(exchange_subtrees(tree_exact(edges), u, v, u2, v2));
        },
        py::arg("edges"), py::arg("u"), py::arg("v"), py::arg("u2"), py::arg("v2"),
        "swap the subtrees hanging below edges u-v and u2-v2");
    m.def(
        "contract_root_edge",
        [](const Edges& edges, int x, int y) {
            return transform_dict(contract_root_edge(tree_exact(edges), x, y));
        },
        py::arg("edges"), py::arg("x"), py::arg("y"),
        "contract an edge between two Root vertices");
    m.def(
        "move_leaf_between_branches",
        [](const Edges& edges, int from_star, int to_star) {
            return transform_dict(
                move_leaf_between_branches(tree_exact(edges), from_star, to_star));
        },
        py::arg("edges"), py::arg("from_star"), py::arg("to_star"),
        "move one leaf from a larger branch onto a smaller sibling branch");
    m.def("move_leaf_delta", &move_leaf_delta, py::arg("d"), py::arg("k"),
          py::arg("l"), "closed-form delta of the leaf move");
}
