#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "abcmin/errors.hpp"
#include "abcmin/tree.hpp"
#include "doctest.h"
#include "test_helpers.hpp"

using namespace abcmin;
using testutil::path;
using testutil::random_tree;
using testutil::star;
using testutil::tree_from_sequence;

TEST_CASE("abc index of small trees") {
    CHECK(abc_index(Tree::from_edges(2, {{0, 1}})) == 0.0);
    CHECK(abc_index(star(3)) == doctest::Approx(std::sqrt(6.0)).epsilon(1e-15));
    CHECK(abc_index(star(4)) == doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
    CHECK(abc_index(star(5)) == doctest::Approx(std::sqrt(20.0)).epsilon(1e-15));
    CHECK(abc_index(star(10)) == doctest::Approx(std::sqrt(90.0)).epsilon(1e-15));
    // path on 4 vertices: two pendant edges and one middle edge, each sqrt(1/2)
    CHECK(abc_index(path(4)) ==
          doctest::Approx(3 * std::sqrt(0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(abc_index(Tree::from_edges(1, {})), EmptyTreeError);
}

TEST_CASE("abc index ignores labels") {
    std::mt19937 rng(7);
    for (int round = 0; round < 20; ++round) {
        Tree t = random_tree(40, rng);
        std::vector<int> perm(40);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
        Tree relabeled = Tree::from_edges(40, edges);
        CHECK(abc_index(t) == abc_index(relabeled));
        CHECK(canonical_code(t) == canonical_code(relabeled));
    }
}

TEST_CASE("edge contribution") {
    CHECK(edge_contribution(1, 1) == 0.0);
    CHECK(edge_contribution(3, 1) ==
          doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-15));
    CHECK(edge_contribution(2, 7) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
    CHECK_THROWS_AS(edge_contribution(0, 5), DomainError);
    CHECK_THROWS_AS(edge_contribution(5, 0), DomainError);
    CHECK_THROWS_AS(edge_contribution(-2, 3), DomainError);
}

TEST_CASE("from_edges validation") {
    CHECK_THROWS_AS(Tree::from_edges(2, {{0, 0}}), ParseError);
    CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}, {0, 1}}), ParseError);
    CHECK_THROWS_AS(Tree::from_edges(3, {{0, 1}, {1, 2}, {2, 0}}), ParseError);
    CHECK_THROWS_AS(Tree::from_edges(4, {{0, 1}, {2, 3}}), ParseError);
    CHECK_THROWS_AS(Tree::from_edges(2, {{0, 5}}), ParseError);

    try {
        Tree::from_edges(3, {{0, 1}, {0, 1}});
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.kind == ParseError::Kind::DuplicateEdge);
        CHECK(e.line == 2);
    }
}

TEST_CASE("parse_tree normalizes ids and reports lines") {
    Tree t = parse_tree("# a comment\n2 7\n7 4\n\n4 9\n");
    CHECK(t.vertex_count() == 4);
    CHECK(t.edge_count() == 3);
    CHECK(t.leaf_count() == 2);

    SUBCASE("round trip is stable") {
        std::string s = serialize_tree(t);
        Tree again = parse_tree(s);
        CHECK(canonical_code(t) == canonical_code(again));
        CHECK(serialize_tree(again) == s);
    }

    SUBCASE("headers are comments") {
        std::string s = serialize_tree(t, {"first", "second"});
        CHECK(s.substr(0, 8) == "# first\n");
        Tree again = parse_tree(s);
        CHECK(canonical_code(t) == canonical_code(again));
    }

    SUBCASE("bad token carries the file line") {
        try {
            parse_tree("1 2\nx 3\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.kind == ParseError::Kind::BadToken);
            CHECK(e.line == 2);
        }
    }

    SUBCASE("trailing junk is rejected") {
        CHECK_THROWS_AS(parse_tree("1 2 3\n"), ParseError);
    }

    SUBCASE("comments and blanks do not shift error lines") {
        try {
            parse_tree("# intro\n\n0 1\n0 1\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.kind == ParseError::Kind::DuplicateEdge);
            CHECK(e.line == 4);
        }
    }

    SUBCASE("disconnected input names the offending line") {
        try {
            parse_tree("0 1\n2 3\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.kind == ParseError::Kind::Disconnected);
            CHECK(e.line == 2);
        }
    }
}

TEST_CASE("classification partitions the vertices") {
    // Hub 0 joined to three stars (1, 2, 3), each with two leaves.
    std::vector<std::pair<int, int>> edges = {{0, 1}, {0, 2}, {0, 3}};
    int next = 4;
    for (int s = 1; s <= 3; ++s) {
        edges.emplace_back(s, next++);
        edges.emplace_back(s, next++);
    }
    Tree t = Tree::from_edges(next, edges);
    auto cls = classify_vertices(t);
    CHECK(cls[0].kind == VertexKind::Root);
    for (int s = 1; s <= 3; ++s) {
        CHECK(cls[s].kind == VertexKind::Star);
        CHECK(cls[s].branch_order == 2);
    }
    for (int v = 4; v < next; ++v) CHECK(cls[v].kind == VertexKind::Leaf);

    SUBCASE("attaching a leaf to the hub makes it mixed") {
        edges.emplace_back(0, next);
        Tree t2 = Tree::from_edges(next + 1, edges);
        auto cls2 = classify_vertices(t2);
        CHECK(cls2[0].kind == VertexKind::Mixed);
    }
}

TEST_CASE("classification of the two-vertex tree") {
    auto cls = classify_vertices(Tree::from_edges(2, {{0, 1}}));
    CHECK(cls[0].kind == VertexKind::Leaf);
    CHECK(cls[1].kind == VertexKind::Leaf);
}

TEST_CASE("every vertex gets exactly one class") {
    std::mt19937 rng(11);
    for (int round = 0; round < 30; ++round) {
        Tree t = random_tree(60, rng);
        auto cls = classify_vertices(t);
        REQUIRE(cls.size() == 60);
        for (int v = 0; v < 60; ++v) {
            if (t.degree(v) <= 1) {
                CHECK(cls[v].kind == VertexKind::Leaf);
                continue;
            }
            int leaf_nbrs = 0;
            for (int u : t.neighbors(v)) leaf_nbrs += t.is_leaf(u) ? 1 : 0;
            if (leaf_nbrs == 0)
                CHECK(cls[v].kind == VertexKind::Root);
            else if (leaf_nbrs >= t.degree(v) - 1)
                CHECK(cls[v].kind == VertexKind::Star);
            else
                CHECK(cls[v].kind == VertexKind::Mixed);
        }
    }
}

TEST_CASE("canonical codes count unlabeled trees") {
    // 1, 1, 2, 3, 6, 11, 23 unlabeled trees on 2..8 vertices.
    const long expected[] = {1, 1, 2, 3, 6, 11, 23};
    for (int n = 2; n <= 8; ++n) {
        std::set<std::string> codes;
        std::vector<int> code(n - 2, 0);
        for (;;) {
            codes.insert(canonical_code(tree_from_sequence(code, n)));
            int i = n - 3;
            while (i >= 0 && code[i] == n - 1) code[i--] = 0;
            if (i < 0) break;
            code[i]++;
        }
        CHECK(codes.size() == expected[n - 2]);
    }
}

TEST_CASE("canonical code distinguishes same-size non-isomorphic trees") {
    CHECK(canonical_code(star(3)) != canonical_code(path(4)));
    CHECK(canonical_code(Tree::from_edges(2, {{0, 1}})) == "(())");
}
