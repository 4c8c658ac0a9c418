#pragma once

#include "abcmin/tree.hpp"

namespace abcmin {

// Result of a local rewrite: the rewritten tree and the closed-form change
// delta = abc(before) - abc(after), computed from the formula rather than by
// re-summing, so tests can compare the two routes.
struct TransformResult {
    Tree tree;
    double delta = 0;
};

// Swaps the subtrees hanging below edges u-v and u2-v2 (the components of
// v and v2 after removing those edges): v is reattached under u2 and v2
// under u. All degrees are preserved, so
//   delta = f(d_u, d_v) + f(d_u2, d_v2) - f(d_u, d_v2) - f(d_u2, d_v).
// Throws DomainError if either pair is not an edge, and
// OverlappingSubtreesError when one subtree contains the other.
TransformResult exchange_subtrees(const Tree& t, int u, int v, int u2, int v2);

// Contracts the edge x-y where both endpoints classify as Root, merging them
// into one vertex of degree d_x + d_y - 2. With x_i, y_j the other neighbors
// and w the merged vertex:
//   delta = f(d_x, d_y) + sum_i (f(d_x, d_xi) - f(d_w, d_xi))
//                       + sum_j (f(d_y, d_yj) - f(d_w, d_yj)).
// Throws NotBothRootsError unless x and y are adjacent Roots.
TransformResult contract_root_edge(const Tree& t, int x, int y);

// Delta of moving one leaf from an S_k branch onto a sibling S_l branch of
// the same hub of degree d (valid for k >= l + 2):
//   f(d, k+1) + f(d, l+1) - f(d, k) - f(d, l+2)
//     + k f(k+1, 1) + l f(l+1, 1) - (k-1) f(k, 1) - (l+1) f(l+2, 1).
double move_leaf_delta(long d, long k, long l);

// Applies the move to the tree: from_star and to_star must be star vertices
// attached to the same hub (BranchesNotSiblingsError otherwise) with branch
// orders k >= l + 2 (OrderGapTooSmallError otherwise).
TransformResult move_leaf_between_branches(const Tree& t, int from_star, int to_star);

}  // namespace abcmin
