#pragma once

#include <string>

#include "abcmin/tree.hpp"

namespace abcmin {

// The five structural families a minimal tree can take. Hubs carry
// S-branches: an S_k branch is a star vertex with k leaves hanging from a
// hub. Within one hub the branch orders take at most two consecutive values
// k and k-1; s counts the branches of the smaller order.
enum class ShapeFamily { Star, DoubleStar, RootOnly, MixedOnly, RootAndMixed };

const char* family_name(ShapeFamily f);

// Parameter block. Unused fields for a family are zero.
//
//   Star          K_{1,k_R}; k_R = 1 denotes the single edge K_2.
//   DoubleStar    two adjacent centers with k_R >= k_M leaves.
//   RootOnly      hub R of degree d_R, all neighbors are branches:
//                 d_R - s_R of order k_R and s_R of order k_R - 1.
//   MixedOnly     hub M of degree d_M with l leaves and d_M - l branches
//                 of orders k_M / k_M - 1 (s_M small ones).
//   RootAndMixed  R adjacent to M; R carries d_R - 1 branches (orders
//                 k_R / k_R - 1), M carries l leaves and d_M - l - 1
//                 branches (orders k_M / k_M - 1).
struct CandidateShape {
    ShapeFamily family = ShapeFamily::Star;
    long d_R = 0, d_M = 0, l = 0;
    long k_R = 0, s_R = 0, k_M = 0, s_M = 0;

    friend bool operator==(const CandidateShape&, const CandidateShape&) = default;
};

// Empty string when the shape satisfies its family's constraint system,
// otherwise a description of the first violated constraint. The
// RootAndMixed system is
//   k_M >= 5, k_R >= k_M, d_R >= d_M >= k_R + 1,
//   1 <= l <= d_M - 2, 0 <= s_R <= d_R - 2, 0 <= s_M <= d_M - l - 2,
// and the other families use the degenerate analogues (each hub keeps at
// least one branch of its larger order).
std::string shape_violation(const CandidateShape& s);

inline bool shape_feasible(const CandidateShape& s) { return shape_violation(s).empty(); }

// Leaf count of the family's tree. Throws InfeasibleShapeError when
// shape_violation is non-empty.
long t_of_shape(const CandidateShape& s);

// Number of vertices of the family's tree.
long order_of_shape(const CandidateShape& s);

// abc index of the shape's tree by closed form, evaluated in extended
// precision and rounded once (bit-identical to abc_index of the built tree).
double shape_abc(const CandidateShape& s);

// Materializes the tree: hubs first, then branch star vertices, then leaves.
// Throws InfeasibleShapeError on constraint violation.
Tree build_extremal_tree(const CandidateShape& s);

// One-line "family k=v ..." rendering used by tree-file headers and logs.
std::string shape_to_string(const CandidateShape& s);

}  // namespace abcmin
