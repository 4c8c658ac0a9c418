// Internal bridge between shapes and the summation kernel: the degree-run
// multiset of a feasible shape's tree, so search can evaluate shapes in
// extended precision without materializing trees.
#pragma once

#include <vector>

#include "abcmin/shapes.hpp"
#include "numeric.hpp"

namespace abcmin::detail {

std::vector<DegreeRun> shape_degree_runs(const CandidateShape& s);

}  // namespace abcmin::detail
