// Internal numeric kernels shared by the implementation files.
// Templated over the scalar type so every quantity can be evaluated
// both in plain double (fast paths) and in BigFloat (tie-breaking,
// correctly rounded results). Not installed; include only from src/.
#pragma once

#include <cmath>
#include <vector>

#include "abcmin/bigfloat.hpp"

namespace abcmin::detail {

inline double sqrt_of(double x) { return std::sqrt(x); }
inline BigFloat sqrt_of(const BigFloat& x) { return sqrt(x); }

// Weight of an edge whose endpoints have degrees du and dv:
// sqrt((du + dv - 2) / (du * dv)).
template <class T>
T f_edge(long du, long dv) {
    T num(du + dv - 2);
    T den(du * dv);
    return sqrt_of(num / den);
}

// Per-leaf cost of a branch of order k hanging from a hub of degree d:
// the k pendant edges plus the k-th share of the edge up to the hub.
template <class T>
T c_leaf(long k, long d) {
    return f_edge<T>(k + 1, 1) + f_edge<T>(k + 1, d) / T(k);
}

// Limit of c_leaf(k, d) as d grows without bound.
template <class T>
T c_leaf_inf(long k) {
    return f_edge<T>(k + 1, 1) + sqrt_of(T(1) / T(k + 1)) / T(k);
}

// k * c(k, d) - (k + 1) * c(k + 1, d): the change in total cost when one
// branch of order k+1 is split off a hub and replaced by one of order k
// while the hub degree stays fixed.
template <class T>
T delta0_of(long k, long d) {
    return T(k) * c_leaf<T>(k, d) - T(k + 1) * c_leaf<T>(k + 1, d);
}

// A group of `mult` edges that all join a degree-du endpoint to a degree-dv
// endpoint.
struct DegreeRun {
    long du = 1, dv = 1;
    long mult = 1;
};

// Extended-precision sum of mult * f_edge(du, dv). Runs are normalized
// first (endpoints ordered, runs sorted, equal pairs merged), so any two
// descriptions of the same edge multiset are summed identically.
BigFloat abc_sum_big(std::vector<DegreeRun> runs);

// The same sum rounded once to double, hence the correctly rounded double
// of the exact value. Every public abc value funnels through here.
double abc_from_degree_runs(std::vector<DegreeRun> runs);

}  // namespace abcmin::detail
