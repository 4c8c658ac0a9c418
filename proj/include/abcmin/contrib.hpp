#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abcmin/errors.hpp"

namespace abcmin {

// Degree of the hub a branch hangs from: a finite integer >= 2 or the
// limiting "very large" degree.
struct HubDegree {
    static HubDegree infinite() { return HubDegree{}; }
    static HubDegree finite(long d) { return HubDegree{d}; }

    bool is_infinite() const { return !d.has_value(); }
    long value() const { return *d; }

    std::optional<long> d;
};

// Per-leaf contribution c(k, d) of an S_k branch on a hub of degree d:
//   c(k, d)   = f(k+1, 1) + (1/k) f(k+1, d)
//   c(k, inf) = f(k+1, 1) + (1/k) sqrt(1/(k+1))
// where f is edge_contribution. Throws DomainError for k < 1 or finite d < 2.
double leaf_contribution(long k, HubDegree d);

inline double leaf_contribution(long k, long d) {
    return leaf_contribution(k, HubDegree::finite(d));
}

// Cost of regrouping k+1 branches of order k into k branches of order k+1
// on a hub of degree d: delta0(k, d) = k c(k, d) - (k+1) c(k+1, d).
double delta0(long k, HubDegree d);

inline double delta0(long k, long d) { return delta0(k, HubDegree::finite(d)); }

// One row of the reference contribution table: c(k, 120) and c at very
// large hub degree, with differences against the k = 10 row.
struct ContribRow {
    long k = 0;
    double c_120 = 0, diff_120 = 0;
    double c_inf = 0, diff_inf = 0;
};

// The table's "very large degree" column was generated at a finite degree;
// this effective value reproduces every reference cell to within half of
// its printed last digit (the true limit does not).
inline constexpr long kTableLargeDegree = 1200000;

// Rows for k = 5..16. The c_inf column is evaluated at kTableLargeDegree;
// diff columns are against the k = 10 entry of the same column.
std::vector<ContribRow> table1();

// CSV rendering: header "k,c_120,diff_120,c_inf,diff_inf", 8 decimals.
std::string table1_csv();

// Two-sided bracket for f(d, k) together with the value itself.
//   k = 1:   1 - 1/d        <  f(d,1) < 1 - 1/(2d)
//   k >= 3:  sqrt(1/k)(1 + (k-2)/(2d) - (k-2)^2/(8d^2))
//                           <  f(d,k) < sqrt(1/k)(1 + (k-2)/(2d))
// (strict for d >= 2). k = 2 has no bracket: f(d,2) = sqrt(1/2) identically,
// so DomainError is thrown.
struct FBounds {
    double lower = 0, value = 0, upper = 0;
};

FBounds f_bounds_check(long d, long k);

}  // namespace abcmin
