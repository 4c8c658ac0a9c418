#include "abcmin/contrib.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "numeric.hpp"

namespace abcmin {

namespace {

void check_k(long k) {
    if (k < 1) throw DomainError("branch order must be >= 1");
}

void check_hub(HubDegree d) {
    if (!d.is_infinite() && d.value() < 2)
        throw DomainError("finite hub degree must be >= 2");
}

}  // namespace

double leaf_contribution(long k, HubDegree d) {
    check_k(k);
    check_hub(d);
    if (d.is_infinite()) return detail::c_leaf_inf<double>(k);
    return detail::c_leaf<double>(k, d.value());
}

double delta0(long k, HubDegree d) {
    check_k(k);
    check_hub(d);
    if (d.is_infinite())
        return static_cast<double>(k) * detail::c_leaf_inf<double>(k) -
               static_cast<double>(k + 1) * detail::c_leaf_inf<double>(k + 1);
    return detail::delta0_of<double>(k, d.value());
}

std::vector<ContribRow> table1() {
    std::vector<ContribRow> rows;
    double base_120 = leaf_contribution(10, 120);
    double base_inf = leaf_contribution(10, kTableLargeDegree);
    for (long k = 5; k <= 16; ++k) {
        ContribRow row;
        row.k = k;
        row.c_120 = leaf_contribution(k, 120);
        row.diff_120 = row.c_120 - base_120;
        row.c_inf = leaf_contribution(k, kTableLargeDegree);
        row.diff_inf = row.c_inf - base_inf;
        rows.push_back(row);
    }
    return rows;
}

std::string table1_csv() {
    std::ostringstream out;
    out << "k,c_120,diff_120,c_inf,diff_inf\n";
    char buf[160];
    for (const auto& row : table1()) {
        std::snprintf(buf, sizeof buf, "%ld,%.8f,%.8f,%.8f,%.8f\n", row.k,
                      row.c_120, row.diff_120, row.c_inf, row.diff_inf);
        out << buf;
    }
    return out.str();
}

FBounds f_bounds_check(long d, long k) {
    if (k == 2)
        throw DomainError("f(d,2) is constant sqrt(1/2); no bracket applies");
    check_k(k);
    if (d < 2) throw DomainError("the bracket needs d >= 2");

    FBounds b;
    b.value = detail::f_edge<double>(d, k);
    double dd = static_cast<double>(d);
    if (k == 1) {
        b.lower = 1.0 - 1.0 / dd;
        b.upper = 1.0 - 1.0 / (2.0 * dd);
    } else {
        double root = std::sqrt(1.0 / static_cast<double>(k));
        double half = static_cast<double>(k - 2) / (2.0 * dd);
        b.lower = root * (1.0 + half - half * half / 2.0);
        b.upper = root * (1.0 + half);
    }
    return b;
}

}  // namespace abcmin
