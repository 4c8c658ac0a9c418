#include "numeric.hpp"

#include <algorithm>
#include <tuple>

namespace abcmin::detail {

BigFloat abc_sum_big(std::vector<DegreeRun> runs) {
    for (auto& r : runs) {
        if (r.du > r.dv) std::swap(r.du, r.dv);
    }
    std::sort(runs.begin(), runs.end(), [](const DegreeRun& a, const DegreeRun& b) {
        return std::tie(a.du, a.dv) < std::tie(b.du, b.dv);
    });

    BigFloat acc;
    size_t i = 0;
    while (i < runs.size()) {
        long du = runs[i].du, dv = runs[i].dv;
        long mult = 0;
        while (i < runs.size() && runs[i].du == du && runs[i].dv == dv) {
            mult += runs[i].mult;
            ++i;
        }
        if (mult == 0) continue;
        acc += BigFloat(mult) * f_edge<BigFloat>(du, dv);
    }
    return acc;
}

double abc_from_degree_runs(std::vector<DegreeRun> runs) {
    return abc_sum_big(std::move(runs)).to_double();
}

}  // namespace abcmin::detail
