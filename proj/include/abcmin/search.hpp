#pragma once

#include <functional>
#include <vector>

#include "abcmin/shapes.hpp"

namespace abcmin {

// Enumeration caps. Branch orders are capped at k_cap; hub degrees at d_cap
// (<= 0 means "no cap below t", the widest meaningful bound). Winners that
// sit exactly on a cap are flagged so a scan can be rerun wider.
struct SearchCaps {
    long k_cap = 40;
    long d_cap = 0;

    long effective_d_cap(long t) const { return d_cap > 0 ? d_cap : t; }
};

// Visits every feasible shape with exactly t leaves, all five families,
// in a fixed deterministic order. The double value passed alongside is the
// shape's abc index evaluated in plain double arithmetic (within ~1e-11 of
// shape_abc; use shape_abc for the correctly rounded value).
void enumerate_shapes(long t, const SearchCaps& caps,
                      const std::function<void(const CandidateShape&, double)>& visit);

// Convenience: materialize all shapes (small t only; the space grows ~t^3).
std::vector<CandidateShape> all_shapes(long t, const SearchCaps& caps = {});

struct ExtremalRecord {
    long t = 0;
    double abc = 0;           // correctly rounded double of the exact minimum
    std::vector<CandidateShape> shapes;  // all minimizers, deterministic order
    long order = 0;           // vertex count of shapes.front()
    bool unique = true;
    bool cap_hit = false;     // some minimizer touches k_cap or d_cap
};

// Minimum of shape_abc over the shape space at t. Near-ties within 1e-9 are
// settled in extended precision; all minimizers are kept. Throws
// InfeasibleShapeError when the space is empty (t = 1).
ExtremalRecord minimal_tree(long t, const SearchCaps& caps = {});

struct ScanResult {
    std::vector<ExtremalRecord> records;   // one per t, ascending
    std::vector<long> change_points;       // t where the winning pattern changed
    bool cap_hit = false;
};

// minimal_tree for every t in [t1, t2], parallelized across t. A change
// point is a t whose winning family or set of branch orders differs from
// t - 1's. `threads` <= 0 uses the hardware count.
ScanResult scan(long t1, long t2, const SearchCaps& caps = {}, int threads = 0);

// CSV rendering: "t,abc,family,d_R,d_M,l,k_R,s_R,k_M,s_M,order,unique".
std::string scan_csv(const ScanResult& r);

// The two large-t branch-order patterns. With p = floor(t/10), r = t mod 10:
//   TenEleven: one root with p - r S_10 branches and r S_11 branches;
//   NineTen:   one root with p + r - 9 S_10 branches and 10 - r S_9 branches.
enum class LargeTPattern { TenEleven, NineTen };

// The RootOnly shape of the given pattern at t (infeasible combinations,
// e.g. NineTen with r = 0 needing p + r - 9 < 0, throw InfeasibleShapeError).
CandidateShape large_t_shape(long t, LargeTPattern pattern);

struct ClosedForm {
    double abc = 0;
    LargeTPattern pattern = LargeTPattern::TenEleven;
};

// Closed-form abc of the t-minimal tree in the validated large-t regime:
//   TenEleven: 10 (p-r) c(10, p)   + 11 r c(11, p)
//   NineTen:   10 (p+r-9) c(10, p+1) + 9 (10-r) c(9, p+1)
// For residues where both patterns are validated the smaller one is chosen
// numerically (reproducing the validated switchover thresholds). Throws
// OutOfValidatedRangeError below the residue's validated threshold:
//   r=0: 1030   r=1..4: 1201   r=5: 1155   r=6: 1106   r=7: 1077
//   r=8: 1058   r=9: 1039.
ClosedForm closed_form_abc(long t);

// First-order asymptotic value, valid for t >= 1195. With
// A = sqrt(10/11) + (1/10) sqrt(1/11) and the same pattern selection:
//   TenEleven: A t + (9/2) sqrt(1/11)
//              + r (11 sqrt(11/12) + sqrt(1/12) - sqrt(110) - (1/10) sqrt(11))
//   NineTen:   A t + (9/2) sqrt(1/11) + 9 (10-r) ((14/45) sqrt(10) - A)
double asymptotic_abc(long t);

}  // namespace abcmin
