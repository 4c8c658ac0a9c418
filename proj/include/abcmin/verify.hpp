#pragma once

#include <string>
#include <utility>
#include <vector>

namespace abcmin {

// Outcome of one mechanically checked inequality family. worst_margin is the
// slackest margin seen over the scanned grid (its sign decides pass for
// direction "positive"); worst_point names the grid point attaining it.
// The worst point is re-evaluated in extended precision and must reproduce
// the same verdict, otherwise passed is forced to false.
struct VerificationReport {
    std::string name;
    std::string range;        // human-readable description of the grid
    long checked = 0;         // number of grid points evaluated
    double worst_margin = 0;
    std::vector<std::pair<std::string, long>> worst_point;
    std::string direction;    // "positive", "absolute <= bound", ...
    bool passed = false;
    // Secondary assertions bundled with the main sweep (monotone tails,
    // required counterexamples, ...), in fixed order.
    std::vector<std::pair<std::string, bool>> subchecks;
};

// f(d,1) + sqrt(1/(d (d-2)^2)) + delta0(k, d) > 0 on d = 26..100, k = 5..11;
// the margin must keep increasing in d through d = 10^4; and at least one
// (k, d) with d <= 25 must fail (recorded as a subcheck).
VerificationReport verify_noRandM();

// f(d,1) + sqrt(1/(d (d-2)^2)) + delta0(10, 120) > 0 for d = 3..25.
VerificationReport verify_noRandM2();

// |f(11,d+1) - f(11,d) + f(12,d+1) - f(12,d)| <= 6e-4 for d >= 120
// (exhaustive to 10^5, geometric samples to 10^6), shrinking in d.
VerificationReport verify_10vs11();

// 10(p-r) c(10,p) + 11 r c(11,p) < 10(p+r-9) c(10,p+1) + 9(10-r) c(9,p+1)
// for r = 0..7, reversed for r = 8..9, over p = 1000..10^4 exhaustive plus
// geometric samples to 10^5. Also records that the slackest residues at
// p = 1000 are r = 7 and r = 8.
VerificationReport verify_crossover();

// The composite lower-bound expression used when rewriting a rootless tree,
//   10 f(1,11) + f(1,d+1) - 11 f(1,12) + f(11,d+1)
//     + (d-1)(f(11,d+1) - f(11,d)) - f(12,d) + 0.0054,
// is positive for d = 120..10^5 and increases in d (sampled).
VerificationReport verify_rootless_rewrite_bound();

// f(l+2, 1) - c(9, l+4) > 0 for l = 37..10^4, fails for some l < 37;
// the largest failing l is recorded in worst_point.
VerificationReport verify_leaf37_bound();

// Residuals |closed_form_abc(t) - asymptotic_abc(t)|: positive, shrinking,
// and t * residual approaches a per-residue limit (last geometric samples
// within 10%). Scans each residue class up to t_max.
VerificationReport verify_asymptotics(long t_max = 1000000);

// All of the above, fixed order.
std::vector<VerificationReport> verify_all();

// Lookup by name ("noRandM", "noRandM2", "10vs11", "crossover",
// "rootless_rewrite_bound", "leaf37_bound", "asymptotics").
// Throws DomainError for unknown names.
VerificationReport run_verification(const std::string& name);

const std::vector<std::string>& verification_names();

}  // namespace abcmin
