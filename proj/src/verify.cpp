#include "abcmin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "abcmin/errors.hpp"
#include "abcmin/search.hpp"
#include "shape_runs.hpp"

namespace abcmin {

namespace {

double fd(long a, long b) { return detail::f_edge<double>(a, b); }
double cd(long k, long d) { return detail::c_leaf<double>(k, d); }

BigFloat fb(long a, long b) { return detail::f_edge<BigFloat>(a, b); }
BigFloat cb(long k, long d) { return detail::c_leaf<BigFloat>(k, d); }

// Tracks the slackest point of a sweep.
struct Worst {
    double margin = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::string, long>> point;

    void feed(double m, std::vector<std::pair<std::string, long>> p) {
        if (m < margin) {
            margin = m;
            point = std::move(p);
        }
    }
};

bool all_subchecks(const VerificationReport& r) {
    return std::all_of(r.subchecks.begin(), r.subchecks.end(),
                       [](const auto& s) { return s.second; });
}

// Leaf-side slack of attaching a mixed vertex at degree d with branch
// order k: f(d,1) + sqrt(1/(d (d-2)^2)) + delta0(k, d).
double mixed_slack(long k, long d) {
    return fd(d, 1) + std::sqrt(1.0 / (static_cast<double>(d) * (d - 2) * (d - 2))) +
           detail::delta0_of<double>(k, d);
}

BigFloat mixed_slack_big(long k, long d) {
    return fb(d, 1) +
           sqrt(BigFloat(1) / (BigFloat(d) * BigFloat(d - 2) * BigFloat(d - 2))) +
           detail::delta0_of<BigFloat>(k, d);
}

}  // namespace

VerificationReport verify_noRandM() {
    VerificationReport r;
    r.name = "noRandM";
    r.range = "d = 26..100, k = 5..11";
    r.direction = "positive";

    Worst w;
    for (long k = 5; k <= 11; ++k) {
        for (long d = 26; d <= 100; ++d) {
            w.feed(mixed_slack(k, d), {{"k", k}, {"d", d}});
            r.checked++;
        }
    }

    bool increasing = true;
    for (long k = 5; k <= 11; ++k) {
        double prev = mixed_slack(k, 100);
        for (long d = 101; d <= 10000; ++d) {
            double cur = mixed_slack(k, d);
            if (cur <= prev) { increasing = false; break; }
            prev = cur;
        }
    }
    r.subchecks.emplace_back("margin keeps increasing for d = 100..10^4", increasing);

    bool fails_small = false;
    for (long k = 5; k <= 11 && !fails_small; ++k)
        for (long d = 3; d <= 25; ++d)
            if (mixed_slack(k, d) <= 0) { fails_small = true; break; }
    r.subchecks.emplace_back("some (k, d) with d <= 25 fails", fails_small);

    r.worst_margin = w.margin;
    r.worst_point = w.point;
    r.passed = w.margin > 0 && all_subchecks(r) &&
               mixed_slack_big(w.point[0].second, w.point[1].second).positive();
    return r;
}

VerificationReport verify_noRandM2() {
    VerificationReport r;
    r.name = "noRandM2";
    r.range = "d = 3..25";
    r.direction = "positive";

    auto slack = [](long d) {
        return fd(d, 1) +
               std::sqrt(1.0 / (static_cast<double>(d) * (d - 2) * (d - 2))) +
               detail::delta0_of<double>(10, 120);
    };
    Worst w;
    for (long d = 3; d <= 25; ++d) {
        w.feed(slack(d), {{"d", d}});
        r.checked++;
    }
    r.worst_margin = w.margin;
    r.worst_point = w.point;

    long dw = w.point[0].second;
    BigFloat big = fb(dw, 1) +
                   sqrt(BigFloat(1) / (BigFloat(dw) * BigFloat(dw - 2) * BigFloat(dw - 2))) +
                   detail::delta0_of<BigFloat>(10, 120);
    r.passed = w.margin > 0 && big.positive();
    return r;
}

namespace {

double near_ten_step(long d) {
    return fd(11, d + 1) - fd(11, d) + fd(12, d + 1) - fd(12, d);
}

BigFloat near_ten_step_big(long d) {
    return fb(11, d + 1) - fb(11, d) + fb(12, d + 1) - fb(12, d);
}

}  // namespace

VerificationReport verify_10vs11() {
    VerificationReport r;
    r.name = "10vs11";
    r.range = "d = 120..10^5 exhaustive, then doubling to 10^6";
    r.direction = "absolute <= 6e-4";
    const double bound = 6e-4;

    std::vector<long> grid;
    for (long d = 120; d <= 100000; ++d) grid.push_back(d);
    for (long d = 200000; d <= 800000; d *= 2) grid.push_back(d);
    grid.push_back(1000000);

    Worst w;
    for (long d : grid) {
        w.feed(bound - std::abs(near_ten_step(d)), {{"d", d}});
        r.checked++;
    }

    bool shrinking = true;
    double prev = std::abs(near_ten_step(120));
    for (long d = 240; d <= 1000000; d *= 2) {
        double cur = std::abs(near_ten_step(d));
        if (cur >= prev) { shrinking = false; break; }
        prev = cur;
    }
    r.subchecks.emplace_back("|step| shrinks along doubling ladder", shrinking);

    r.worst_margin = w.margin;
    r.worst_point = w.point;
    BigFloat big = abs(near_ten_step_big(w.point[0].second));
    r.passed = w.margin > 0 && all_subchecks(r) && big < BigFloat(bound);
    return r;
}

namespace {

// Cost of the two competing large-t patterns at hub budget p and residue r,
// as plain branch sums.
double pattern_gap(long p, long r) {
    double ten_eleven = 10.0 * (p - r) * cd(10, p) + 11.0 * r * cd(11, p);
    double nine_ten =
        10.0 * (p + r - 9) * cd(10, p + 1) + 9.0 * (10 - r) * cd(9, p + 1);
    return r <= 7 ? nine_ten - ten_eleven : ten_eleven - nine_ten;
}

BigFloat pattern_gap_big(long p, long r) {
    BigFloat ten_eleven = BigFloat(10 * (p - r)) * cb(10, p) + BigFloat(11 * r) * cb(11, p);
    BigFloat nine_ten = BigFloat(10 * (p + r - 9)) * cb(10, p + 1) +
                        BigFloat(9 * (10 - r)) * cb(9, p + 1);
    return r <= 7 ? nine_ten - ten_eleven : ten_eleven - nine_ten;
}

}  // namespace

VerificationReport verify_crossover() {
    VerificationReport r;
    r.name = "crossover";
    r.range = "p = 1000..10^4 exhaustive, then doubling to 10^5; r = 0..9";
    r.direction = "positive";

    std::vector<long> ps;
    for (long p = 1000; p <= 10000; ++p) ps.push_back(p);
    for (long p = 20000; p <= 80000; p *= 2) ps.push_back(p);
    ps.push_back(100000);

    Worst w;
    for (long p : ps) {
        for (long res = 0; res <= 9; ++res) {
            w.feed(pattern_gap(p, res), {{"r", res}, {"p", p}});
            r.checked++;
        }
    }

    long slack_low = 0, slack_high = 8;
    for (long res = 1; res <= 7; ++res)
        if (pattern_gap(1000, res) < pattern_gap(1000, slack_low)) slack_low = res;
    if (pattern_gap(1000, 9) < pattern_gap(1000, 8)) slack_high = 9;
    r.subchecks.emplace_back("slackest residue in 0..7 at p = 1000 is r = 7",
                             slack_low == 7);
    r.subchecks.emplace_back("slackest residue in 8..9 at p = 1000 is r = 8",
                             slack_high == 8);

    r.worst_margin = w.margin;
    r.worst_point = w.point;
    r.passed = w.margin > 0 && all_subchecks(r) &&
               pattern_gap_big(w.point[1].second, w.point[0].second).positive();
    return r;
}

namespace {

double rootless_expr(long d) {
    return 10 * fd(1, 11) + fd(1, d + 1) - 11 * fd(1, 12) + fd(11, d + 1) +
           (d - 1) * (fd(11, d + 1) - fd(11, d)) - fd(12, d) + 0.0054;
}

BigFloat rootless_expr_big(long d) {
    return BigFloat(10) * fb(1, 11) + fb(1, d + 1) - BigFloat(11) * fb(1, 12) +
           fb(11, d + 1) + BigFloat(d - 1) * (fb(11, d + 1) - fb(11, d)) -
           fb(12, d) + BigFloat(0.0054);
}

}  // namespace

VerificationReport verify_rootless_rewrite_bound() {
    VerificationReport r;
    r.name = "rootless_rewrite_bound";
    r.range = "d = 120..10^5";
    r.direction = "positive";

    Worst w;
    for (long d = 120; d <= 100000; ++d) {
        w.feed(rootless_expr(d), {{"d", d}});
        r.checked++;
    }

    bool increasing = true;
    double prev = rootless_expr(120);
    for (long d = 240; d <= 100000; d *= 2) {
        double cur = rootless_expr(d);
        if (cur <= prev) { increasing = false; break; }
        prev = cur;
    }
    r.subchecks.emplace_back("expression increases along doubling ladder", increasing);

    r.worst_margin = w.margin;
    r.worst_point = w.point;
    r.passed = w.margin > 0 && all_subchecks(r) &&
               rootless_expr_big(w.point[0].second).positive();
    return r;
}

VerificationReport verify_leaf37_bound() {
    VerificationReport r;
    r.name = "leaf37_bound";
    r.range = "l = 37..10^4";
    r.direction = "positive";

    auto margin = [](long l) { return fd(l + 2, 1) - cd(9, l + 4); };

    double worst = std::numeric_limits<double>::infinity();
    long worst_l = 0;
    for (long l = 37; l <= 10000; ++l) {
        double m = margin(l);
        if (m < worst) { worst = m; worst_l = l; }
        r.checked++;
    }

    long last_fail = 0;
    for (long l = 1; l <= 36; ++l)
        if (margin(l) <= 0) last_fail = l;
    r.subchecks.emplace_back("fails for some l < 37", last_fail > 0);

    r.worst_margin = worst;
    r.worst_point = {{"l", last_fail}};

    BigFloat at_worst = fb(worst_l + 2, 1) - cb(9, worst_l + 4);
    BigFloat at_fail = last_fail > 0 ? fb(last_fail + 2, 1) - cb(9, last_fail + 4)
                                     : BigFloat(0);
    r.passed = worst > 0 && all_subchecks(r) && at_worst.positive() &&
               at_fail.negative();
    return r;
}

namespace {

BigFloat closed_form_big(long t) {
    return detail::abc_sum_big(
        detail::shape_degree_runs(large_t_shape(t, closed_form_abc(t).pattern)));
}

BigFloat asymptotic_big(long t) {
    long r = t % 10;
    LargeTPattern pattern = closed_form_abc(t).pattern;
    BigFloat a = detail::c_leaf_inf<BigFloat>(10);
    BigFloat base = a * BigFloat(t) +
                    BigFloat(9) / BigFloat(2) * sqrt(BigFloat(1) / BigFloat(11));
    if (pattern == LargeTPattern::TenEleven) {
        BigFloat step = BigFloat(11) * sqrt(BigFloat(11) / BigFloat(12)) +
                        sqrt(BigFloat(1) / BigFloat(12)) - sqrt(BigFloat(110)) -
                        sqrt(BigFloat(11)) / BigFloat(10);
        return base + BigFloat(r) * step;
    }
    return base + BigFloat(9 * (10 - r)) * (detail::c_leaf_inf<BigFloat>(9) - a);
}

}  // namespace

VerificationReport verify_asymptotics(long t_max) {
    VerificationReport r;
    r.name = "asymptotics";
    r.direction = "positive";
    {
        std::ostringstream range;
        range << "per-residue doubling ladders from ~1200 to " << t_max;
        r.range = range.str();
    }
    if (t_max < 2500) throw DomainError("asymptotics check needs t_max >= 2500");

    Worst w;
    bool all_shrink = true;
    for (long res = 0; res <= 9; ++res) {
        long t = 1195;
        while (t % 10 != res) t++;
        double prev = std::numeric_limits<double>::infinity();
        double t_res_last = 0, t_res_prev = 0;
        while (t <= t_max) {
            double residual = asymptotic_abc(t) - closed_form_abc(t).abc;
            w.feed(residual, {{"r", res}, {"t", t}});
            r.checked++;
            if (std::abs(residual) >= prev) all_shrink = false;
            prev = std::abs(residual);
            t_res_prev = t_res_last;
            t_res_last = t * residual;

            long next = 2 * t;
            while (next % 10 != res) next++;
            t = next;
        }
        std::ostringstream label;
        label << "t * residual settles within 10% (r = " << res << ")";
        r.subchecks.emplace_back(
            label.str(), std::abs(t_res_last - t_res_prev) <= 0.1 * std::abs(t_res_last));
    }
    r.subchecks.emplace_back("residuals shrink along every ladder", all_shrink);

    r.worst_margin = w.margin;
    r.worst_point = w.point;

    long tw = w.point[1].second;
    BigFloat big = asymptotic_big(tw) - closed_form_big(tw);
    r.passed = w.margin > 0 && all_subchecks(r) && big.positive();
    return r;
}

std::vector<VerificationReport> verify_all() {
    std::vector<VerificationReport> out;
    out.push_back(verify_noRandM());
    out.push_back(verify_noRandM2());
    out.push_back(verify_10vs11());
    out.push_back(verify_crossover());
    out.push_back(verify_rootless_rewrite_bound());
    out.push_back(verify_leaf37_bound());
    out.push_back(verify_asymptotics());
    return out;
}

const std::vector<std::string>& verification_names() {
    static const std::vector<std::string> names = {
        "noRandM",  "noRandM2", "10vs11", "crossover",
        "rootless_rewrite_bound", "leaf37_bound", "asymptotics"};
    return names;
}

VerificationReport run_verification(const std::string& name) {
    if (name == "noRandM") return verify_noRandM();
    if (name == "noRandM2") return verify_noRandM2();
    if (name == "10vs11") return verify_10vs11();
    if (name == "crossover") return verify_crossover();
    if (name == "rootless_rewrite_bound") return verify_rootless_rewrite_bound();
    if (name == "leaf37_bound") return verify_leaf37_bound();
    if (name == "asymptotics") return verify_asymptotics();
    throw DomainError("unknown verification: " + name);
}

}  // namespace abcmin
