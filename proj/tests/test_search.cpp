#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "abcmin/errors.hpp"
#include "abcmin/search.hpp"
#include "abcmin/shapes.hpp"
#include "doctest.h"

using namespace abcmin;

TEST_CASE("candidate space sizes") {
    const std::map<long, size_t> expected = {
        {2, 1},   {3, 1},   {4, 2},   {5, 2},   {10, 5},
        {18, 16}, {19, 18}, {35, 98}, {36, 106}, {37, 116},
        {40, 144}, {50, 292}, {53, 352}, {100, 4103}};
    for (auto [t, n] : expected) {
        CAPTURE(t);
        CHECK(all_shapes(t).size() == n);
    }
    CHECK(all_shapes(1).empty());
}

TEST_CASE("enumerated candidates are feasible, on budget, and distinct") {
    for (long t : {2L, 10L, 36L, 53L, 100L}) {
        CAPTURE(t);
        std::set<std::vector<long>> seen;
        enumerate_shapes(t, SearchCaps{}, [&](const CandidateShape& s, double v) {
            CHECK(shape_violation(s) == "");
            CHECK(t_of_shape(s) == t);
            CHECK(v == doctest::Approx(shape_abc(s)).epsilon(1e-12));
            std::vector<long> key = {static_cast<long>(s.family), s.d_R, s.d_M,
                                     s.l,  s.k_R, s.s_R, s.k_M, s.s_M};
            CHECK(seen.insert(key).second);
        });
    }
}

TEST_CASE("pruned search agrees with full enumeration") {
    for (long t : {36L, 50L, 53L, 100L, 219L, 300L}) {
        CAPTURE(t);
        double best = std::numeric_limits<double>::infinity();
        CandidateShape arg;
        enumerate_shapes(t, SearchCaps{}, [&](const CandidateShape& s, double v) {
            if (v < best) {
                best = v;
                arg = s;
            }
        });
        ExtremalRecord rec = minimal_tree(t);
        CHECK(std::abs(rec.abc - best) <= 1e-12);
        CHECK(std::find(rec.shapes.begin(), rec.shapes.end(), arg) !=
              rec.shapes.end());
    }
}

namespace {

void check_winner(long t, ShapeFamily family, long d_R, long d_M, long l,
                  long k_R, long s_R, long k_M, long s_M, double abc) {
    CAPTURE(t);
    ExtremalRecord rec = minimal_tree(t);
    REQUIRE(rec.shapes.size() == 1);
    const CandidateShape& s = rec.shapes.front();
    CHECK(s.family == family);
    CHECK(s.d_R == d_R);
    CHECK(s.d_M == d_M);
    CHECK(s.l == l);
    CHECK(s.k_R == k_R);
    CHECK(s.s_R == s_R);
    CHECK(s.k_M == k_M);
    CHECK(s.s_M == s_M);
    CHECK(rec.abc == doctest::Approx(abc).epsilon(1e-12));
    CHECK(rec.abc == shape_abc(s));
    CHECK(rec.unique);
    CHECK(rec.order == order_of_shape(s));
    CHECK_FALSE(rec.cap_hit);
}

}  // namespace

TEST_CASE("known minima") {
    check_winner(18, ShapeFamily::Star, 0, 0, 0, 18, 0, 0, 0, 17.4928556845359);
    check_winner(19, ShapeFamily::DoubleStar, 0, 0, 0, 10, 0, 9, 0,
                 18.488380282207363);
    check_winner(35, ShapeFamily::DoubleStar, 0, 0, 0, 18, 0, 17, 0,
                 34.360848807496502);
    check_winner(36, ShapeFamily::MixedOnly, 0, 16, 14, 0, 0, 11, 0,
                 35.354818154559382);
    check_winner(37, ShapeFamily::MixedOnly, 0, 17, 15, 0, 0, 11, 0,
                 36.343140747928416);
    check_winner(40, ShapeFamily::MixedOnly, 0, 18, 16, 0, 0, 12, 0,
                 39.31173767355827);
    check_winner(50, ShapeFamily::MixedOnly, 0, 20, 17, 0, 0, 11, 0,
                 49.225305113914217);
    check_winner(53, ShapeFamily::MixedOnly, 0, 22, 19, 0, 0, 12, 2,
                 52.191777176121377);
    check_winner(100, ShapeFamily::MixedOnly, 0, 30, 23, 0, 0, 11, 0,
                 98.668638476325398);
    check_winner(1030, ShapeFamily::RootOnly, 103, 0, 0, 10, 0, 0, 0,
                 1014.4505258521195);
}

TEST_CASE("tiny leaf counts") {
    ExtremalRecord two = minimal_tree(2);
    CHECK(two.abc == 0.0);
    CHECK(two.shapes.front().family == ShapeFamily::Star);
    CHECK(two.shapes.front().k_R == 1);
    CHECK(two.order == 2);

    CHECK(minimal_tree(5).abc ==
          doctest::Approx(std::sqrt(20.0)).epsilon(1e-15));

    CHECK_THROWS_AS(minimal_tree(1), InfeasibleShapeError);
    CHECK_THROWS_AS(minimal_tree(0), InfeasibleShapeError);
    CHECK_THROWS_AS(minimal_tree(-4), InfeasibleShapeError);
}

TEST_CASE("search caps") {
    CHECK(SearchCaps{}.effective_d_cap(36) == 36);
    SearchCaps tight;
    tight.d_cap = 20;
    CHECK(tight.effective_d_cap(36) == 20);

    SearchCaps k8;
    k8.k_cap = 8;
    ExtremalRecord capped = minimal_tree(100, k8);
    CHECK(capped.cap_hit);
    CHECK(capped.abc > minimal_tree(100).abc);
    for (const CandidateShape& s : capped.shapes) {
        CHECK(s.k_R <= 8);
        CHECK(s.k_M <= 8);
    }
}

TEST_CASE("scan matches single searches and is thread independent") {
    ScanResult sr = scan(36, 60);
    REQUIRE(sr.records.size() == 25);
    for (long i = 0; i < 25; ++i) {
        ExtremalRecord one = minimal_tree(36 + i);
        CHECK(sr.records[i].t == 36 + i);
        CHECK(sr.records[i].abc == one.abc);
        CHECK(sr.records[i].shapes == one.shapes);
    }
    ScanResult sr2 = scan(36, 60, SearchCaps{}, 2);
    for (long i = 0; i < 25; ++i) {
        CHECK(sr2.records[i].abc == sr.records[i].abc);
        CHECK(sr2.records[i].shapes == sr.records[i].shapes);
    }
    CHECK(sr2.change_points == sr.change_points);

    CHECK_THROWS_AS(scan(0, 5), DomainError);
    CHECK_THROWS_AS(scan(5, 4), DomainError);
}

TEST_CASE("change points track the winning pattern") {
    ScanResult sr = scan(18, 20);
    // Star at 18; orders {9, 10} double star at 19; orders {10} at 20.
    CHECK(sr.change_points == std::vector<long>{19, 20});
}

TEST_CASE("scan CSV") {
    std::string csv = scan_csv(scan(18, 19));
    CHECK(csv ==
          "t,abc,family,d_R,d_M,l,k_R,s_R,k_M,s_M,order,unique\n"
          "18,17.4928556845359,Star,0,0,0,18,0,0,0,19,true\n"
          "19,18.488380282207363,DoubleStar,0,0,0,10,0,9,0,21,true\n");
}

TEST_CASE("large-t pattern shapes") {
    CandidateShape te0 = large_t_shape(1030, LargeTPattern::TenEleven);
    CHECK(te0.family == ShapeFamily::RootOnly);
    CHECK(te0.d_R == 103);
    CHECK(te0.k_R == 10);
    CHECK(te0.s_R == 0);

    CandidateShape te4 = large_t_shape(1234, LargeTPattern::TenEleven);
    CHECK(te4.d_R == 123);
    CHECK(te4.k_R == 11);
    CHECK(te4.s_R == 119);

    CandidateShape nt4 = large_t_shape(1234, LargeTPattern::NineTen);
    CHECK(nt4.d_R == 124);
    CHECK(nt4.k_R == 10);
    CHECK(nt4.s_R == 6);

    CHECK_THROWS_AS(large_t_shape(25, LargeTPattern::TenEleven),
                    InfeasibleShapeError);
}

TEST_CASE("closed form validity thresholds") {
    // First validated t per residue class.
    const long first[10] = {1030, 1201, 1201, 1201, 1201,
                            1155, 1106, 1077, 1058, 1039};
    for (long r = 0; r <= 9; ++r) {
        CAPTURE(r);
        CHECK_NOTHROW(closed_form_abc(first[r]));
        CHECK_THROWS_AS(closed_form_abc(first[r] - 10), OutOfValidatedRangeError);
    }
    CHECK_THROWS_AS(closed_form_abc(999), OutOfValidatedRangeError);
    CHECK_THROWS_AS(closed_form_abc(2), OutOfValidatedRangeError);
}

TEST_CASE("closed form equals the search winner") {
    for (long t : {1030L, 1039L, 1058L, 1077L, 1106L, 1155L, 1201L, 1202L,
                   1203L, 1204L, 1250L, 1345L, 1355L, 2306L, 2316L, 2400L}) {
        CAPTURE(t);
        ClosedForm cf = closed_form_abc(t);
        ExtremalRecord rec = minimal_tree(t);
        CHECK(cf.abc == rec.abc);
        CHECK(large_t_shape(t, cf.pattern) == rec.shapes.front());
    }
}

TEST_CASE("pattern selection at the switch points") {
    CHECK(closed_form_abc(1030).pattern == LargeTPattern::TenEleven);
    CHECK(closed_form_abc(1039).pattern == LargeTPattern::NineTen);
    CHECK(closed_form_abc(1058).pattern == LargeTPattern::NineTen);
    CHECK(closed_form_abc(1345).pattern == LargeTPattern::NineTen);
    CHECK(closed_form_abc(1355).pattern == LargeTPattern::TenEleven);
    CHECK(closed_form_abc(2306).pattern == LargeTPattern::NineTen);
    CHECK(closed_form_abc(2316).pattern == LargeTPattern::TenEleven);
    CHECK(closed_form_abc(1077).pattern == LargeTPattern::NineTen);
}

TEST_CASE("asymptotic expansion") {
    CHECK_THROWS_AS(asymptotic_abc(1194), OutOfValidatedRangeError);
    CHECK_NOTHROW(asymptotic_abc(1195));

    // t * |closed - asymptotic| flattens out for the r = 0 class.
    double a4 = 1e4 * std::abs(closed_form_abc(10000).abc - asymptotic_abc(10000));
    double a5 = 1e5 * std::abs(closed_form_abc(100000).abc - asymptotic_abc(100000));
    double a6 =
        1e6 * std::abs(closed_form_abc(1000000).abc - asymptotic_abc(1000000));
    CHECK(a4 == doctest::Approx(30.391415).epsilon(1e-5));
    CHECK(a5 == doctest::Approx(30.514294).epsilon(1e-5));
    CHECK(a6 == doctest::Approx(30.52665).epsilon(1e-5));

    // The asymptote approaches from above.
    for (long t : {10000L, 100001L, 999999L})
        CHECK(asymptotic_abc(t) > closed_form_abc(t).abc);
}
