#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gridcover/lattice.hpp"

using namespace gridcover;

TEST_CASE("ball sizes") {
    CHECK(manhattan_ball_size(0) == 1);
    CHECK(manhattan_ball_size(2) == 13);
    CHECK(manhattan_ball_size(3) == 25);
    CHECK_THROWS_AS(manhattan_ball_size(-1), std::invalid_argument);
}

TEST_CASE("projection reproduces the r=3 shift-2 profile") {
    const ProjectionProfile profile = project_ball(3, 2);
    const std::vector<std::int64_t> expected{3, 2, 2, 3, 2, 1, 1};
    for (int i = 0; i <= 6; ++i) {
        CHECK(profile.at(i) == expected[i]);
        CHECK(profile.at(-i) == expected[i]); // symmetric
    }
    CHECK(profile.at(7) == 0);
    CHECK(profile.total() == manhattan_ball_size(3));
}

TEST_CASE("projection special cases") {
    const ProjectionProfile vertical = project_ball(2, 0);
    CHECK(vertical.at(0) == 5);
    CHECK(vertical.at(1) == 3);
    CHECK(vertical.at(2) == 1);

    const ProjectionProfile diag = project_ball(2, 1);
    CHECK(diag.at(0) == 3);
    CHECK(diag.at(1) == 2);
    CHECK(diag.at(2) == 3);
    CHECK(diag.min_index() == -2);
    CHECK(diag.max_index() == 2);
}

TEST_CASE("mass conservation across radii, shifts and folds") {
    for (int r = 2; r <= 10; ++r) {
        for (int s = 0; s <= r; ++s) {
            const ProjectionProfile profile = project_ball(r, s);
            CHECK(profile.total() == manhattan_ball_size(r));
            for (int p = 1; p <= 25; ++p) {
                const WeightedCycle cycle = fold_profile(profile, p);
                WeightExpr sum;
                for (const auto& w : cycle.weights.weights) sum += w;
                CHECK(sum == WeightExpr::constant(Rational(manhattan_ball_size(r))));
            }
        }
    }
}

TEST_CASE("closed form equals the direct projection at shift 1") {
    for (int r = 2; r <= 10; ++r) {
        const ProjectionProfile direct = project_ball(r, 1);
        const ProjectionProfile closed = closed_form_profile(r);
        CHECK(direct.values == closed.values);
    }
    CHECK(closed_form_profile(2).at(0) == 3);
    CHECK(closed_form_profile(3).at(0) == 3);
    CHECK(closed_form_profile(3).at(1) == 4);
}

TEST_CASE("folding examples") {
    const WeightedCycle c5 = fold_profile(project_ball(3, 2), 5);
    for (int i = 0; i < 5; ++i)
        CHECK(c5.weights.weights[i] == WeightExpr::constant(Rational(5)));

    const WeightedCycle c2 = fold_profile(project_ball(2, 1), 2);
    CHECK(c2.weights.weights[0] == WeightExpr::constant(Rational(9)));
    CHECK(c2.weights.weights[1] == WeightExpr::constant(Rational(4)));

    // Wide cycle: no wrap-around, weights are the profile re-indexed mod p.
    const WeightedCycle wide = fold_profile(project_ball(2, 1), 25);
    CHECK(wide.weights.weights[0] == WeightExpr::constant(Rational(3)));
    CHECK(wide.weights.weights[2] == WeightExpr::constant(Rational(3)));
    CHECK(wide.weights.weights[23] == WeightExpr::constant(Rational(3)));
    CHECK(wide.weights.weights[12] == WeightExpr::constant(Rational(0)));
}

TEST_CASE("diagonal colorings") {
    const LinePattern p3{Coloring::from_string("100")};
    const PeriodicColoring parallel = build_diagonal_coloring(p3, Orientation::Parallel);
    for (int x1 = -6; x1 <= 6; ++x1)
        for (int x2 = -6; x2 <= 6; ++x2) {
            CHECK(parallel.black(x1, x2) == ((((x1 - x2) % 3) + 3) % 3 == 0));
            CHECK(parallel.black(x1, x2) == parallel.black(x1 + 1, x2 + 1));
        }

    // On period 2, crossed and parallel lookups agree on the even sublattice
    // and along the base line.
    const LinePattern p2{Coloring::from_string("10")};
    const PeriodicColoring cr = build_diagonal_coloring(p2, Orientation::Crossed);
    const PeriodicColoring pa = build_diagonal_coloring(p2, Orientation::Parallel);
    for (int x1 = 0; x1 < 8; ++x1) {
        CHECK(cr.black(x1, 0) == pa.black(x1, 0));
        for (int x2 = 0; x2 < 8; ++x2)
            if ((x1 + x2) % 2 == 0) CHECK(cr.black(x1, x2) == pa.black(x1, x2));
    }
}

TEST_CASE("code verification") {
    const PeriodicColoring all_white =
        build_diagonal_coloring(LinePattern{Coloring::from_string("0")}, Orientation::Parallel);
    const CodeReport white_report = verify_code(all_white, 3);
    CHECK(white_report.verified());
    CHECK_FALSE(white_report.a.has_value());
    CHECK(white_report.b == 0);

    const PeriodicColoring all_black =
        build_diagonal_coloring(LinePattern{Coloring::from_string("1")}, Orientation::Parallel);
    const CodeReport black_report = verify_code(all_black, 3);
    CHECK(black_report.verified());
    CHECK(black_report.a == manhattan_ball_size(3));
    CHECK_FALSE(black_report.b.has_value());

    const PeriodicColoring sparse =
        build_diagonal_coloring(LinePattern{Coloring::from_string("100")}, Orientation::Parallel);
    const CodeReport report = verify_code(sparse, 2);
    CHECK(report.verified());
    CHECK(report.a == 3);
    CHECK(report.b == 5);

    // Same pattern rotated: the constants do not move.
    const PeriodicColoring rotated =
        build_diagonal_coloring(LinePattern{Coloring::from_string("010")}, Orientation::Parallel);
    const CodeReport rotated_report = verify_code(rotated, 2);
    CHECK(rotated_report.a == 3);
    CHECK(rotated_report.b == 5);
}

TEST_CASE("verification failure carries a witness") {
    // A lone black diagonal of period 4 is not an r=2 code: white centers see
    // 2 or 6 black cells depending on their distance from the diagonal.
    const PeriodicColoring bad =
        build_diagonal_coloring(LinePattern{Coloring::from_string("1000")}, Orientation::Parallel);
    const CodeReport report = verify_code(bad, 2);
    CHECK_FALSE(report.verified());
    REQUIRE(report.violation.has_value());
    const auto counted = ball_black_count(bad, report.violation->cell[0],
                                          report.violation->cell[1], 2);
    CHECK(counted == report.violation->observed);
    CHECK(report.violation->observed != report.violation->expected);
}

TEST_CASE("cycle classification agrees with lattice verification") {
    // The plane-to-cycle equivalence at r=2, over every pattern of period 4.
    const WeightedCycle cycle = fold_profile(project_ball(2, 1), 4);
    const LabellingInstance inst = rotation_instance(cycle);
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        const Coloring pattern = Coloring::from_mask(mask, 4);
        const LabellingVerdict verdict = classify_labelling(inst, pattern);
        const CodeReport report =
            verify_code(build_diagonal_coloring(LinePattern{pattern}, Orientation::Parallel), 2);
        CHECK(verdict.is_constant() == report.verified());
        if (verdict.is_constant() && report.verified()) {
            if (verdict.a) CHECK(report.a == verdict.a->constant_term().num);
            if (verdict.b) CHECK(report.b == verdict.b->constant_term().num);
        }
    }
}
