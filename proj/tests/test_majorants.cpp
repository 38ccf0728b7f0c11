#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "jpdom/majorants.hpp"
#include "jpdom/rng.hpp"

using namespace jpdom;

TEST_CASE("piecewise evaluation, extension, and shape validation") {
    RegularMajorant h({0.25, 0.5, 1.0}, {0.5, 0.7, 1.0});
    CHECK(h(0.25) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(h(0.375) == doctest::Approx(0.6).epsilon(1e-15));
    CHECK(h(1.0) == doctest::Approx(1.0));
    CHECK(h(2.0) == doctest::Approx(1.0));  // constant right of the last breakpoint
    // left extension: line through the first two breakpoints
    const double slope = (0.7 - 0.5) / 0.25;
    CHECK(h(0.1) == doctest::Approx(0.5 + slope * (0.1 - 0.25)).epsilon(1e-14));
    CHECK(h(0.0) >= 0.0);  // clamped, never negative

    CHECK_THROWS_AS(RegularMajorant({0.5, 0.25}, {0.1, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(RegularMajorant({0.25, 0.5}, {0.1}), std::invalid_argument);
    CHECK_THROWS_AS(RegularMajorant({0.0, 0.5}, {0.1, 0.2}), std::invalid_argument);
    CHECK_THROWS_AS(RegularMajorant({0.25, 0.5}, {-0.1, 0.2}), std::invalid_argument);
}

TEST_CASE("named majorant tables evaluate their generating functions") {
    const RegularMajorant s = make_majorant("sqrt");
    CHECK(s(0.25) == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(s(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s(1e-20) == doctest::Approx(1e-10).epsilon(1e-2));

    const RegularMajorant lg = make_majorant("one_over_log");
    CHECK(lg(0.1) == doctest::Approx(1.0 / std::log(10.0)).epsilon(1e-8));

    const RegularMajorant c = make_majorant("const:0.5");
    CHECK(c(1e-15) == doctest::Approx(0.5));
    CHECK(c(0.3) == doctest::Approx(0.5));
    CHECK(c(2.0) == doctest::Approx(0.5));

    CHECK_THROWS_AS(make_majorant("nope"), std::invalid_argument);
    CHECK_THROWS_AS(constant_majorant(-1.0), std::invalid_argument);
}

TEST_CASE("lambda gauge") {
    const RegularMajorant id = make_majorant("identity");
    CHECK(eval_lambda_h(id, 0.5) == doctest::Approx(std::exp(1.0)).epsilon(1e-8));
    CHECK(eval_lambda_h(id, 0.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-8));
    const RegularMajorant xl = make_majorant("xlog");
    CHECK(eval_lambda_h(xl, 0.9) == doctest::Approx(10.0).epsilon(1e-6));
    CHECK_THROWS_AS(eval_lambda_h(id, 1.0), std::domain_error);
    CHECK_THROWS_AS(eval_lambda_h(id, -0.1), std::domain_error);
}

TEST_CASE("regularity diagnostics") {
    const RegularityReport ok = check_regularity(make_majorant("sqrt"));
    CHECK(ok.increasing);
    CHECK(ok.ratio_decreasing);
    CHECK(ok.max_violation == doctest::Approx(0.0));

    // x^2 on [0.1, 1]: increasing, but x^2/x = x grows
    std::vector<double> xs, ys;
    for (int i = 1; i <= 10; ++i) {
        xs.push_back(0.1 * i);
        ys.push_back(0.01 * i * i);
    }
    const RegularityReport sq = check_regularity(RegularMajorant(xs, ys));
    CHECK(sq.increasing);
    CHECK_FALSE(sq.ratio_decreasing);
    CHECK(sq.max_violation > 0.0);

    // xlog is not monotone past 1/e, but its ratio log(1/x) always decreases
    const RegularityReport xl = check_regularity(make_majorant("xlog"));
    CHECK_FALSE(xl.increasing);
    CHECK(xl.ratio_decreasing);
}

TEST_CASE("exact integral of h(t)/t") {
    const RegularMajorant id = make_majorant("identity");
    CHECK(id.integral_ratio(0.25, 0.75) == doctest::Approx(0.5).epsilon(1e-8));
    const RegularMajorant s = make_majorant("sqrt");
    // antiderivative 2 sqrt(t)
    CHECK(s.integral_ratio(0.01, 0.04) == doctest::Approx(0.2).epsilon(1e-7));
    CHECK_THROWS_AS(s.integral_ratio(0.5, 0.25), std::invalid_argument);
    CHECK_THROWS_AS(s.integral_ratio(0.0, 0.25), std::invalid_argument);
}

TEST_CASE("inverse_below stays in the increasing range and below the level") {
    const RegularMajorant s = make_majorant("sqrt");
    const double x = s.inverse_below(0.5);
    CHECK(x == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(s(x) <= 0.5);
    CHECK(s.inverse_below(2.0) == doctest::Approx(1.0));  // level above max h
    CHECK(s.inverse_below(0.0) == doctest::Approx(0.0));  // no abscissa qualifies

    // non-monotone table: the search must not wander past the argmax
    // (the tabulated argmax sits within one 1e-4-relative grid step of 1/e)
    const RegularMajorant xl = make_majorant("xlog");
    const double peak = 1.0 / std::exp(1.0);
    const double y = xl.inverse_below(1.0);  // level above the peak value 1/e
    CHECK(y <= peak * (1.0 + 2e-4));
    CHECK(xl(y) <= 1.0);

    const RegularMajorant c = make_majorant("const:0.5");
    CHECK(c.inverse_below(0.6) == doctest::Approx(1.0));
    CHECK(c.inverse_below(0.4) == doctest::Approx(0.0));
}

TEST_CASE("least concave majorant: hull shapes") {
    // concave input is reproduced
    std::vector<double> xs, ys;
    for (int i = 1; i <= 20; ++i) {
        xs.push_back(0.05 * i);
        ys.push_back(std::sqrt(0.05 * i));
    }
    const RegularMajorant lcm = least_concave_majorant(xs, ys);
    for (std::size_t i = 0; i < xs.size(); ++i)
        CHECK(lcm(xs[i]) == doctest::Approx(ys[i]).epsilon(1e-12));

    // convex input collapses to the endpoint chord through the origin
    std::vector<double> cx, cy;
    for (int i = 1; i <= 10; ++i) {
        cx.push_back(0.1 * i);
        cy.push_back(0.01 * i * i);
    }
    const RegularMajorant chord = least_concave_majorant(cx, cy);
    CHECK(chord(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(chord(0.123) == doctest::Approx(0.123).epsilon(1e-12));

    // single point: line through (0,0), then constant
    const RegularMajorant single = least_concave_majorant({0.5}, {2.0});
    CHECK(single(0.25) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(single(0.7) == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(least_concave_majorant({}, {}), std::invalid_argument);
    CHECK_THROWS_AS(least_concave_majorant({0.5, 0.4}, {1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("least concave majorant dominates random samples with nonincreasing slopes") {
    WalkRng rng(7, 0);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> xs, ys;
        double x = 0.0;
        const int npts = 2 + static_cast<int>(rng.uniform() * 28);
        for (int i = 0; i < npts; ++i) {
            x += 0.005 + rng.uniform() * 0.025;
            xs.push_back(x);
            ys.push_back(rng.uniform() * 2.0);
        }
        const RegularMajorant lcm = least_concave_majorant(xs, ys);
        for (std::size_t i = 0; i < xs.size(); ++i)
            CHECK(lcm(xs[i]) >= ys[i] - 1e-12);
        const auto& bx = lcm.breakpoints();
        const auto& by = lcm.values();
        double prev_slope = by[0] / bx[0];
        for (std::size_t i = 1; i < bx.size(); ++i) {
            const double slope = (by[i] - by[i - 1]) / (bx[i] - bx[i - 1]);
            CHECK(slope <= prev_slope + 1e-12);
            prev_slope = slope;
        }
    }
}

TEST_CASE("positive sequences: rules, explicit lists, null check") {
    const PositiveSequence inv = PositiveSequence::from_rule_name("one_over_n");
    CHECK(inv.term(3) == doctest::Approx(1.0 / 3.0));
    CHECK(inv.null_check(1e-3, 2000));
    CHECK_FALSE(inv.null_check(1e-3, 100));

    const PositiveSequence ex(std::vector<double>{0.5, 0.4, 0.1});
    CHECK(ex.term(2) == doctest::Approx(0.4));
    CHECK(ex.max_index() == 3);
    CHECK_THROWS_AS(ex.term(4), std::invalid_argument);
    CHECK_THROWS_AS(PositiveSequence(std::vector<double>{0.5, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(PositiveSequence::from_rule_name("bogus"), std::invalid_argument);
}

TEST_CASE("sequence replacement: closed form for 1/n and exact properties") {
    const std::size_t horizon = 10000;
    const PositiveSequence ct =
        regularize_sequence(PositiveSequence::from_rule_name("one_over_n"), horizon);

    // mirror of the recursion, fed with the closed-form branch values
    std::vector<double> r(horizon);
    r[0] = 1.0;
    for (std::size_t n = 1; n < horizon; ++n) {
        const double shrink = std::sqrt(static_cast<double>(n) / static_cast<double>(n + 1));
        r[n] = std::max(1.0 / static_cast<double>(n + 1), shrink * r[n - 1]);
    }
    for (std::size_t n = 1; n <= horizon; ++n) {
        CHECK(ct.term(n) == r[n - 1]);  // bitwise: same recursion, same order
        CHECK(std::abs(ct.term(n) - 1.0 / std::sqrt(static_cast<double>(n))) <=
              1e-12 / std::sqrt(static_cast<double>(n)));
    }
    CHECK(ct.term(3) == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-13));
}

TEST_CASE("sequence replacement: exact invariants on random null sequences") {
    WalkRng rng(11, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t len = 20 + static_cast<std::size_t>(rng.uniform() * 180);
        const double p = 0.3 + rng.uniform() * 1.2;
        const double amp = 0.1 + rng.uniform() * 2.0;
        std::vector<double> terms(len);
        for (std::size_t n = 0; n < len; ++n)
            terms[n] = amp * (0.5 + 0.5 * rng.uniform()) /
                       std::pow(static_cast<double>(n + 1), p);
        const PositiveSequence c(terms);
        const std::size_t horizon = len;
        const PositiveSequence ct = regularize_sequence(c, horizon);
        for (std::size_t n = 1; n <= horizon; ++n) {
            CHECK(ct.term(n) >= c.term(n));  // (i), exact
            if (n < horizon) {
                CHECK(ct.term(n + 1) <= ct.term(n));  // (ii), exact
                // (iii) in the same floating-point form as the recursion branch
                const double shrink =
                    std::sqrt(static_cast<double>(n) / static_cast<double>(n + 1));
                CHECK(ct.term(n + 1) >= shrink * ct.term(n) * (1.0 - 4e-16));
            }
        }
    }
    CHECK_THROWS_AS(
        regularize_sequence(PositiveSequence(std::vector<double>{0.5, 0.4}), 5),
        std::invalid_argument);
}

TEST_CASE("step majorant from a sequence: exact breakpoint plateaus") {
    // c~_n = 0.5/sqrt(n): h = c~_n^2 on (c~_{n+1}/sqrt(n+1), c~_n/sqrt(n)]
    std::vector<double> terms(64);
    for (std::size_t n = 0; n < 64; ++n) terms[n] = 0.5 / std::sqrt(static_cast<double>(n + 1));
    const PositiveSequence ct(terms);
    const RegularMajorant h = h_from_sequence(ct, 32, false);
    CHECK(h(0.2) == doctest::Approx(0.125).epsilon(1e-12));  // 0.2 in (1/6, 1/4]
    // right endpoint inclusion, evaluated at the breakpoint as computed
    const double b2 = ct.term(2) / std::sqrt(2.0);
    CHECK(h(b2) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(h(0.7) == doctest::Approx(0.25).epsilon(1e-12));  // beyond c~_1: constant c~_1^2
    CHECK(h(0.5) == doctest::Approx(0.25).epsilon(1e-12));

    // concavified variant dominates the steps and is concave
    const RegularMajorant hc = h_from_sequence(ct, 32, true);
    for (double x : {0.01, 0.05, 0.2, 0.25, 0.49, 0.5})
        CHECK(hc(x) >= h(x) - 1e-12);
    const RegularityReport reg = check_regularity(hc);
    CHECK(reg.increasing);
    CHECK(reg.ratio_decreasing);

    std::vector<double> big(8, 1.5);
    CHECK_THROWS_AS(h_from_sequence(PositiveSequence(big), 4, false), std::invalid_argument);
}

TEST_CASE("legendre infimum: closed form on constant h") {
    const double cases[][2] = {{100.0, 0.5}, {1000.0, 0.1}, {10000.0, 0.9}};
    for (const auto& tc : cases) {
        const double n = tc[0], c = tc[1];
        const LegendreResult res =
            legendre_inf(static_cast<std::size_t>(n), constant_majorant(c * c));
        const double expect = 2.0 * c * std::sqrt(n);
        CHECK(std::abs(res.value - expect) / expect <= 1e-8);
        CHECK(std::abs(res.argmin - c / std::sqrt(n)) <= 1e-8);
        CHECK_FALSE(res.boundary_infimum);
    }
}

TEST_CASE("legendre infimum: degenerate h and probe soundness") {
    const LegendreResult zero = legendre_inf(50, constant_majorant(0.0));
    CHECK(zero.boundary_infimum);
    CHECK(zero.value == doctest::Approx(50 * 1e-12).epsilon(1e-9));

    // never exceeds f at any probe point
    const RegularMajorant s = make_majorant("sqrt");
    for (std::size_t n : {1u, 7u, 100u, 3000u}) {
        const LegendreResult res = legendre_inf(n, s);
        WalkRng rng(3, n);
        for (int i = 0; i < 100000; ++i) {
            const double x = std::exp(-12.0 * rng.uniform());  // log-uniform probe in [e^-12, 1]
            const double f = static_cast<double>(n) * x + s(x) / x;
            CHECK(res.value <= f * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("xlog domination replacement") {
    auto [same, flag1] = ensure_dominates_xlog(make_majorant("sqrt"));
    CHECK_FALSE(flag1);
    CHECK(same(0.25) == doctest::Approx(0.5).epsilon(1e-8));

    auto [bumped, flag2] = ensure_dominates_xlog(make_majorant("identity"));
    CHECK(flag2);
    CHECK(bumped(0.1) == doctest::Approx(0.1 + 0.1 * std::log(10.0)).epsilon(1e-8));
}
