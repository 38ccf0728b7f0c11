#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "jpdom/rng.hpp"
#include "jpdom/spectral_moments.hpp"

using namespace jpdom;

TEST_CASE("radial weight: limit value at 1 and the bounded-ratio guard") {
    const WeightG gs(make_majorant("sqrt"));
    CHECK_FALSE(gs.bounded_ratio());
    CHECK(gs.value_at_one() == doctest::Approx(0.0));
    CHECK(gs(0.75) == doctest::Approx(std::exp(-std::sqrt(0.25) / 0.25)).epsilon(1e-7));
    CHECK(gs(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-7));

    // h(s)/s bounded: G(1) = exp(-slope), flagged
    const WeightG gi(make_majorant("identity"));
    CHECK(gi.bounded_ratio());
    CHECK(gi.value_at_one() == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));

    const WeightG gc(constant_majorant(0.0));
    CHECK(gc.bounded_ratio());
    CHECK(gc.value_at_one() == doctest::Approx(1.0));
}

TEST_CASE("moments: closed forms, monotonicity, certified error") {
    // G = 1 - x for h = x log(1/x): moment(n) = 1/((n+1)(n+2))
    const RegularMajorant xl = make_majorant("xlog");
    for (std::size_t n : {1u, 10u, 100u, 1000u}) {
        const MomentValue mv = moment(xl, n);
        const double expect = 1.0 / ((n + 1.0) * (n + 2.0));
        CHECK(std::abs(mv.value - expect) / expect <= 1e-8);
        CHECK(mv.error_bound <= 1e-6 * mv.value);
    }
    // G = e^{-1}: moment(n) = e^{-1}/(n+1)
    const RegularMajorant id = make_majorant("identity");
    for (std::size_t n : {1u, 10u, 1000u}) {
        const MomentValue mv = moment(id, n);
        const double expect = std::exp(-1.0) / (n + 1.0);
        CHECK(std::abs(mv.value - expect) / expect <= 1e-8);
    }
    // strict decrease in n
    const RegularMajorant s = make_majorant("sqrt");
    double prev = moment(s, 1).value;
    for (std::size_t n = 2; n <= 40; ++n) {
        const double cur = moment(s, n).value;
        CHECK(cur < prev);
        prev = cur;
    }
    CHECK_THROWS_AS(moment(s, 10, 1e-30), std::runtime_error);  // unreachable tolerance
}

TEST_CASE("moment table pipeline: 1/n sequence passes from the start") {
    const MomentTable t = moment_bound_check(PositiveSequence::from_rule_name("one_over_n"), 64);
    CHECK_FALSE(t.inconclusive);
    CHECK(t.first_pass_n == 1);
    CHECK(t.sequence_scale == doctest::Approx(1.0));
    CHECK(t.xlog_applied);  // h from 1/n decays linearly, below x log(1/x)
    for (const MomentRow& r : t.rows) {
        CHECK(r.reference == doctest::Approx(std::exp(-1.0)).epsilon(1e-9));
        CHECK(r.pass);
        CHECK(r.asserted);
        CHECK(r.moment - r.quad_error <=
              std::exp(-r.legendre + 1e-12 * static_cast<double>(r.n)));
    }
}

TEST_CASE("moment table pipeline: rescale branch for a lead term at 1") {
    // c_1 = 1 regularizes to c~_1 = 1, tripping the h builder precondition
    std::vector<double> terms(40);
    for (std::size_t n = 0; n < 40; ++n) terms[n] = 1.0 / std::sqrt(static_cast<double>(n + 1));
    const MomentTable t = moment_bound_check(PositiveSequence(terms), 16);
    CHECK(t.sequence_scale < 1.0);
    CHECK(t.sequence_scale == doctest::Approx(1.0 - 1e-9).epsilon(1e-12));
    CHECK_FALSE(t.inconclusive);
}

TEST_CASE("bergman norm: monomial orthogonality against 2d quadrature") {
    const RegularMajorant xl = make_majorant("xlog");
    // ||1||^2 = 2 pi moment(1) = 2 pi / 6
    CHECK(bergman_norm(Polynomial({cplx(1.0, 0.0)}), xl) ==
          doctest::Approx(std::sqrt(std::numbers::pi / 3.0)).epsilon(1e-7));
    CHECK(bergman_norm(Polynomial(std::vector<cplx>{}), xl) == doctest::Approx(0.0));

    // pythagorean split of a + b z
    const Polynomial sum({cplx(0.7, 0.2), cplx(-0.3, 0.5)});
    const Polynomial ca({cplx(0.7, 0.2)});
    const Polynomial cb({cplx(0.0, 0.0), cplx(-0.3, 0.5)});
    const double n2 = std::pow(bergman_norm(sum, xl), 2.0);
    const double a2 = std::pow(bergman_norm(ca, xl), 2.0);
    const double b2 = std::pow(bergman_norm(cb, xl), 2.0);
    CHECK(n2 == doctest::Approx(a2 + b2).epsilon(1e-10));

    WalkRng rng(21, 0);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<cplx> coef(1 + trial);
        for (cplx& c : coef) c = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const Polynomial p(coef);
        if (p.is_zero()) continue;
        const double direct = bergman_norm_quadrature2d(p, xl);
        const double ortho = bergman_norm(p, xl);
        CHECK(std::abs(direct - ortho) / ortho <= 1e-4);
    }
}

TEST_CASE("pointwise sub-mean-value inequality for |p|^2") {
    // constants attain equality
    const MeanValueReport eq =
        pointwise_meanvalue_check(Polynomial({cplx(2.0, 1.0)}), cplx(0.3, -0.2));
    CHECK(eq.holds);
    CHECK(eq.ratio == doctest::Approx(1.0).epsilon(1e-10));

    // zero at the evaluation point
    const MeanValueReport zero =
        pointwise_meanvalue_check(Polynomial({cplx(0.0, 0.0), cplx(1.0, 0.0)}), cplx(0.0, 0.0));
    CHECK(zero.holds);
    CHECK(zero.lhs == doctest::Approx(0.0));
    CHECK(zero.rhs > 0.0);

    WalkRng rng(23, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t deg = 1 + static_cast<std::size_t>(rng.uniform() * 10);
        std::vector<cplx> coef(deg + 1);
        for (cplx& c : coef) c = cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const Polynomial p(coef);
        if (p.is_zero()) continue;
        const cplx z = std::polar(rng.uniform() * 0.95, 2.0 * std::numbers::pi * rng.uniform());
        const MeanValueReport rep = pointwise_meanvalue_check(p, z);
        CHECK(rep.holds);
        CHECK(rep.ratio <= 1.0 + 1e-8);
    }
    CHECK_THROWS_AS(pointwise_meanvalue_check(Polynomial({cplx(1.0, 0.0)}), cplx(1.0, 0.0)),
                    std::domain_error);
}
