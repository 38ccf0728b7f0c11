#include "jpdom/spectral_moments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jpdom/quadrature.hpp"

namespace jpdom {

WeightG::WeightG(RegularMajorant h) : h_(std::move(h)) {
    const double d0 = h_.extrapolation_intercept();
    if (d0 > 0.0) {
        at_one_ = 0.0;  // h(s)/s -> infinity
        bounded_ = false;
    } else if (d0 == 0.0) {
        at_one_ = std::exp(-std::max(0.0, h_.extrapolation_slope()));
        bounded_ = true;
    } else {  // clamped extension vanishes near 0, the ratio tends to 0
        at_one_ = 1.0;
        bounded_ = true;
    }
}

double WeightG::operator()(double x) const {
    if (!(x >= 0.0) || !(x <= 1.0)) throw std::domain_error("weight: x must lie in [0, 1]");
    if (x == 1.0) return at_one_;
    const double s = 1.0 - x;
    return std::exp(-h_(s) / s);
}

MomentValue moment(const RegularMajorant& h, std::size_t n, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("moment: tolerance must be > 0");
    // substitute s = 1 - x and integrate exp(n log(1-s) - h(s)/s) over dyadic
    // panels of s accumulating at 0, where the integrand concentrates
    const double nd = static_cast<double>(n);
    const auto f = [&h, nd](double s) {
        return std::exp(nd * std::log1p(-s) - h(s) / s);
    };
    MomentValue out;
    double hi = 1.0;
    for (int j = 0; j <= 60; ++j) {
        const double lo = j == 60 ? 0.0 : 0.5 * hi;
        const QuadResult q = integrate_adaptive(f, lo, hi, tol / 8.0);
        out.value += q.value;
        out.error_bound += q.error;
        hi = lo;
    }
    if (!(out.error_bound <= tol * std::max(out.value, 1e-300)))
        throw std::runtime_error("moment: tolerance unreachable, achieved error bound " +
                                 std::to_string(out.error_bound));
    return out;
}

MomentTable moment_bound_check(const PositiveSequence& c, std::size_t horizon, double tol) {
    if (horizon < 1) throw std::invalid_argument("moment_bound_check: horizon must be >= 1");
    PositiveSequence ct = regularize_sequence(c, horizon + 1);

    MomentTable table;
    table.sequence_scale = 1.0;
    if (ct.term(1) >= 1.0) {  // bring the lead term under the builder's limit
        table.sequence_scale = (1.0 - 1e-9) / ct.term(1);
        std::vector<double> scaled(ct.stored_terms());
        for (double& v : scaled) v *= table.sequence_scale;
        ct = PositiveSequence(std::move(scaled));
    }
    auto [h, replaced] = ensure_dominates_xlog(h_from_sequence(ct, horizon, true));
    table.xlog_applied = replaced;

    std::vector<std::size_t> grid;
    for (std::size_t n = 1; n <= horizon; n *= 2) grid.push_back(n);
    if (grid.back() != horizon) grid.push_back(horizon);

    for (std::size_t n : grid) {
        const MomentValue mv = moment(h, n, tol);
        MomentRow row;
        row.n = n;
        row.moment = mv.value;
        row.quad_error = mv.error_bound;
        row.reference = std::exp(-ct.term(n) * std::sqrt(static_cast<double>(n)));
        row.legendre = legendre_inf(n, h).value;
        row.pass = row.moment <= row.reference;
        table.rows.push_back(row);
    }
    // the asserted window: the longest all-pass suffix of the grid
    std::size_t suffix_start = table.rows.size();
    while (suffix_start > 0 && table.rows[suffix_start - 1].pass) --suffix_start;
    table.inconclusive = suffix_start == table.rows.size();
    table.first_pass_n = table.inconclusive ? 0 : table.rows[suffix_start].n;
    for (std::size_t i = suffix_start; i < table.rows.size(); ++i)
        table.rows[i].asserted = table.rows[i].quad_error < 0.01 * table.rows[i].reference;
    return table;
}

double bergman_norm(const Polynomial& p, const RegularMajorant& h, double tol) {
    if (p.is_zero()) return 0.0;
    double norm_sq = 0.0;
    const auto& a = p.coefficients();
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == cplx(0.0, 0.0)) continue;
        norm_sq += std::norm(a[k]) * moment(h, 2 * k + 1, tol).value;
    }
    return std::sqrt(2.0 * std::numbers::pi * norm_sq);
}

double bergman_norm_quadrature2d(const Polynomial& p, const RegularMajorant& h) {
    if (p.is_zero()) return 0.0;
    const WeightG G{h};
    const std::size_t M = 4 * p.degree() + 16;  // trapezoid, exact for the circle means
    const auto f = [&](double r) {
        double angular = 0.0;
        for (std::size_t j = 0; j < M; ++j)
            angular += std::norm(p(std::polar(r, 2.0 * std::numbers::pi *
                                                     static_cast<double>(j) /
                                                     static_cast<double>(M))));
        return r * G(r) * angular * (2.0 * std::numbers::pi / static_cast<double>(M));
    };
    const QuadResult q = integrate_adaptive(f, 0.0, 1.0, 1e-9, 0.0, 20000);
    if (!q.converged) throw std::runtime_error("bergman_norm_quadrature2d: quadrature failed");
    return std::sqrt(q.value);
}

MeanValueReport pointwise_meanvalue_check(const Polynomial& p, cplx z,
                                          std::size_t quad_samples) {
    if (!(std::abs(z) < 1.0))
        throw std::domain_error("pointwise_meanvalue_check: point must lie in the open disk");
    const double rho = 0.5 * (1.0 - std::abs(z));
    const std::size_t M = std::max<std::size_t>(quad_samples, 2 * p.degree() + 4);
    const auto ring = [&](double r) {
        double acc = 0.0;
        for (std::size_t j = 0; j < M; ++j)
            acc += std::norm(p(z + std::polar(r, 2.0 * std::numbers::pi *
                                                     static_cast<double>(j) /
                                                     static_cast<double>(M))));
        return r * acc * (2.0 * std::numbers::pi / static_cast<double>(M));
    };
    const QuadResult q = integrate_adaptive(ring, 0.0, rho, 1e-12);
    if (!q.converged) throw std::runtime_error("pointwise_meanvalue_check: quadrature failed");

    MeanValueReport rep;
    rep.lhs = std::norm(p(z));
    rep.rhs = q.value * 4.0 / (std::numbers::pi * (1.0 - std::abs(z)) * (1.0 - std::abs(z)));
    rep.ratio = rep.rhs > 0.0 ? rep.lhs / rep.rhs : (rep.lhs == 0.0 ? 0.0 : 1e308);
    rep.holds = rep.ratio <= 1.0 + 1e-8;
    return rep;
}

} // namespace jpdom
