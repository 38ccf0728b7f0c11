#pragma once

#include <cstddef>
#include <vector>

#include "jpdom/harmonic_measure.hpp"
#include "jpdom/majorants.hpp"

namespace jpdom {

/* Radial weight G(x) = exp(-h(1-x)/(1-x)) on [0,1]. G(1) is the limit value:
 * zero whenever h(s)/s grows without bound as s -> 0 (equivalently the left
 * extension of h has positive intercept), else exp(-slope). The bounded case
 * is flagged: the decay machinery downstream assumes an unbounded ratio. */
class WeightG {
public:
    explicit WeightG(RegularMajorant h);

    double operator()(double x) const;
    double value_at_one() const { return at_one_; }
    bool bounded_ratio() const { return bounded_; }
    const RegularMajorant& majorant() const { return h_; }

private:
    RegularMajorant h_;
    double at_one_ = 0.0;
    bool bounded_ = false;
};

/* Weighted moment: integral of x^n G(x) over [0,1], by adaptive quadrature on
 * geometric panels accumulating toward x = 1, with a certified error bound.
 * Throws std::runtime_error (reporting the achieved bound) when the requested
 * relative tolerance cannot be met. */
struct MomentValue {
    double value = 0.0;
    double error_bound = 0.0;
};

MomentValue moment(const RegularMajorant& h, std::size_t n, double tol = 1e-6);

struct MomentRow {
    std::size_t n = 0;
    double moment = 0.0;
    double quad_error = 0.0;
    double reference = 0.0;  // exp(-c~_n sqrt(n))
    double legendre = 0.0;   // inf over x of n x + h(x)/x, for the implication check
    bool pass = false;       // moment <= reference
    bool asserted = false;   // in the asserted window with quad_error < 1% of reference
};

struct MomentTable {
    std::vector<MomentRow> rows;
    std::size_t first_pass_n = 0;  // N0; 0 when inconclusive
    bool inconclusive = true;
    double sequence_scale = 1.0;   // rescale applied when the regularized lead term is >= 1
    bool xlog_applied = false;     // h was replaced by h + x log(1/x)
};

/* Full pipeline on a null sequence: regularize, build the concavified h, then
 * moments on the log-spaced grid {1, 2, 4, ...} up to horizon. Reports the
 * first n from which moment <= exp(-c~_n sqrt(n)) holds through the horizon;
 * rows in that window additionally demand quadrature error below 1% of the
 * reference bound. Sequences whose regularization starts at or above 1 are
 * scaled down to (1 - 1e-9) first; the scale is echoed and the reference
 * bounds use the scaled sequence. When the built h drops below x log(1/x) at
 * a breakpoint it is replaced by h + x log(1/x) (flagged in the table); the
 * replacement only enlarges h, so every asserted bound remains valid. */
MomentTable moment_bound_check(const PositiveSequence& c, std::size_t horizon,
                               double tol = 1e-6);

/* Norm in the weighted Bergman space with radial weight G: by monomial
 * orthogonality, ||p||^2 = 2 pi sum_k |a_k|^2 moment(2k+1). Returns the norm
 * (square root). */
double bergman_norm(const Polynomial& p, const RegularMajorant& h, double tol = 1e-6);

// Direct two-dimensional quadrature of the same norm, for cross-validation.
double bergman_norm_quadrature2d(const Polynomial& p, const RegularMajorant& h);

/* Sub-mean-value estimate for |p|^2: |p(z)|^2 against its normalized area
 * integral over the disk of radius (1-|z|)/2 centered at z, evaluated by
 * quadrature exact for the polynomial degree. Constants attain equality. */
struct MeanValueReport {
    double lhs = 0.0;   // |p(z)|^2
    double rhs = 0.0;   // 4/(pi (1-|z|)^2) * area integral
    double ratio = 0.0; // lhs / rhs (0 when rhs = 0)
    bool holds = false; // ratio <= 1 + 1e-8
};

MeanValueReport pointwise_meanvalue_check(const Polynomial& p, cplx z,
                                          std::size_t quad_samples = 64);

} // namespace jpdom
