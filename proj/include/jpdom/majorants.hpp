#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace jpdom {

/* Piecewise-linear majorant h on (0, 1].
 *
 * Representation: strictly increasing breakpoints in (0, 1] with nonnegative
 * values, linear interpolation between them. Right of the last breakpoint the
 * function continues as a constant. Left of the first breakpoint it continues
 * along the line through the first two breakpoints (through the origin when a
 * single breakpoint exists), clamped at 0 so values never go negative. The
 * intended limit h(0+) = 0 is a semantic assertion of the class of functions
 * represented; the clamped extension keeps every evaluation finite and total.
 *
 * The constructor validates shape only (ordering, range, nonnegativity).
 * Monotonicity of h and of h(x)/x are diagnostics, see check_regularity. */
class RegularMajorant {
public:
    RegularMajorant(std::vector<double> breakpoints, std::vector<double> values);

    double operator()(double x) const;

    const std::vector<double>& breakpoints() const { return bx_; }
    const std::vector<double>& values() const { return by_; }

    // Left extension h(x) = slope*x + intercept (before clamping at 0).
    double extrapolation_slope() const;
    double extrapolation_intercept() const;

    // Exact integral of h(t)/t over [a, b] with 0 < a <= b: every linear piece
    // h(t) = s*t + d contributes s*(b-a) + d*log(b/a).
    double integral_ratio(double a, double b) const;

    /* Largest x in [0, hi] with h(x) <= v, located by monotone bisection and
     * restricted to [0, argmax h] so the result stays in the increasing range;
     * the returned x always satisfies h(x) <= v (0 when no abscissa does). */
    double inverse_below(double v, double hi = 1.0) const;

private:
    std::vector<double> bx_, by_;
    // piece index for x: largest i with bx_[i] <= x, or npos when x < bx_[0]
    std::size_t piece_index(double x) const;
};

// exp( h(1-r) / (1-r) ), the radial growth gauge attached to h.
// r must lie in [0, 1); r >= 1 (or r < 0) raises std::domain_error.
double eval_lambda_h(const RegularMajorant& h, double r);

struct RegularityReport {
    bool increasing = false;
    bool ratio_decreasing = false;
    double max_violation = 0.0;  // largest monotonicity defect over the probe grid
};

/* Checks that h is nondecreasing and h(x)/x is nonincreasing on a uniform grid
 * over the breakpoint hull, augmented by the breakpoints themselves.
 * Defects up to 1e-12 count as compliant. grid_size must be >= 2. */
RegularityReport check_regularity(const RegularMajorant& h, std::size_t grid_size = 4096);

/* Least concave majorant of the sample points (x strictly increasing, y >= 0):
 * the upper hull of the points with (0, 0) prepended, returned as a
 * RegularMajorant. When the origin edge is a genuine hull edge, a midpoint
 * vertex is emitted so the table's secant extension reproduces it. Output
 * dominates every input point and has nonincreasing slopes. Throws
 * std::invalid_argument on empty or malformed input. */
RegularMajorant least_concave_majorant(const std::vector<double>& xs,
                                       const std::vector<double>& ys);

/* Positive sequence c_1, c_2, ..., either a stored finite list or a named
 * closed-form rule extendable to any index. */
class PositiveSequence {
public:
    enum class Rule { explicit_terms, one_over_n, one_over_log };

    explicit PositiveSequence(std::vector<double> terms);        // explicit list
    explicit PositiveSequence(Rule rule);                        // generator rule
    static PositiveSequence from_rule_name(const std::string& name);

    double term(std::size_t n) const;  // 1-based; throws past the end of an explicit list
    std::size_t max_index() const;     // last defined index (SIZE_MAX for generators)
    Rule rule() const { return rule_; }
    const std::vector<double>& stored_terms() const { return terms_; }
    std::string rule_name() const;

    /* Null-sequence verification: the monotone envelope sup_{m>=n} c_m
     * (computed over [n, horizon]) is nonincreasing by construction; returns
     * true when the envelope at the horizon is below eps. */
    bool null_check(double eps, std::size_t horizon) const;

private:
    Rule rule_;
    std::vector<double> terms_;
};

/* Monotone replacement c~ with c~_1 = c_1 and
 *   c~_{n+1} = max( sup_{m >= n+1} c_m , sqrt(n/(n+1)) * c~_n ).
 * The tail supremum is taken over indices up to horizon + lookahead for
 * generator-backed sequences and up to the stored length for explicit lists
 * (finite-tail truncation; exact whenever the input is nonincreasing).
 * Output guarantees, index by index and exactly in floating point:
 *   c~_n >= c_n,   c~_{n+1} <= c~_n,   c~_{n+1} >= fl(sqrt(n/(n+1))) * c~_n. */
PositiveSequence regularize_sequence(const PositiveSequence& c, std::size_t horizon,
                                     std::size_t lookahead = 1024);

/* The step majorant attached to a replaced sequence:
 *   h(x) = c~_n^2 on ( c~_{n+1}/sqrt(n+1), c~_n/sqrt(n) ],   h = c~_1^2 right of c~_1,
 * realized piecewise-linearly with jump ramps of relative width 1e-9 placed just
 * right of each breakpoint, so values at the breakpoints themselves are exact.
 * Requires c~_1 < 1 (std::invalid_argument otherwise) and terms up to horizon+1.
 * When concavify is set the least concave majorant of the ramp function is
 * returned instead. */
RegularMajorant h_from_sequence(const PositiveSequence& c_tilde, std::size_t horizon,
                                bool concavify);

struct LegendreResult {
    double value = 0.0;
    double argmin = 0.0;
    bool boundary_infimum = false;  // infimum ran into the left search floor
};

/* inf over x in (0,1) of f(x) = n*x + h(x)/x. On each linear piece of h the
 * objective has the closed form a*x + b + d/x and is minimized exactly; the
 * global minimum over pieces and endpoints is returned, smallest argmin on
 * ties. The search floor is x = 1e-12; a minimum pinned there reports
 * boundary_infimum (degenerate h vanishing near 0). */
LegendreResult legendre_inf(std::size_t n, const RegularMajorant& h);

/* Named majorants materialized as dense piecewise-linear tables:
 *   "sqrt"          sqrt(x)
 *   "identity"      x
 *   "xlog"          x * log(1/x)
 *   "one_over_log"  1 / log(1/x), tabulated up to 0.99
 *   "const:<v>"     the constant v
 * Abscissae follow a geometric grid with relative step 1e-4 on [1e-9, 1] and
 * ~5e-2 on [1e-30, 1e-9), keeping interpolation error in h(x)/x near 1e-9
 * while the table stays invertible far below any Cantor gap schedule. */
RegularMajorant make_majorant(const std::string& name);
RegularMajorant constant_majorant(double v);

/* h + x*log(1/x) replacement: applied (second member true) when h fails to
 * dominate x*log(1/x) anywhere on (0, 1]; the check is exact for the
 * piecewise-linear table (breakpoints plus each piece's interior critical
 * point). The replacement samples h + x*log(1/x) on the table refined with a
 * geometric grid and pads each value with the neighbouring pieces' chord sag,
 * so it dominates both h and x*log(1/x) from its first breakpoint up to 1.
 * Otherwise h is returned unchanged. */
std::pair<RegularMajorant, bool> ensure_dominates_xlog(const RegularMajorant& h);

} // namespace jpdom
