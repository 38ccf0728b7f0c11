#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "jpdom/conformal.hpp"
#include "jpdom/majorants.hpp"

namespace jpdom {

struct WosConfig {
    double eps_shell = 1e-6;
    std::size_t max_steps = 100000;
    std::uint64_t seed = 0;
    std::size_t samples = 100000;
};

/* Monte Carlo estimate of a boundary-hit probability. Aborted walks (step cap
 * reached) are excluded from both numerator and denominator; estimates fail
 * loudly when more than 0.1% of walks abort. */
struct MeasureEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::size_t samples = 0;  // walks attempted
    std::size_t aborted = 0;
    std::vector<std::size_t> hits_by_component;
};

struct WalkResult {
    BoundaryHit hit;
    std::size_t steps = 0;
    bool aborted = false;
};

/* One walk-on-spheres trajectory from z0: jump to a uniform point of the
 * largest centered inscribed circle until within eps_shell of the boundary.
 * Deterministic in (cfg.seed, walk_index) regardless of scheduling. */
WalkResult wos_walk(const PrivalovDomain& D, cplx z0, const WosConfig& cfg,
                    std::uint64_t walk_index);

/* Harmonic measure of a boundary partition at z0. component_of maps a hit to
 * its component index (must be < n_components). Requires z0 strictly inside
 * with distance_to_boundary(z0) > eps_shell. */
using HitClassifier = std::function<std::size_t(const BoundaryHit&)>;

std::vector<MeasureEstimate> wos_estimate(const PrivalovDomain& D, cplx z0,
                                          const HitClassifier& component_of,
                                          std::size_t n_components,
                                          const WosConfig& cfg);

// Exact harmonic measure of (a, b) on the real line, seen from i in the upper
// half-plane: (arctan b - arctan a) / pi. Infinite endpoints are allowed.
double halfplane_measure(double a, double b);

/* Harmonic measure at i, in the upper half-plane slit by the half-disk of
 * radius L, of the slit subarc {L e^{is} : 0 <= s <= t}; exact value and the
 * closed-form upper bound (1 - cos t) * 2L / (pi (1 - L^2)). Requires
 * 0 < L <= 0.5 and 0 < t <= pi/2. */
double arc_measure_exact(double L, double t);
double arc_measure_bound(double L, double t);

/* Monte Carlo counterpart of arc_measure_exact: realizes the slit half-plane
 * in the disk (origin playing the role of i) and counts geodesic hits whose
 * Cayley image has argument in [0, t]. */
MeasureEstimate arc_measure_mc(double L, double t, const WosConfig& cfg);

/* Growth of harmonic measure under domain growth, tested on a geodesic
 * sub-arc B = {gamma_l(u) : u0 <= u <= u1} of gap `gap_index` of E: the
 * measure of B seen from 0 in the full multi-gap domain never exceeds its
 * measure in the single-gap domain, within joint 3-sigma noise. */
struct SubordinationReport {
    MeasureEstimate multi;    // omega(D_E, B, 0)
    MeasureEstimate single;   // omega(D_{l^c}, B, 0)
    double slack = 0.0;       // single + 3*(se_m + se_s) - multi
    bool holds = false;
};

SubordinationReport subordination_check(const ArcSet& E, std::size_t gap_index,
                                        double u0, double u1, const WosConfig& cfg,
                                        double max_gap = 0.1);

/* Boundary integral of h(1 - |z|^2) / (1 - |z|^2) against harmonic measure at
 * 0, restricted to the geodesic part of the boundary and grouped by gap. Each
 * geodesic hit is evaluated at its exact projection onto the arc. Per-gap
 * means are tested one-sidedly against 8*pi*h(|l|) at 3 sigma; the empirical
 * constant max(value / h(|l|)) and the observed range of the ratio
 * [h(1-r)/(1-r)] / [h(1-r^2)/(1-r^2)] over hits are reported alongside. */
struct GapFunctional {
    std::size_t gap_index = 0;
    double gap_length = 0.0;
    double value = 0.0;
    double std_error = 0.0;
    double bound = 0.0;  // 8*pi*h(|l|)
    std::size_t hits = 0;
    bool within_bound = false;
};

struct IntegrabilityReport {
    std::vector<GapFunctional> per_gap;
    double total = 0.0;
    double total_std_error = 0.0;
    double empirical_constant = 0.0;
    double comparability_min = 0.0;
    double comparability_max = 0.0;
    std::size_t samples = 0;
    std::size_t aborted = 0;
    bool all_within_bound = false;
};

IntegrabilityReport integrability_functional(const ArcSet& E, const RegularMajorant& h,
                                             const WosConfig& cfg, double max_gap = 0.1);

/* Analytic polynomial with complex coefficients, ascending powers. Trailing
 * zero coefficients are trimmed so the leading coefficient is nonzero unless
 * the polynomial is identically zero. */
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<cplx> coefficients);

    const std::vector<cplx>& coefficients() const { return coef_; }
    std::size_t degree() const { return coef_.empty() ? 0 : coef_.size() - 1; }
    bool is_zero() const { return coef_.empty(); }
    cplx operator()(cplx z) const;
    cplx derivative_at(cplx z) const;

private:
    std::vector<cplx> coef_;
};

/* Sub-mean-value test for log|p| at the origin of the domain built over E:
 * log|p(0)| <= mean of log|p| over boundary hits + 3 sigma. Hits closer than
 * a Newton step of 1e-12 to a root of p are nudged 1e-9 along the boundary;
 * the nudge count is reported. p(0) = 0 reports trivially true. */
struct SubharmonicityReport {
    double lhs = 0.0;       // log|p(0)|
    double estimate = 0.0;  // boundary average
    double std_error = 0.0;
    bool holds = false;
    bool trivial = false;   // p(0) = 0
    std::size_t perturbed_hits = 0;
    std::size_t samples = 0;
    std::size_t aborted = 0;
};

SubharmonicityReport subharmonicity_check(const Polynomial& p, const ArcSet& E,
                                          const WosConfig& cfg, double max_gap = 0.1);

} // namespace jpdom
