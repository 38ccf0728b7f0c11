#include "jpdom/harmonic_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "jpdom/rng.hpp"

namespace jpdom {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void validate_config(const WosConfig& cfg) {
    if (!(cfg.eps_shell > 0.0)) throw std::invalid_argument("wos: eps_shell must be > 0");
    if (cfg.samples == 0) throw std::invalid_argument("wos: samples must be >= 1");
    if (cfg.max_steps == 0) throw std::invalid_argument("wos: max_steps must be >= 1");
}

void check_abort_fraction(std::size_t aborted, std::size_t samples) {
    if (static_cast<double>(aborted) > 0.001 * static_cast<double>(samples))
        throw std::runtime_error("wos: " + std::to_string(aborted) + " of " +
                                 std::to_string(samples) +
                                 " walks hit the step cap (> 0.1%); raise max_steps");
}

struct MeanAccumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::size_t n = 0;

    void add(double v) {
        sum += v;
        sum_sq += v * v;
        ++n;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
    double std_error() const {
        if (n < 2) return 0.0;
        const double m = mean();
        const double var = std::max(0.0, sum_sq / static_cast<double>(n) - m * m);
        return std::sqrt(var / static_cast<double>(n));
    }
};

} // namespace

WalkResult wos_walk(const PrivalovDomain& D, cplx z0, const WosConfig& cfg,
                    std::uint64_t walk_index) {
    WalkRng rng(cfg.seed, walk_index);
    cplx z = z0;
    for (std::size_t step = 0; step < cfg.max_steps; ++step) {
        const double d = D.signed_distance(z);
        if (d <= cfg.eps_shell)
            return {D.classify_boundary_hit(z, cfg.eps_shell), step, false};
        z += std::polar(d, two_pi * rng.uniform());
    }
    return {BoundaryHit{}, cfg.max_steps, true};
}

std::vector<MeasureEstimate> wos_estimate(const PrivalovDomain& D, cplx z0,
                                          const HitClassifier& component_of,
                                          std::size_t n_components,
                                          const WosConfig& cfg) {
    validate_config(cfg);
    if (n_components == 0) throw std::invalid_argument("wos: need at least one component");
    if (D.membership(z0).kind != Membership::inside ||
        !(D.distance_to_boundary(z0) > cfg.eps_shell))
        throw std::invalid_argument("wos: start point must be inside, beyond the shell");

    std::vector<std::size_t> counts(n_components, 0);
    std::size_t aborted = 0;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        const WalkResult walk = wos_walk(D, z0, cfg, i);
        if (walk.aborted) {
            ++aborted;
            continue;
        }
        const std::size_t c = component_of(walk.hit);
        if (c >= n_components) throw std::runtime_error("wos: classifier returned a bad component");
        ++counts[c];
    }
    check_abort_fraction(aborted, cfg.samples);
    const auto n_eff = static_cast<double>(cfg.samples - aborted);

    std::vector<MeasureEstimate> out(n_components);
    for (std::size_t c = 0; c < n_components; ++c) {
        MeasureEstimate& e = out[c];
        e.value = n_eff > 0.0 ? static_cast<double>(counts[c]) / n_eff : 0.0;
        e.std_error = n_eff > 0.0 ? std::sqrt(e.value * (1.0 - e.value) / n_eff) : 0.0;
        e.samples = cfg.samples;
        e.aborted = aborted;
        e.hits_by_component = counts;
    }
    return out;
}

double halfplane_measure(double a, double b) {
    if (!(a <= b)) throw std::invalid_argument("halfplane_measure: need a <= b");
    return (std::atan(b) - std::atan(a)) / std::numbers::pi;
}

namespace {
void validate_arc_args(double L, double t) {
    if (!(L > 0.0) || !(L <= 0.5))
        throw std::invalid_argument("arc measure: L must lie in (0, 0.5]");
    if (!(t > 0.0) || !(t <= 0.5 * std::numbers::pi + 1e-15))
        throw std::invalid_argument("arc measure: t must lie in (0, pi/2]");
}
} // namespace

double arc_measure_exact(double L, double t) {
    validate_arc_args(L, t);
    const double s = 2.0 * L / (1.0 - L * L);
    return (std::atan(s) - std::atan(s * std::cos(t))) / std::numbers::pi;
}

double arc_measure_bound(double L, double t) {
    validate_arc_args(L, t);
    return (1.0 - std::cos(t)) * 2.0 * L / (std::numbers::pi * (1.0 - L * L));
}

MeasureEstimate arc_measure_mc(double L, double t, const WosConfig& cfg) {
    validate_arc_args(L, t);
    const PrivalovDomain D = omega_disk_realization(L);
    const auto in_target = [t](const BoundaryHit& hit) -> std::size_t {
        if (hit.kind != HitKind::on_geodesic) return 1;
        const double s = std::arg(cayley(hit.point));  // the slit is |w| = L, arg in (0, pi)
        return s >= 0.0 && s <= t ? 0 : 1;
    };
    return wos_estimate(D, cplx(0.0, 0.0), in_target, 2, cfg)[0];
}

SubordinationReport subordination_check(const ArcSet& E, std::size_t gap_index,
                                        double u0, double u1, const WosConfig& cfg,
                                        double max_gap) {
    if (!(0.0 <= u0) || !(u0 <= u1) || !(u1 <= 1.0))
        throw std::invalid_argument("subordination_check: need 0 <= u0 <= u1 <= 1");
    const ArcSet split = split_long_gaps(E, max_gap);
    if (gap_index >= split.gaps().size())
        throw std::invalid_argument("subordination_check: gap index out of range");

    const PrivalovDomain multi(split, max_gap);
    const PrivalovDomain single(ArcSet({split.gaps()[gap_index]}), max_gap);

    const auto classifier = [u0, u1](const PrivalovDomain& D, std::size_t idx) {
        return [&D, idx, u0, u1](const BoundaryHit& hit) -> std::size_t {
            if (hit.kind != HitKind::on_geodesic || hit.gap_index != idx) return 1;
            const double u = D.geodesics()[idx].parameter_of(hit.point);
            return u >= u0 && u <= u1 ? 0 : 1;
        };
    };
    SubordinationReport rep;
    rep.multi = wos_estimate(multi, cplx(0.0, 0.0), classifier(multi, gap_index), 2, cfg)[0];
    rep.single = wos_estimate(single, cplx(0.0, 0.0), classifier(single, 0), 2, cfg)[0];
    rep.slack = rep.single.value + 3.0 * (rep.multi.std_error + rep.single.std_error) -
                rep.multi.value;
    rep.holds = rep.slack >= 0.0;
    return rep;
}

IntegrabilityReport integrability_functional(const ArcSet& E, const RegularMajorant& h,
                                             const WosConfig& cfg, double max_gap) {
    validate_config(cfg);
    const ArcSet split = split_long_gaps(E, max_gap);
    const PrivalovDomain D(split, max_gap);
    const std::size_t m = split.gaps().size();

    std::vector<MeanAccumulator> per_gap(m);
    std::vector<std::size_t> hits(m, 0);
    MeanAccumulator total;
    double comp_min = std::numeric_limits<double>::infinity();
    double comp_max = 0.0;
    std::size_t aborted = 0;

    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        const WalkResult walk = wos_walk(D, cplx(0.0, 0.0), cfg, i);
        if (walk.aborted) {
            ++aborted;
            continue;
        }
        double f = 0.0;
        std::size_t gap = m;
        if (walk.hit.kind == HitKind::on_geodesic) {
            gap = walk.hit.gap_index;
            const double r = std::abs(walk.hit.point);
            const double s = 1.0 - r * r;  // projected point is strictly inside the disk
            f = h(s) / s;
            const double denom = f;
            if (denom > 0.0) {
                const double ratio = (h(1.0 - r) / (1.0 - r)) / denom;
                comp_min = std::min(comp_min, ratio);
                comp_max = std::max(comp_max, ratio);
            }
            ++hits[gap];
        }
        for (std::size_t gidx = 0; gidx < m; ++gidx) per_gap[gidx].add(gidx == gap ? f : 0.0);
        total.add(f);
    }
    check_abort_fraction(aborted, cfg.samples);

    IntegrabilityReport rep;
    rep.samples = cfg.samples;
    rep.aborted = aborted;
    rep.per_gap.resize(m);
    rep.all_within_bound = true;
    for (std::size_t gidx = 0; gidx < m; ++gidx) {
        GapFunctional& row = rep.per_gap[gidx];
        row.gap_index = gidx;
        row.gap_length = split.gaps()[gidx].length();
        row.value = per_gap[gidx].mean();
        row.std_error = per_gap[gidx].std_error();
        row.bound = 8.0 * std::numbers::pi * h(row.gap_length);
        row.hits = hits[gidx];
        row.within_bound = row.value <= row.bound + 3.0 * row.std_error;
        rep.all_within_bound = rep.all_within_bound && row.within_bound;
        const double href = h(row.gap_length);
        if (href > 0.0)
            rep.empirical_constant = std::max(rep.empirical_constant, row.value / href);
    }
    rep.total = total.mean();
    rep.total_std_error = total.std_error();
    if (!std::isfinite(comp_min)) comp_min = comp_max = 0.0;  // no geodesic hits or h = 0
    rep.comparability_min = comp_min;
    rep.comparability_max = comp_max;
    return rep;
}

Polynomial::Polynomial(std::vector<cplx> coefficients) : coef_(std::move(coefficients)) {
    while (!coef_.empty() && coef_.back() == cplx(0.0, 0.0)) coef_.pop_back();
}

cplx Polynomial::operator()(cplx z) const {
    cplx acc(0.0, 0.0);
    for (std::size_t i = coef_.size(); i-- > 0;) acc = acc * z + coef_[i];
    return acc;
}

cplx Polynomial::derivative_at(cplx z) const {
    cplx acc(0.0, 0.0);
    for (std::size_t i = coef_.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * coef_[i];
    return acc;
}

SubharmonicityReport subharmonicity_check(const Polynomial& p, const ArcSet& E,
                                          const WosConfig& cfg, double max_gap) {
    if (p.is_zero())
        throw std::invalid_argument("subharmonicity_check: polynomial is identically zero");
    validate_config(cfg);

    SubharmonicityReport rep;
    const double p0 = std::abs(p(cplx(0.0, 0.0)));
    if (p0 == 0.0) {
        rep.trivial = true;
        rep.holds = true;
        rep.lhs = -std::numeric_limits<double>::infinity();
        return rep;
    }
    rep.lhs = std::log(p0);

    const ArcSet split = split_long_gaps(E, max_gap);
    const PrivalovDomain D(split, max_gap);
    MeanAccumulator acc;
    std::size_t aborted = 0;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
        const WalkResult walk = wos_walk(D, cplx(0.0, 0.0), cfg, i);
        if (walk.aborted) {
            ++aborted;
            continue;
        }
        cplx w = walk.hit.point;
        const double pw = std::abs(p(w));
        const double dpw = std::abs(p.derivative_at(w));
        if (pw == 0.0 || (dpw > 0.0 && pw / dpw < 1e-12)) {  // a root sits on the boundary here
            if (walk.hit.kind == HitKind::on_E) {
                w = std::polar(1.0, walk.hit.angle + 1e-9);
            } else {
                const GeodesicArc& g = D.geodesics()[walk.hit.gap_index];
                const double u = g.parameter_of(w);
                w = g.point(u <= 0.5 ? u + 1e-9 : u - 1e-9);
            }
            ++rep.perturbed_hits;
        }
        acc.add(std::log(std::abs(p(w))));
    }
    check_abort_fraction(aborted, cfg.samples);
    rep.estimate = acc.mean();
    rep.std_error = acc.std_error();
    rep.samples = cfg.samples;
    rep.aborted = aborted;
    rep.holds = rep.lhs <= rep.estimate + 3.0 * rep.std_error;
    return rep;
}

} // namespace jpdom
