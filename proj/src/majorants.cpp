#include "jpdom/majorants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace jpdom {

RegularMajorant::RegularMajorant(std::vector<double> breakpoints, std::vector<double> values)
    : bx_(std::move(breakpoints)), by_(std::move(values)) {
    if (bx_.empty() || bx_.size() != by_.size())
        throw std::invalid_argument("majorant: breakpoints and values must be nonempty and equal-sized");
    double prev = 0.0;
    for (std::size_t i = 0; i < bx_.size(); ++i) {
        if (!(bx_[i] > prev))
            throw std::invalid_argument("majorant: breakpoints must be strictly increasing and > 0");
        if (bx_[i] > 1.0)
            throw std::invalid_argument("majorant: breakpoints must lie in (0, 1]");
        if (!(by_[i] >= 0.0) || !std::isfinite(by_[i]))
            throw std::invalid_argument("majorant: values must be finite and nonnegative");
        prev = bx_[i];
    }
}

std::size_t RegularMajorant::piece_index(double x) const {
    auto it = std::upper_bound(bx_.begin(), bx_.end(), x);
    if (it == bx_.begin()) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(it - bx_.begin()) - 1;
}

double RegularMajorant::extrapolation_slope() const {
    if (bx_.size() == 1) return by_[0] / bx_[0];
    return (by_[1] - by_[0]) / (bx_[1] - bx_[0]);
}

double RegularMajorant::extrapolation_intercept() const {
    if (bx_.size() == 1) return 0.0;
    return by_[0] - extrapolation_slope() * bx_[0];
}

double RegularMajorant::operator()(double x) const {
    if (x >= bx_.back()) return by_.back();
    if (x < bx_.front())
        return std::max(0.0, extrapolation_intercept() + extrapolation_slope() * x);
    const std::size_t i = piece_index(x);
    const double t = (x - bx_[i]) / (bx_[i + 1] - bx_[i]);
    return by_[i] + t * (by_[i + 1] - by_[i]);
}

namespace {

// integral of (s*t + d)/t over [a, b] = s*(b-a) + d*log(b/a)
inline double ratio_piece_integral(double s, double d, double a, double b) {
    if (b <= a) return 0.0;
    return s * (b - a) + d * std::log(b / a);
}

} // namespace

double RegularMajorant::integral_ratio(double a, double b) const {
    if (!(a > 0.0) || !(b >= a))
        throw std::invalid_argument("integral_ratio: need 0 < a <= b");
    if (a == b) return 0.0;
    double total = 0.0;

    // left extension, clamped at its zero crossing when the intercept is negative
    if (a < bx_.front()) {
        const double hi = std::min(b, bx_.front());
        double s = extrapolation_slope(), d = extrapolation_intercept();
        double lo = a;
        if (d < 0.0) {
            const double xz = -d / s;  // s > 0 whenever d < 0 and values are nonnegative
            if (xz > lo) lo = std::min(xz, hi);
        }
        total += ratio_piece_integral(s, d, lo, hi);
    }
    // interior pieces
    for (std::size_t i = 0; i + 1 < bx_.size(); ++i) {
        const double lo = std::max(a, bx_[i]), hi = std::min(b, bx_[i + 1]);
        if (hi <= lo) continue;
        const double s = (by_[i + 1] - by_[i]) / (bx_[i + 1] - bx_[i]);
        const double d = by_[i] - s * bx_[i];
        total += ratio_piece_integral(s, d, lo, hi);
    }
    // constant tail
    if (b > bx_.back())
        total += ratio_piece_integral(0.0, by_.back(), std::max(a, bx_.back()), b);
    return total;
}

double RegularMajorant::inverse_below(double v, double hi) const {
    // keep the search inside the increasing range: cap at the last argmax
    std::size_t imax = 0;
    for (std::size_t i = 1; i < by_.size(); ++i)
        if (by_[i] >= by_[imax]) imax = i;
    hi = std::min(hi, bx_[imax]);
    if ((*this)(hi) <= v) return hi;
    double lo = 0.0;
    if ((*this)(0.0) > v) return 0.0;
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if ((*this)(mid) <= v)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

double eval_lambda_h(const RegularMajorant& h, double r) {
    if (!(r >= 0.0) || r >= 1.0)
        throw std::domain_error("eval_lambda_h: radius must lie in [0, 1)");
    const double s = 1.0 - r;
    return std::exp(h(s) / s);
}

RegularityReport check_regularity(const RegularMajorant& h, std::size_t grid_size) {
    if (grid_size < 2) throw std::invalid_argument("check_regularity: grid_size must be >= 2");
    const auto& bx = h.breakpoints();
    std::vector<double> grid(bx);
    const double lo = bx.front(), hi = bx.back();
    for (std::size_t i = 0; i < grid_size; ++i)
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid_size - 1));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    RegularityReport rep{true, true, 0.0};
    double prev_x = grid[0], prev_y = h(grid[0]), prev_ratio = prev_y / prev_x;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double x = grid[i], y = h(x), ratio = y / x;
        const double d_incr = prev_y - y;                 // > 0 breaks "h increasing"
        const double d_ratio = ratio - prev_ratio;        // > 0 breaks "h(x)/x decreasing"
        if (d_incr > 1e-12 * std::max(1.0, std::abs(prev_y))) rep.increasing = false;
        if (d_ratio > 1e-12 * std::max(1.0, std::abs(prev_ratio))) rep.ratio_decreasing = false;
        rep.max_violation = std::max({rep.max_violation, d_incr, d_ratio});
        prev_x = x; prev_y = y; prev_ratio = ratio;
    }
    (void)prev_x;
    return rep;
}

RegularMajorant least_concave_majorant(const std::vector<double>& xs,
                                       const std::vector<double>& ys) {
    if (xs.empty() || xs.size() != ys.size())
        throw std::invalid_argument("least_concave_majorant: empty or mismatched samples");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] > 0.0) || (i > 0 && !(xs[i] > xs[i - 1])))
            throw std::invalid_argument("least_concave_majorant: abscissae must be strictly increasing and > 0 "
                                        "(the origin point is added internally)");
        if (!(ys[i] >= 0.0))
            throw std::invalid_argument("least_concave_majorant: values must be nonnegative");
    }
    // upper hull, scanning left to right with (0,0) prepended
    std::vector<double> hx{0.0}, hy{0.0};
    auto cross = [&](std::size_t a, std::size_t b, double cx, double cy) {
        return (hx[b] - hx[a]) * (cy - hy[a]) - (hy[b] - hy[a]) * (cx - hx[a]);
    };
    for (std::size_t i = 0; i < xs.size(); ++i) {
        while (hx.size() >= 2 && cross(hx.size() - 2, hx.size() - 1, xs[i], ys[i]) > 0.0) {
            hx.pop_back();
            hy.pop_back();
        }
        hx.push_back(xs[i]);
        hy.push_back(ys[i]);
    }
    hx.erase(hx.begin());
    hy.erase(hy.begin());
    // When the origin edge is steeper than the first interior edge, the erased
    // (0,0) vertex carried real information; a midpoint vertex keeps the
    // table's secant extension on that edge.
    if (hx.size() >= 2) {
        const double s01 = (hy[1] - hy[0]) / (hx[1] - hx[0]);
        if (hy[0] - s01 * hx[0] > 1e-12 * hy[0]) {
            hx.insert(hx.begin(), 0.5 * hx[0]);
            hy.insert(hy.begin(), 0.5 * hy[0]);
        }
    }
    return RegularMajorant(std::move(hx), std::move(hy));
}

PositiveSequence::PositiveSequence(std::vector<double> terms)
    : rule_(Rule::explicit_terms), terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("sequence: empty term list");
    for (double t : terms_)
        if (!(t > 0.0) || !std::isfinite(t))
            throw std::invalid_argument("sequence: terms must be positive and finite");
}

PositiveSequence::PositiveSequence(Rule rule) : rule_(rule) {
    if (rule == Rule::explicit_terms)
        throw std::invalid_argument("sequence: explicit rule requires terms");
}

PositiveSequence PositiveSequence::from_rule_name(const std::string& name) {
    if (name == "one_over_n") return PositiveSequence(Rule::one_over_n);
    if (name == "one_over_log") return PositiveSequence(Rule::one_over_log);
    throw std::invalid_argument("sequence: unknown rule '" + name + "'");
}

std::string PositiveSequence::rule_name() const {
    switch (rule_) {
        case Rule::one_over_n: return "one_over_n";
        case Rule::one_over_log: return "one_over_log";
        default: return "explicit";
    }
}

double PositiveSequence::term(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("sequence: indices are 1-based");
    switch (rule_) {
        case Rule::one_over_n: return 1.0 / static_cast<double>(n);
        case Rule::one_over_log: return 1.0 / std::log(static_cast<double>(n) + 2.0);
        default:
            if (n > terms_.size())
                throw std::invalid_argument("sequence: index past the end of an explicit list");
            return terms_[n - 1];
    }
}

std::size_t PositiveSequence::max_index() const {
    return rule_ == Rule::explicit_terms ? terms_.size()
                                         : std::numeric_limits<std::size_t>::max();
}

bool PositiveSequence::null_check(double eps, std::size_t horizon) const {
    if (horizon == 0) throw std::invalid_argument("null_check: horizon must be >= 1");
    if (rule_ != Rule::explicit_terms) return term(horizon) < eps;  // both rules are nonincreasing
    double env = 0.0;
    for (std::size_t n = std::min(horizon, terms_.size()); n <= terms_.size(); ++n)
        env = std::max(env, terms_[n - 1]);
    return env < eps;
}

PositiveSequence regularize_sequence(const PositiveSequence& c, std::size_t horizon,
                                     std::size_t lookahead) {
    if (horizon == 0) throw std::invalid_argument("regularize_sequence: horizon must be >= 1");
    std::size_t extent = horizon;
    if (c.max_index() == std::numeric_limits<std::size_t>::max())
        extent = horizon + lookahead;
    else if (c.max_index() < horizon)
        throw std::invalid_argument("regularize_sequence: explicit sequence shorter than horizon");
    else
        extent = c.max_index();  // finite tail maximum over everything stored

    std::vector<double> terms(extent);
    for (std::size_t n = 1; n <= extent; ++n) terms[n - 1] = c.term(n);
    std::vector<double> suffix(extent + 1, 0.0);
    for (std::size_t n = extent; n >= 1; --n) {
        suffix[n - 1] = std::max(terms[n - 1], suffix[n]);
        if (n == 1) break;
    }

    std::vector<double> out(horizon);
    out[0] = suffix[0];
    for (std::size_t n = 1; n < horizon; ++n) {
        const double shrink = std::sqrt(static_cast<double>(n) / static_cast<double>(n + 1));
        out[n] = std::max(suffix[n], shrink * out[n - 1]);  // suffix[n] = sup_{m >= n+1} c_m
    }
    return PositiveSequence(std::move(out));
}

RegularMajorant h_from_sequence(const PositiveSequence& c_tilde, std::size_t horizon,
                                bool concavify) {
    if (horizon == 0) throw std::invalid_argument("h_from_sequence: horizon must be >= 1");
    if (c_tilde.max_index() < horizon + 1)
        throw std::invalid_argument("h_from_sequence: sequence must be defined up to horizon + 1");
    std::vector<double> t(horizon + 1);
    for (std::size_t n = 1; n <= horizon + 1; ++n) {
        t[n - 1] = c_tilde.term(n);
        if (n > 1 && t[n - 1] > t[n - 2])
            throw std::invalid_argument("h_from_sequence: sequence must be nonincreasing (regularize first)");
    }
    if (!(t[0] < 1.0))
        throw std::invalid_argument("h_from_sequence: leading term must be < 1");

    std::vector<double> b(horizon + 2);  // b[n] = c~_n / sqrt(n), 1-based
    for (std::size_t n = 1; n <= horizon + 1; ++n)
        b[n] = t[n - 1] / std::sqrt(static_cast<double>(n));

    std::vector<double> px, py;
    px.reserve(2 * horizon);
    py.reserve(2 * horizon);
    for (std::size_t n = horizon; n >= 1; --n) {
        const double v = t[n - 1] * t[n - 1];
        const double ramp_hi = std::min(b[n + 1] * (1.0 + 1e-9), 0.5 * (b[n + 1] + b[n]));
        if (px.empty() || ramp_hi > px.back()) {
            px.push_back(ramp_hi);
            py.push_back(v);
        }
        if (b[n] > px.back()) {
            px.push_back(b[n]);
            py.push_back(v);
        }
        if (n == 1) break;
    }
    if (concavify) return least_concave_majorant(px, py);
    return RegularMajorant(std::move(px), std::move(py));
}

namespace {

struct PieceCandidate {
    double value = std::numeric_limits<double>::infinity();
    double argmin = 0.0;
};

// minimum of f(x) = n*x + s + d/x over [lo, hi]
inline PieceCandidate minimize_piece(double n, double s, double d, double lo, double hi) {
    PieceCandidate best;
    auto consider = [&](double x) {
        const double fx = n * x + s + d / x;
        if (fx < best.value || (fx == best.value && x < best.argmin)) {
            best.value = fx;
            best.argmin = x;
        }
    };
    consider(lo);
    consider(hi);
    if (d > 0.0) {
        const double xs = std::sqrt(d / n);
        if (xs > lo && xs < hi) consider(xs);
    }
    return best;
}

} // namespace

LegendreResult legendre_inf(std::size_t n, const RegularMajorant& h) {
    if (n == 0) throw std::invalid_argument("legendre_inf: n must be >= 1");
    constexpr double x_floor = 1e-12;
    const double nd = static_cast<double>(n);
    const auto& bx = h.breakpoints();
    const auto& by = h.values();

    LegendreResult res;
    res.value = std::numeric_limits<double>::infinity();
    auto take = [&](const PieceCandidate& c) {
        if (c.value < res.value || (c.value == res.value && c.argmin < res.argmin)) {
            res.value = c.value;
            res.argmin = c.argmin;
        }
    };

    // left extension down to the search floor, split at the clamp's zero crossing
    {
        const double hi = std::min(1.0, bx.front());
        if (hi > x_floor) {
            const double s = h.extrapolation_slope(), d = h.extrapolation_intercept();
            if (d < 0.0) {
                const double xz = std::clamp(-d / s, x_floor, hi);
                if (xz > x_floor) take(minimize_piece(nd, 0.0, 0.0, x_floor, xz));  // h clamped to 0
                if (hi > xz) take(minimize_piece(nd, s, d, xz, hi));
            } else {
                take(minimize_piece(nd, s, d, x_floor, hi));
            }
        }
    }
    for (std::size_t i = 0; i + 1 < bx.size(); ++i) {
        const double lo = std::max(x_floor, bx[i]), hi = std::min(1.0, bx[i + 1]);
        if (hi <= lo) continue;
        const double s = (by[i + 1] - by[i]) / (bx[i + 1] - bx[i]);
        const double d = by[i] - s * bx[i];
        take(minimize_piece(nd, s, d, lo, hi));
    }
    if (bx.back() < 1.0)
        take(minimize_piece(nd, 0.0, by.back(), std::max(x_floor, bx.back()), 1.0));

    res.boundary_infimum = res.argmin <= x_floor * (1.0 + 1e-12);
    return res;
}

namespace {

std::vector<double> geometric_grid(double x_lo, double x_hi) {
    std::vector<double> g;
    g.reserve(210000);
    const double dense_lo = 1e-9;
    for (double x = x_lo; x < std::min(dense_lo, x_hi); x *= 1.0512710963760239)  // exp(0.05)
        g.push_back(x);
    for (double x = std::max(x_lo, dense_lo); x < x_hi; x *= 1.0001000050001667)  // exp(1e-4)
        g.push_back(x);
    g.push_back(x_hi);
    return g;
}

RegularMajorant tabulate(double x_lo, double x_hi, double (*f)(double)) {
    std::vector<double> xs = geometric_grid(x_lo, x_hi), ys(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = f(xs[i]);
    return RegularMajorant(std::move(xs), std::move(ys));
}

} // namespace

RegularMajorant constant_majorant(double v) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument("constant_majorant: value must be finite and nonnegative");
    return RegularMajorant({1e-12, 1.0}, {v, v});
}

RegularMajorant make_majorant(const std::string& name) {
    if (name.rfind("const:", 0) == 0) return constant_majorant(std::stod(name.substr(6)));
    if (name == "sqrt") return tabulate(1e-30, 1.0, +[](double x) { return std::sqrt(x); });
    if (name == "identity" || name == "x")
        return tabulate(1e-30, 1.0, +[](double x) { return x; });
    if (name == "xlog")
        return tabulate(1e-30, 1.0, +[](double x) { return x * std::log(1.0 / x); });
    if (name == "one_over_log")
        return tabulate(1e-30, 0.99, +[](double x) { return 1.0 / std::log(1.0 / x); });
    throw std::invalid_argument("make_majorant: unknown majorant '" + name + "'");
}

namespace {

inline double xlog_plus(double x) {
    return x < 1.0 ? x * std::log(1.0 / x) : 0.0;
}

// Interior maximum of x*log(1/x) - (s*x + d) on (lo, hi); the difference is
// concave in x, so this is the only candidate besides the endpoints.
inline void push_critical(double s, double lo, double hi, std::vector<double>& cand) {
    const double xc = std::exp(-1.0 - s);
    if (xc > lo && xc < hi) cand.push_back(xc);
}

} // namespace

std::pair<RegularMajorant, bool> ensure_dominates_xlog(const RegularMajorant& h) {
    const auto& bx = h.breakpoints();
    const auto& by = h.values();

    // Candidate worst points of h - x*log(1/x): the breakpoints, x = 1, and
    // one interior critical point per linear piece (including both
    // extensions). Checking only these is exact for a piecewise-linear h.
    std::vector<double> cand(bx.begin(), bx.end());
    cand.push_back(1.0);
    const double s0 = h.extrapolation_slope();
    const double d0 = h.extrapolation_intercept();
    if (d0 < 0.0 && s0 > 0.0)
        cand.push_back(0.5 * std::min(-d0 / s0, bx.front()));  // inside the clamped-to-zero stretch
    push_critical(s0, 0.0, bx.front(), cand);
    for (std::size_t i = 0; i + 1 < bx.size(); ++i)
        push_critical((by[i + 1] - by[i]) / (bx[i + 1] - bx[i]), bx[i], bx[i + 1], cand);
    push_critical(0.0, bx.back(), 1.0, cand);

    bool triggered = false;
    for (double x : cand) {
        if (!(x > 0.0) || x > 1.0) continue;
        if (h(x) < xlog_plus(x) * (1.0 - 1e-12)) {
            triggered = true;
            break;
        }
    }
    if (!triggered) return {h, false};

    // Rebuild as h + x*log(1/x) on the table refined with a geometric grid.
    // Each value gets the neighbouring pieces' chord sag allowance
    // (|(x*log(1/x))''| <= 1/x on a piece starting at x), so the
    // piecewise-linear result dominates the exact sum from the first
    // breakpoint up to 1; a secant extension cannot beat x*log(1/x) all the
    // way to 0, but the crossover sits below every table this library builds.
    const double floor_x = std::min(bx.front(), 1e-18);
    const int grid_n = 3001;
    const double lf = std::log(floor_x);
    const double step = -lf / (grid_n - 1);
    std::vector<double> nx;
    nx.reserve(bx.size() + grid_n + 1);
    std::size_t io = 0;
    for (int k = 0; k < grid_n; ++k) {
        const double g = k + 1 == grid_n ? 1.0 : std::exp(lf * (1.0 - static_cast<double>(k) / (grid_n - 1)));
        const double guard = 0.3 * g * step;
        while (io < bx.size() && bx[io] <= g + guard) nx.push_back(bx[io++]);
        if (!nx.empty() && g - nx.back() < guard) continue;  // too close to a table point
        nx.push_back(g);
    }
    while (io < bx.size()) nx.push_back(bx[io++]);

    std::vector<double> sag(nx.size(), 0.0);
    for (std::size_t i = 0; i + 1 < nx.size(); ++i) {
        const double w = nx[i + 1] - nx[i];
        const double s = w * w / (8.0 * nx[i]);
        sag[i] = std::max(sag[i], s);
        sag[i + 1] = std::max(sag[i + 1], s);
    }
    std::vector<double> ny(nx.size());
    for (std::size_t i = 0; i < nx.size(); ++i)
        ny[i] = h(nx[i]) + xlog_plus(nx[i]) + sag[i];
    return {RegularMajorant(std::move(nx), std::move(ny)), true};
}

} // namespace jpdom
