#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

namespace jpdom {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // accumulated error estimate (sum of |K15-G7| per interval)
    bool converged = false;
    std::size_t evaluations = 0;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1]
inline constexpr double gk_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <class F>
inline void gk15(const F& f, double a, double b, double& kronrod, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double gauss = gk_wg[3] * fc;
    kronrod = gk_wk[7] * fc;
    for (int i = 0; i < 7; ++i) {
        const double x = h * gk_nodes[i];
        const double fs = f(c - x) + f(c + x);
        kronrod += gk_wk[i] * fs;
        if (i % 2 == 1) gauss += gk_wg[i / 2] * fs;
    }
    kronrod *= h;
    gauss *= h;
    err = std::abs(kronrod - gauss);
}

} // namespace detail

/* Adaptive Gauss-Kronrod integration of f over [a, b]. Splits the interval
 * with the largest error estimate until the accumulated estimate drops below
 * max(abs_tol, rel_tol * |integral|) or the interval budget is exhausted. */
template <class F>
QuadResult integrate_adaptive(const F& f, double a, double b, double rel_tol = 1e-10,
                              double abs_tol = 0.0, std::size_t max_intervals = 4000) {
    struct Piece {
        double a, b, value, error;
        bool operator<(const Piece& o) const { return error < o.error; }
    };
    QuadResult res;
    if (a == b) { res.converged = true; return res; }

    std::priority_queue<Piece> queue;
    double v0, e0;
    detail::gk15(f, a, b, v0, e0);
    res.evaluations = 15;
    queue.push({a, b, v0, e0});
    double total_v = v0, total_e = e0;

    while (queue.size() < max_intervals) {
        if (total_e <= std::max(abs_tol, rel_tol * std::abs(total_v))) break;
        Piece worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) { queue.push(worst); break; }  // interval at ulp scale
        double vl, el, vr, er;
        detail::gk15(f, worst.a, mid, vl, el);
        detail::gk15(f, mid, worst.b, vr, er);
        res.evaluations += 30;
        total_v += vl + vr - worst.value;
        total_e += el + er - worst.error;
        queue.push({worst.a, mid, vl, el});
        queue.push({mid, worst.b, vr, er});
    }
    res.value = total_v;
    res.error = total_e;
    res.converged = total_e <= std::max(abs_tol, rel_tol * std::abs(total_v));
    return res;
}

} // namespace jpdom
