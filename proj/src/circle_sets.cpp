#include "jpdom/circle_sets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jpdom {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

ArcSet::ArcSet(std::vector<Gap> gaps) : gaps_(std::move(gaps)) { canonicalize(); }

void ArcSet::canonicalize() {
    for (Gap& g : gaps_) {
        if (!std::isfinite(g.start) || !std::isfinite(g.end) || !(g.end > g.start) ||
            g.end - g.start > two_pi)
            throw std::invalid_argument("arcset: gap must satisfy 0 < end - start <= 2*pi");
        double s = std::fmod(g.start, two_pi);
        if (s < 0.0) s += two_pi;
        g.end += s - g.start;
        g.start = s;
    }
    std::sort(gaps_.begin(), gaps_.end(),
              [](const Gap& x, const Gap& y) { return x.start < y.start; });
    std::vector<Gap> merged;
    for (const Gap& g : gaps_) {
        if (!merged.empty() && g.start < merged.back().end)  // interior overlap only
            merged.back().end = std::max(merged.back().end, g.end);
        else
            merged.push_back(g);
    }
    // a gap running past 2*pi covers [0, end - 2*pi); fold overlapping leaders in
    while (merged.size() > 1 && merged.back().end - two_pi > merged.front().start) {
        Gap lead = merged.front();
        merged.erase(merged.begin());
        merged.back().end = std::max(merged.back().end, lead.end + two_pi);
    }
    if (!merged.empty() && merged.back().end - merged.back().start > two_pi)
        merged.back().end = merged.back().start + two_pi;
    gaps_ = std::move(merged);
}

double ArcSet::measure() const {
    double removed = 0.0;
    for (const Gap& g : gaps_) removed += g.length();
    return std::max(0.0, two_pi - removed);
}

double ArcSet::max_arc_length() const {
    if (gaps_.empty()) return two_pi;
    double longest = 0.0;
    for (std::size_t i = 0; i + 1 < gaps_.size(); ++i)
        longest = std::max(longest, gaps_[i + 1].start - gaps_[i].end);
    longest = std::max(longest, gaps_.front().start + two_pi - gaps_.back().end);
    return std::max(0.0, longest);
}

bool ArcSet::contains(double theta) const {
    double t = std::fmod(theta, two_pi);
    if (t < 0.0) t += two_pi;
    for (const Gap& g : gaps_) {
        if (t > g.start && t < g.end) return false;
        if (t + two_pi > g.start && t + two_pi < g.end) return false;  // wrapping gap
    }
    return true;
}

double carleson_sum(const ArcSet& E, const RegularMajorant& h) {
    double sum = 0.0;
    for (const Gap& g : E.gaps()) sum += h(g.length());
    return sum;
}

CarlesonReport carleson_sum_by_stage(const ArcSet& E, const RegularMajorant& h) {
    CarlesonReport rep;
    std::size_t max_stage = 0;
    for (const Gap& g : E.gaps()) max_stage = std::max(max_stage, g.stage);
    rep.per_stage.assign(max_stage + 1, 0.0);
    for (const Gap& g : E.gaps()) {
        const double v = h(g.length());
        rep.per_stage[g.stage] += v;
        rep.total += v;
    }
    return rep;
}

ArcSet build_cantor_set(const RegularMajorant& h, std::size_t depth, double target_measure) {
    if (depth > 24) throw std::invalid_argument("build_cantor_set: depth must be <= 24");
    if (!(target_measure >= 0.0) || target_measure >= two_pi)
        throw std::invalid_argument("build_cantor_set: target measure must lie in [0, 2*pi)");
    const double budget = two_pi - target_measure;

    struct Arc {
        double start, len;
    };
    std::vector<Arc> arcs{{0.0, two_pi}};
    std::vector<Gap> gaps;
    std::vector<std::string> log;

    double threshold = 1.0;  // 4^{-k}
    for (std::size_t k = 0; k < depth; ++k, threshold *= 0.25) {
        const double cap = budget * threshold * 0.25;  // budget * 4^{-(k+1)}
        const double eps = std::min(h.inverse_below(threshold), cap);
        const double arc_len = arcs.front().len;  // all arcs of a round share one length
        if (!(eps > 0.0)) {
            log.push_back("warning: round " + std::to_string(k) +
                          " skipped: no gap length satisfies the h-threshold");
            continue;
        }
        if (eps >= arc_len) {
            log.push_back("warning: round " + std::to_string(k) +
                          " skipped: gap length " + std::to_string(eps) +
                          " does not fit in surviving arcs of length " + std::to_string(arc_len));
            continue;
        }
        std::vector<Arc> next;
        next.reserve(2 * arcs.size());
        for (const Arc& a : arcs) {
            const double child = (a.len - eps) * 0.5;
            gaps.push_back({a.start + child, a.start + child + eps, k + 1});
            next.push_back({a.start, child});
            next.push_back({a.start + child + eps, child});
        }
        log.push_back("round " + std::to_string(k) + ": removed " +
                      std::to_string(arcs.size()) + " gaps of length " + std::to_string(eps) +
                      " (h = " + std::to_string(h(eps)) + ", threshold " +
                      std::to_string(threshold) + ")");
        arcs = std::move(next);
    }

    ArcSet E(std::move(gaps));
    for (std::string& line : log) E.log_line(std::move(line));
    return E;
}

ArcSet split_long_gaps(const ArcSet& E, double max_gap) {
    if (!(max_gap > 0.0)) throw std::invalid_argument("split_long_gaps: max_gap must be > 0");
    std::vector<Gap> out;
    for (const Gap& g : E.gaps()) {
        const double len = g.length();
        if (len <= max_gap) {
            out.push_back(g);
            continue;
        }
        const auto parts = static_cast<std::size_t>(std::ceil(len / max_gap));
        for (std::size_t j = 0; j < parts; ++j) {
            const double lo = g.start + len * static_cast<double>(j) / static_cast<double>(parts);
            const double hi = j + 1 == parts
                                  ? g.end
                                  : g.start + len * static_cast<double>(j + 1) / static_cast<double>(parts);
            out.push_back({lo, hi, g.stage});
        }
    }
    ArcSet result(std::move(out));
    for (const std::string& line : E.construction_log()) result.log_line(line);
    return result;
}

KhrushchevReport khrushchev_sum(const ArcSet& E, const RegularMajorant& h) {
    if (E.gaps().empty()) throw std::invalid_argument("khrushchev_sum: set has no gaps");
    KhrushchevReport rep;
    for (const Gap& g : E.gaps()) {
        double hi = g.length();
        double prev = -1.0;
        std::size_t consec = 0;
        for (std::size_t k = 0; k < 200; ++k) {
            const double lo = 0.5 * hi;
            const double shell = h.integral_ratio(lo, hi);
            rep.value += shell;
            ++rep.shells_used;
            if (prev >= 0.0 && shell >= 0.99 * prev) {
                if (++consec >= 20) {
                    rep.divergent = true;
                    return rep;
                }
            } else {
                consec = 0;
            }
            if (shell < 1e-13) break;
            prev = shell;
            hi = lo;
        }
    }
    return rep;
}

} // namespace jpdom
