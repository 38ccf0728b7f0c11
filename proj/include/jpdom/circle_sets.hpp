#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "jpdom/majorants.hpp"

namespace jpdom {

/* Closed subsets of the unit circle, represented through their complement: a
 * list of open gap arcs. Angles are radians; a gap is stored as {start, end}
 * with start in [0, 2*pi), end > start, and end - start <= 2*pi. A gap whose
 * end exceeds 2*pi wraps through zero. Canonicalization sorts gaps by start
 * and merges gaps with overlapping interiors; gaps that merely touch at an
 * endpoint stay distinct, because the shared endpoint belongs to the set. */
struct Gap {
    double start = 0.0;
    double end = 0.0;
    std::size_t stage = 0;  // construction round that produced this gap, 0 if direct

    double length() const { return end - start; }
};

class ArcSet {
public:
    ArcSet() = default;
    explicit ArcSet(std::vector<Gap> gaps);

    const std::vector<Gap>& gaps() const { return gaps_; }
    double measure() const;            // 2*pi minus total gap length
    double max_arc_length() const;     // longest maximal arc of the set itself
    bool contains(double theta) const; // point membership, endpoints count as inside

    const std::vector<std::string>& construction_log() const { return log_; }
    void log_line(std::string line) { log_.push_back(std::move(line)); }

private:
    std::vector<Gap> gaps_;
    std::vector<std::string> log_;

    void canonicalize();
};

/* Sum of h(|l|) over the complementary gaps l. The per-stage vector splits the
 * same sum by the construction round recorded on each gap. */
struct CarlesonReport {
    double total = 0.0;
    std::vector<double> per_stage;
};

double carleson_sum(const ArcSet& E, const RegularMajorant& h);
CarlesonReport carleson_sum_by_stage(const ArcSet& E, const RegularMajorant& h);

/* Cantor-type construction: starting from the full circle, round k removes a
 * centered gap of length min(h^{-1}(4^{-k}), budget * 4^{-(k+1)}) from every
 * surviving arc, where budget = 2*pi - target_measure. The schedule guarantees
 * measure(E) >= target_measure and carleson_sum(E, h) <= 2. Rounds whose gap
 * would not fit inside the surviving arcs are skipped with a logged warning.
 * After K rounds the 2^K stage intervals all have equal length measure/2^K
 * <= 2*pi*2^{-K}; the two flanking the base point 0 are never separated by a
 * gap, so max_arc_length of the result is measure * 2^{1-K}. depth counts
 * rounds and must be <= 24. */
ArcSet build_cantor_set(const RegularMajorant& h, std::size_t depth, double target_measure);

/* Refine the complement so no gap is longer than max_gap: a gap of length g >
 * max_gap is cut into ceil(g / max_gap) equal pieces separated by points that
 * join the set. Gaps of length exactly max_gap are left alone. */
ArcSet split_long_gaps(const ArcSet& E, double max_gap);

/* Gap-wise integral test: sum over gaps l of the exact integral of h(t)/t
 * over (0, |l|), accumulated in dyadic shells (2^{-k-1} |l|, 2^{-k} |l|].
 * Divergence is declared when twenty consecutive shells each contribute at
 * least 0.99 of the previous one; the running value at that point is reported
 * together with the flag. The scan stops once a shell contributes less than
 * 1e-13, or after 200 shells. */
struct KhrushchevReport {
    double value = 0.0;
    bool divergent = false;
    std::size_t shells_used = 0;
};

KhrushchevReport khrushchev_sum(const ArcSet& E, const RegularMajorant& h);

} // namespace jpdom
