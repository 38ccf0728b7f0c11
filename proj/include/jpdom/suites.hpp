#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "jpdom/harmonic_measure.hpp"
#include "jpdom/spectral_moments.hpp"

namespace jpdom {

/* A verification run: pass/fail, a versioned JSON report (schema_version,
 * suite name, config echo including the seed, rows, summary), and the same
 * table as CSV. Reports serialize deterministically, so identical configs
 * produce byte-identical artifacts. */
struct SuiteReport {
    std::string name;
    bool pass = false;
    nlohmann::json report;
    std::string csv;

    std::string report_string() const;  // canonical serialization of `report`
};

// Exact-vs-bound sweep of the slit-arc measure over the full (L, t) grid,
// with monotonicity checks and pinned reference values.
SuiteReport suite_lemma_arc();

// Monte Carlo slit-arc measure vs the closed form, one (L, t) pair.
SuiteReport suite_arc_mc(double L, double t, const WosConfig& cfg);

// Joukowski round trips over random points for several scales.
SuiteReport suite_joukowski(std::size_t samples_per_scale, std::uint64_t seed);

// Cayley distortion ratio on random admissible pairs, plus endpoint cases.
SuiteReport suite_distortion(std::size_t samples, std::uint64_t seed);

// Sequence pipeline vs the Legendre-type infimum, with dense grid-search
// cross-checks on a few rows.
SuiteReport suite_legendre(const PositiveSequence& c, std::size_t horizon,
                           std::uint64_t seed);

// Moment table for the same pipeline, with the row-by-row implication check.
SuiteReport suite_moments(const PositiveSequence& c, std::size_t horizon,
                          double tol = 1e-6);

// Per-gap boundary functional against 8*pi*h(|l|) on one set.
SuiteReport suite_proposition(const ArcSet& E, const RegularMajorant& h,
                              const WosConfig& cfg, double max_gap = 0.1);

// The same functional across construction depths; totals must grow with
// strictly decreasing increments.
SuiteReport suite_proposition_series(const RegularMajorant& h,
                                     std::size_t depth_lo, std::size_t depth_hi,
                                     double target_measure, const WosConfig& cfg,
                                     double max_gap = 0.1);

// Domain-growth monotonicity on the largest gaps of E.
SuiteReport suite_subordination(const ArcSet& E, const WosConfig& cfg,
                                std::size_t n_gaps = 3, double max_gap = 0.1);

// Sub-mean-value property of log|p| on the domain over E, plus the gap-free
// disk equality oracle.
SuiteReport suite_subharmonic(const ArcSet& E, const WosConfig& cfg,
                              std::size_t n_polynomials = 20,
                              std::size_t max_degree = 20, double max_gap = 0.1);

// Build a set and audit it: measure floor, gap-sum budget, arc-length cap.
struct ConstructResult {
    ArcSet set;
    SuiteReport report;
};

ConstructResult suite_construct_audit(const RegularMajorant& h, std::size_t depth,
                                      double target_measure,
                                      const std::string& h_label);

} // namespace jpdom
