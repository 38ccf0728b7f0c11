#pragma once

#include <string>

#include "jpdom/conformal.hpp"

namespace jpdom {

struct MomentTable;

// Unit circle with the set's arcs, its geodesics, and shaded caps.
std::string render_domain_svg(const PrivalovDomain& D);

// The slit half-plane picture: disk realization on the left, half-plane image
// with the marked slit sub-arc and its image interval on the right.
std::string render_mapping_svg(double L, double t);

// Log-log decay plot: -log(moment)/sqrt(n) against the sequence values.
std::string render_moment_plot_svg(const MomentTable& table);

} // namespace jpdom
