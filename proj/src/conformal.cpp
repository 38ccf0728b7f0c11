#include "jpdom/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace jpdom {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_signed(double angle) {  // into (-pi, pi]
    double a = std::fmod(angle, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    if (a > std::numbers::pi) a -= two_pi;
    return a;
}

double wrap_positive(double angle) {  // into [0, 2*pi)
    double a = std::fmod(angle, two_pi);
    if (a < 0.0) a += two_pi;
    return a;
}
} // namespace

JoukowskiMap::JoukowskiMap(double L) : L_(L) {
    if (!(L > 0.0) || !(L <= 0.5))
        throw std::invalid_argument("joukowski: scale must lie in (0, 0.5]");
}

cplx JoukowskiMap::forward(cplx z) const {
    if (z == cplx(0.0, 0.0)) throw std::domain_error("joukowski: pole at z = 0");
    return L_ / (1.0 - L_ * L_) * (L_ / z + z / L_);
}

JoukowskiMap::InverseResult JoukowskiMap::inverse(cplx w) const {
    if (w.imag() < 0.0)
        throw std::domain_error("joukowski inverse: argument must lie in the closed upper half-plane");
    // roots of z^2 - W z + L^2 with W = w (1 - L^2); the stable root first
    const cplx W = w * (1.0 - L_ * L_);
    const cplx disc = W * W - 4.0 * L_ * L_;
    cplx sq = std::sqrt(disc);
    if (W.real() * sq.real() + W.imag() * sq.imag() < 0.0) sq = -sq;
    const cplx big = 0.5 * (W + sq);
    InverseResult res;
    // the map carries the domain boundary (slit rim and real axis) exactly
    // onto the real line, so a real argument marks a boundary preimage
    res.boundary = w.imag() == 0.0;
    res.z = std::abs(big) >= L_ ? big : L_ * L_ / big;
    return res;
}

cplx JoukowskiMap::companion(cplx z) const {
    if (z == cplx(0.0, 0.0)) throw std::domain_error("joukowski companion: pole at z = 0");
    return L_ * L_ / z;
}

cplx cayley(cplx z) {
    if (z == cplx(-1.0, 0.0)) throw std::domain_error("cayley: pole at z = -1");
    return cplx(0.0, 1.0) * (1.0 - z) / (1.0 + z);
}

cplx cayley_inverse(cplx w) {
    if (w == cplx(0.0, -1.0)) throw std::domain_error("cayley inverse: pole at w = -i");
    return (cplx(0.0, 1.0) - w) / (cplx(0.0, 1.0) + w);
}

double distortion_ratio(cplx z1, cplx z2) {
    if (z1 == z2) throw std::invalid_argument("distortion_ratio: points must be distinct");
    auto admissible = [](cplx z) { return std::abs(z) <= 1.0 + 1e-12 && z.real() >= -1e-12; };
    if (!admissible(z1) || !admissible(z2))
        throw std::invalid_argument("distortion_ratio: points must lie in the closed right half-disk");
    return std::abs(cayley(z1) - cayley(z2)) / std::abs(z1 - z2);
}

cplx GeodesicArc::endpoint_a() const { return std::polar(1.0, a); }
cplx GeodesicArc::endpoint_b() const { return std::polar(1.0, b); }

cplx GeodesicArc::point(double u) const {
    const double phi_a = std::arg(endpoint_a() - center);
    const double phi_m = std::arg(-center);  // midpoint of the in-disk portion
    const double phi_b = std::arg(endpoint_b() - center);
    const double sweep = wrap_signed(phi_m - phi_a) + wrap_signed(phi_b - phi_m);
    return center + std::polar(radius, phi_a + u * sweep);
}

double GeodesicArc::parameter_of(cplx p) const {
    const double phi_a = std::arg(endpoint_a() - center);
    const double phi_m = std::arg(-center);
    const double phi_b = std::arg(endpoint_b() - center);
    const double sweep = wrap_signed(phi_m - phi_a) + wrap_signed(phi_b - phi_m);
    const double offset = wrap_signed(std::arg(p - center) - phi_a);
    return std::clamp(offset / sweep, 0.0, 1.0);
}

GeodesicArc geodesic_for_gap(double a, double b) {
    if (!(b > a)) throw std::invalid_argument("geodesic_for_gap: gap is degenerate");
    if (!(b - a < std::numbers::pi))
        throw std::invalid_argument("geodesic_for_gap: gap must be shorter than pi");
    const double theta = 0.5 * (b - a);
    GeodesicArc g;
    g.a = a;
    g.b = b;
    g.center = std::polar(1.0 / std::cos(theta), 0.5 * (a + b));
    g.radius = std::tan(theta);
    return g;
}

double gap_halfplane_scale(double gap_length) {
    if (!(gap_length > 0.0) || !(gap_length < two_pi))
        throw std::invalid_argument("gap_halfplane_scale: length must lie in (0, 2*pi)");
    return std::tan(0.25 * gap_length);
}

PrivalovDomain::PrivalovDomain(ArcSet set, double max_gap)
    : set_(std::move(set)), max_gap_(max_gap) {
    if (!(max_gap > 0.0) || !(max_gap < std::numbers::pi))
        throw std::invalid_argument("domain: max_gap must lie in (0, pi)");
    geo_.reserve(set_.gaps().size());
    for (const Gap& g : set_.gaps()) {
        if (g.length() > max_gap * (1.0 + 1e-12))
            throw std::invalid_argument("domain: gap longer than max_gap; split the set first");
        geo_.push_back(geodesic_for_gap(g.start, g.end));
    }
}

MembershipResult PrivalovDomain::membership(cplx z) const {
    if (std::abs(z) >= 1.0) return {Membership::outside_disk, 0};
    for (std::size_t i = 0; i < geo_.size(); ++i)
        if (std::abs(z - geo_[i].center) <= geo_[i].radius) return {Membership::in_cap, i};
    return {Membership::inside, 0};
}

namespace {

// distance from z (outside the cap circle) to the closed cap: the circle
// distance when the radial projection stays inside the disk, else the nearer
// corner; never larger than the true distance
double cap_distance(const GeodesicArc& g, cplx z, double dist_center) {
    const cplx p = g.center + (g.radius / dist_center) * (z - g.center);
    if (std::norm(p) < 1.0) return dist_center - g.radius;
    return std::min(std::abs(z - g.endpoint_a()), std::abs(z - g.endpoint_b()));
}

} // namespace

double PrivalovDomain::distance_to_boundary(cplx z) const {
    if (membership(z).kind != Membership::inside)
        throw std::invalid_argument("distance_to_boundary: point is not inside the domain");
    double d = 1.0 - std::abs(z);
    for (const GeodesicArc& g : geo_)
        d = std::min(d, cap_distance(g, z, std::abs(z - g.center)));
    return d;
}

double PrivalovDomain::signed_distance(cplx z) const {
    double d = 1.0 - std::abs(z);
    for (const GeodesicArc& g : geo_) {
        const double dc = std::abs(z - g.center);
        d = std::min(d, dc <= g.radius ? dc - g.radius : cap_distance(g, z, dc));
    }
    return d;
}

BoundaryHit PrivalovDomain::classify_boundary_hit(cplx z, double shell) const {
    (void)shell;
    const double d_circle = 1.0 - std::abs(z);
    double d_best = std::numeric_limits<double>::infinity();
    std::size_t best = 0;
    for (std::size_t i = 0; i < geo_.size(); ++i) {
        const double dc = std::abs(z - geo_[i].center);
        const double d = dc <= geo_[i].radius ? dc - geo_[i].radius
                                              : cap_distance(geo_[i], z, dc);
        if (d < d_best) {
            d_best = d;
            best = i;
        }
    }
    BoundaryHit hit;
    if (d_circle <= d_best + 1e-15) {  // ties (corners) resolve to the set
        hit.kind = HitKind::on_E;
        hit.angle = wrap_positive(std::arg(z));
        hit.point = std::polar(1.0, hit.angle);
        return hit;
    }
    const GeodesicArc& g = geo_[best];
    const cplx p = g.center + (g.radius / std::abs(z - g.center)) * (z - g.center);
    if (std::norm(p) >= 1.0) {  // cannot happen for a strict geodesic win; stay total
        hit.kind = HitKind::on_E;
        hit.angle = wrap_positive(std::arg(z));
        hit.point = std::polar(1.0, hit.angle);
        return hit;
    }
    hit.kind = HitKind::on_geodesic;
    hit.gap_index = best;
    hit.point = p;
    hit.angle = wrap_positive(std::arg(p));
    return hit;
}

PrivalovDomain omega_disk_realization(double L) {
    if (!(L > 0.0) || !(L <= 0.5))
        throw std::invalid_argument("omega_disk_realization: scale must lie in (0, 0.5]");
    const double half = 2.0 * std::atan(L);  // endpoints map to +-L under the Cayley map
    ArcSet E({Gap{two_pi - half, two_pi + half, 0}});
    return PrivalovDomain(std::move(E), 2.0 * half * (1.0 + 1e-12));
}

} // namespace jpdom
