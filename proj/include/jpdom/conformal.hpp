#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "jpdom/circle_sets.hpp"

namespace jpdom {

using cplx = std::complex<double>;

/* Scaled Joukowski map w = L/(1-L^2) * (L/z + z/L), a conformal bijection
 * from the slit region {|z| > L, Im z > 0} onto the upper half-plane. The
 * scale is capped at 0.5; the constructions using it assume small slits. */
class JoukowskiMap {
public:
    explicit JoukowskiMap(double L);
    double scale() const { return L_; }

    bool in_domain(cplx z) const { return std::abs(z) > L_ && z.imag() > 0.0; }
    cplx forward(cplx z) const;

    struct InverseResult {
        cplx z;
        bool boundary = false;  // w was real, so the preimage lies on the domain boundary
    };
    InverseResult inverse(cplx w) const;

    cplx companion(cplx z) const;  // the involution z -> L^2/z exchanging the two roots

private:
    double L_;
};

// Cayley transform between the unit disk and the upper half-plane.
cplx cayley(cplx z);          // i(1-z)/(1+z), pole at z = -1
cplx cayley_inverse(cplx w);  // (i-w)/(i+w), pole at w = -i

/* |cayley(z1) - cayley(z2)| / |z1 - z2| for distinct points of the closed
 * right half-disk; always lands in [1/2, 2]. */
double distortion_ratio(cplx z1, cplx z2);

/* Circular arc through e^{ia} and e^{ib} meeting the unit circle at right
 * angles: center e^{i(a+b)/2}/cos(theta), radius tan(theta), theta=(b-a)/2.
 * point(u) walks the portion inside the disk from the a-endpoint (u=0) to the
 * b-endpoint (u=1); parameter_of inverts it for points on the arc. */
struct GeodesicArc {
    double a = 0.0;
    double b = 0.0;
    cplx center;
    double radius = 0.0;

    cplx endpoint_a() const;
    cplx endpoint_b() const;
    cplx point(double u) const;
    double parameter_of(cplx p) const;
};

GeodesicArc geodesic_for_gap(double a, double b);

/* Half-plane scale of a gap after rotating its midpoint to angle zero and
 * applying the Cayley map: the gap endpoints land at +-tan(length/4), and the
 * gap's geodesic becomes the semicircle of that radius. */
double gap_halfplane_scale(double gap_length);

enum class Membership { inside, in_cap, outside_disk };

struct MembershipResult {
    Membership kind = Membership::inside;
    std::size_t gap_index = 0;  // owning gap when kind == in_cap
};

enum class HitKind { on_E, on_geodesic };

struct BoundaryHit {
    HitKind kind = HitKind::on_E;
    double angle = 0.0;         // angular coordinate of the hit, in [0, 2*pi)
    std::size_t gap_index = 0;  // owning gap for geodesic hits
    cplx point;                 // the boundary point itself (projected, not the shell point)
};

/* The unit disk minus the closed lens-shaped caps between each complementary
 * gap of the set and the gap's geodesic. Each cap stays inside the angular
 * sector of its own gap (the bounding rays are tangent to the cap circle), so
 * disjoint gaps yield disjoint caps and the boundary is a Jordan curve: the
 * set itself plus the geodesic arcs. */
class PrivalovDomain {
public:
    explicit PrivalovDomain(ArcSet set, double max_gap = 0.1);

    const ArcSet& set() const { return set_; }
    const std::vector<GeodesicArc>& geodesics() const { return geo_; }
    double max_gap() const { return max_gap_; }

    MembershipResult membership(cplx z) const;

    /* Conservative distance from an interior point to the boundary: exact for
     * the circle and for caps whose radial projection lands on the geodesic,
     * clamped to the nearer gap endpoint otherwise (an underestimate, which
     * walk-on-spheres tolerates). Throws std::invalid_argument unless z is
     * inside. */
    double distance_to_boundary(cplx z) const;

    /* Like distance_to_boundary but total: nonpositive when z is on or past
     * the boundary (used by the sampler to classify overshoot immediately). */
    double signed_distance(cplx z) const;

    /* Nearest-component classification for a point within `shell` of the
     * boundary. Distance ties within 1e-15 resolve to on_E, so corner points
     * (gap endpoints) classify deterministically. Geodesic hits carry the
     * exact projection of z onto the arc. */
    BoundaryHit classify_boundary_hit(cplx z, double shell) const;

private:
    ArcSet set_;
    std::vector<GeodesicArc> geo_;
    double max_gap_ = 0.1;
};

/* Disk realization of the slit half-plane of scale L: the single-gap domain
 * whose gap, centered at angle zero with half-length 2*atan(L), maps under the
 * Cayley transform onto the half-disk slit [-L, L]; the origin maps to i. */
PrivalovDomain omega_disk_realization(double L);

} // namespace jpdom
