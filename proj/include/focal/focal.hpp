#ifndef FOCAL_FOCAL_HPP
#define FOCAL_FOCAL_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "focal/lattice.hpp"

namespace focal {

// Perpendicular bisector of 0 and a nonzero lattice vector lambda:
// the solution set of 2<v,lambda> = <lambda,lambda>.
struct BPlane {
    LatticePoint lambda;
    Vec coeff;  // 2 G lambda
    Rat rhs;    // <lambda,lambda>

    static BPlane of(const Lattice& lat, const LatticePoint& lambda);

    // Value of the affine functional 2<x,lambda> - <lambda,lambda> at x;
    // zero exactly on the plane, negative on the origin side.
    Rat eval(const Vec& x) const;
};

// Exact classification of a tangent vector: mu counts incident B-planes, iota
// counts B-planes crossing the open segment from the origin, brillouin is the
// closed-ball index, sigma_index = mu + 1, nu is the dimension of the span of
// the incident lattice vectors.  zone holds the Brillouin zone index when the
// point is interior (mu = 0) and is empty on zone boundaries.
struct FocalClass {
    long mu = 0;
    long iota = 0;
    long brillouin = 1;
    long sigma_index = 1;
    long nu = 0;
    std::optional<long> zone;

    bool boundary() const { return !zone.has_value(); }
    bool operator==(const FocalClass&) const = default;
};

// Crossing parameters of B-planes along the ray t -> t u, grouped by value:
// t = <lambda,lambda> / (2 <u,lambda>) over lambda with <u,lambda> > 0.
struct RadialProfile {
    Vec direction;
    struct Crossing {
        Rat t;
        std::vector<LatticePoint> entering;
    };
    std::vector<Crossing> crossings;

    // Zone index on the open interval between crossing i and crossing i+1
    // (i = -1 addresses the interval before the first crossing).
    long zone_after(int i) const;
};

std::pair<long, std::vector<BPlane>> mu(const Lattice& lat, const Vec& v,
                                        const Budget& budget = Budget());

// The two derivations of iota, which must agree: a bisector crosses the open
// segment iff its lattice vector is strictly closer to v than the origin is.
// iota() computes both and verifies the identity.
long iota_via_crossings(const Lattice& lat, const Vec& v, const Budget& budget = Budget());
long iota_via_strict_ball(const Lattice& lat, const Vec& v, const Budget& budget = Budget());
long iota(const Lattice& lat, const Vec& v, const Budget& budget = Budget());

long brillouin_index(const Lattice& lat, const Vec& v, const Budget& budget = Budget());

FocalClass classify(const Lattice& lat, const Vec& v, const Budget& budget = Budget());

RadialProfile radial_profile(const Lattice& lat, const Vec& u, int k_max,
                             const Budget& budget = Budget());

// Inner/outer squared-radius estimates for zone k over the sampled rays: the
// min and max of dist2(0, t u) with t running over the crossing parameters
// bounding the zone-k interval of each ray (rays that skip zone k contribute
// nothing).  Zone 1 starts at the origin, so only its outer crossing counts.
std::pair<Rat, Rat> zone_annulus(const Lattice& lat, int k, std::span<const Vec> directions,
                                 const Budget& budget = Budget());

// All zones 1..k_max from one profile pass per direction; a zone no sampled
// ray meets yields an empty slot.
std::vector<std::optional<std::pair<Rat, Rat>>> zone_annuli(const Lattice& lat, int k_max,
                                                            std::span<const Vec> directions,
                                                            const Budget& budget = Budget());

enum class Separation { yes, no, incident };
Separation separates(const BPlane& plane, const Vec& v, const Vec& w);

// Affine intersection of the given planes, or nullopt when inconsistent.
// codim equals the rank of the span of the lattice vectors.
std::optional<AffineFlat> flat_intersection(std::span<const BPlane> planes, const GramForm& g);

// Deterministic direction families for sampling.
std::vector<Vec> farey_directions(int min_count);                   // rank 2, upper half plane
std::vector<Vec> random_directions(int rank, int count, unsigned long seed);

}  // namespace focal

#endif
