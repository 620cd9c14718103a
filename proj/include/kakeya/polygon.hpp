#pragma once

// Exact 2-D convex intersection areas plus the closed-form slab
// intersection formula and the linearized pairwise upper bound used by
// the union-measure certificates.

#include "kakeya/geometry.hpp"

#include <vector>

namespace kakeya {

/// Convex polygon with counterclockwise vertex order; may be empty.
class ConvexPolygon {
public:
    ConvexPolygon() = default;
    explicit ConvexPolygon(std::vector<Vec2> vertices);

    static ConvexPolygon from_tube(const Tube& t);

    const std::vector<Vec2>& vertices() const { return vertices_; }
    bool empty() const { return vertices_.empty(); }
    std::size_t size() const { return vertices_.size(); }

    bool contains(const Vec2& p, double tol = kBoundaryTol) const;

private:
    std::vector<Vec2> vertices_;
};

/// Shoelace area; 0 for the empty polygon.
double polygon_area(const ConvexPolygon& p);

/// subject intersect clip_region via sequential half-plane clipping.
/// Nearly coincident intersection vertices are snapped at 1e-12 so
/// float edge crossings cannot produce sliver polygons.
ConvexPolygon clip(const ConvexPolygon& subject, const ConvexPolygon& clip_region);

/// Cross-sectional area eps^2 / sin(d) of the intersection of two
/// infinite eps-slabs whose normals are d apart. Throws NearParallelError
/// for d <= 1e-9 or d >= pi - 1e-9 (intersection unbounded).
double slab_intersection_area(double eps, double d);

/// Exact area of the intersection of two 2-D tubes.
double tube_pair_intersection_area_2d(const Tube& a, const Tube& b);

/// Linearized upper bound (pi/2) eps^{2-alpha} / |i-j| on the pairwise
/// tube intersection for the equi-angular schedule. Valid (and checked to
/// dominate eps^2 / sin(|i-j| eps^alpha)) for angles in (0, pi/2]; the
/// exact 1/sin form is the sharper choice beyond that range.
double pairwise_bound(long long i, long long j, double eps, double alpha);

} // namespace kakeya
