#pragma once

// Core geometric primitives: directions, unit segments, tubes (rectangular
// eps-thickenings), hyperplanes, page families and Grassmannian elements.
// All types are immutable after construction and all operations are pure,
// so everything is safe to share across threads.

#include "kakeya/errors.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace kakeya {

using Point = Eigen::VectorXd;
using Vec2 = Eigen::Vector2d;

inline constexpr double kUnitTol = 1e-12;      // orthonormality of stored frames
inline constexpr double kBoundaryTol = 1e-9;   // tubes are closed sets; membership uses <= this slack
inline constexpr int kMaxAmbientDim = 6;       // default cap; the lift may go up to 2*6-1

/// Unit vector in R^n. Renormalized on construction; a near-zero input
/// (norm < 1e-12) is rejected rather than silently producing NaNs.
class Direction {
public:
    explicit Direction(const Point& v);

    const Point& unit() const { return unit_; }
    int dim() const { return static_cast<int>(unit_.size()); }
    double dot(const Direction& other) const { return unit_.dot(other.unit_); }
    Direction negated() const;

private:
    Point unit_;
};

/// Angle in [0, pi] between two unit vectors.
double spherical_distance(const Direction& a, const Direction& b);

/// Unit-length (by default) line segment centred at `center` pointing in
/// `direction`.
class Segment {
public:
    Segment(Point center, Direction direction, double length = 1.0);

    const Point& center() const { return center_; }
    const Direction& direction() const { return direction_; }
    double length() const { return length_; }
    int dim() const { return static_cast<int>(center_.size()); }

    Point endpoint_a() const { return center_ - 0.5 * length_ * direction_.unit(); }
    Point endpoint_b() const { return center_ + 0.5 * length_ * direction_.unit(); }
    Point at(double t) const { return center_ + t * direction_.unit(); } // t in [-L/2, L/2]

    /// Euclidean distance from a point to this (closed) segment.
    double distance_to(const Point& p) const;

private:
    Point center_;
    Direction direction_;
    double length_;
};

/// Rectangular thickening of a segment. The box is
///   core + { sum_j t_j f_j : |t_j| <= half_extents[j] }
/// where f_0 is the designated thin axis (half extent eps/2 for spec
/// shapes). In 2-D this is the 1 x eps rectangle; in R^n the slab shape
/// has half extents {eps/2, 1/2, ..., 1/2} and the segment-neighbourhood
/// box used for book experiments has all normal half extents eps/2.
class Tube {
public:
    /// Frame is built automatically (deterministic orthonormal completion
    /// of the core direction); first frame vector is the thin axis.
    Tube(Segment core, double width);

    /// Explicit frame: `frame` columns must be pairwise orthonormal and
    /// orthogonal to the core direction within 1e-12. half_extents[0]
    /// belongs to frame column 0 (the thin axis).
    Tube(Segment core, double width, Eigen::MatrixXd frame, Eigen::VectorXd half_extents);

    /// 1^{n-1} x eps slab piece: thin axis gets eps/2, others 1/2.
    static Tube slab(Segment core, double width);
    static Tube slab(Segment core, double width, Eigen::MatrixXd frame);

    /// eps x ... x eps box around the segment (all normal half extents
    /// eps/2); inscribed model of the eps-neighbourhood of the core.
    static Tube segment_box(Segment core, double width);

    const Segment& core() const { return core_; }
    double width() const { return width_; }
    int dim() const { return core_.dim(); }
    const Eigen::MatrixXd& frame() const { return frame_; } // n x (n-1), column 0 = thin axis
    const Eigen::VectorXd& half_extents() const { return half_extents_; }
    Direction thin_axis() const { return Direction(frame_.col(0)); }

    double volume() const;

    /// Closed membership with boundary tolerance 1e-9.
    bool contains(const Point& p) const;

    /// Axis-aligned bounding box, rows = (min, max).
    std::pair<Point, Point> bounding_box() const;

    /// Corners of the box (2^n points).
    std::vector<Point> corners() const;

private:
    Segment core_;
    double width_;
    Eigen::MatrixXd frame_;
    Eigen::VectorXd half_extents_;
};

/// Vertices of the 1 x eps rectangle in counterclockwise order,
/// starting from center + (L/2) d - (eps/2) m with m = rot90(d).
std::array<Vec2, 4> tube_vertices_2d(const Tube& t);

/// Affine hyperplane {x : <x, normal> = offset} in R^n.
class Hyperplane {
public:
    Hyperplane(Direction normal, double offset);

    const Direction& normal() const { return normal_; }
    double offset() const { return offset_; }
    int ambient_dim() const { return normal_.dim(); }

    double signed_distance(const Point& p) const { return normal_.unit().dot(p) - offset_; }

    /// Deterministic orthonormal basis of the hyperplane's direction space
    /// (n x (n-1) matrix).
    Eigen::MatrixXd basis() const;

private:
    Direction normal_;
    double offset_;
};

/// Point where the extended line of `s` meets `h`. Throws ParallelError
/// when |<direction, normal>| < 1e-12.
Point line_hyperplane_intersection(const Segment& s, const Hyperplane& h);

/// One-parameter family of hyperplanes through the origin whose normals
/// sweep the circle H^2 cap S^{n-1} spanned by (u, v). The phase fixes the
/// parametrization so directional angles are reproducible across runs.
class PageFamily {
public:
    /// u is renormalized, v is orthonormalized against u; near-dependent
    /// inputs are rejected.
    PageFamily(const Point& u, const Point& v, double phase = 0.0);

    const Point& u() const { return u_; }
    const Point& v() const { return v_; }
    double phase() const { return phase_; }
    int ambient_dim() const { return static_cast<int>(u_.size()); }

    Direction normal_at(double t) const;

private:
    Point u_, v_;
    double phase_;
};

/// Page with directional angle t: hyperplane through the origin with
/// normal cos(t+phase) u + sin(t+phase) v. t is reduced mod 2*pi.
Hyperplane page_at(const PageFamily& pages, double t);

/// Element of the Grassmannian G(m, k): an orthonormal basis of a
/// k-subspace of R^m together with its coordinate projection.
class GrassmannElement {
public:
    /// Orthonormalizes the spanning columns (kept as-is when they are
    /// already orthonormal within 1e-12, so coordinate subspaces stay
    /// exact). Near-dependent spans (smallest singular value < 1e-8) are
    /// rejected.
    GrassmannElement(int ambient_dim, Eigen::MatrixXd spanning_columns);

    int ambient_dim() const { return ambient_dim_; }
    int sub_dim() const { return static_cast<int>(basis_.cols()); }
    const Eigen::MatrixXd& basis() const { return basis_; }

    /// Coordinates of x in the basis; 1-Lipschitz.
    Eigen::VectorXd project(const Point& x) const { return basis_.transpose() * x; }
    /// Embed coordinates back into R^m.
    Point embed(const Eigen::VectorXd& y) const { return basis_ * y; }

private:
    int ambient_dim_;
    Eigen::MatrixXd basis_;
};

/// Principal angles between two subspaces of the same ambient space,
/// ascending, via the singular values of B1^T B2.
std::vector<double> principal_angles(const GrassmannElement& a, const GrassmannElement& b);

/// Deterministic orthonormal basis of the orthogonal complement of `unit`
/// (a unit vector): n x (n-1) matrix. Built from a Householder reflection
/// so it varies continuously except at one antipode.
Eigen::MatrixXd orthonormal_complement(const Point& unit);

/// atan2-style angle of a 2-D direction in [0, 2*pi).
double planar_angle(const Direction& d);

inline void require_same_dim(int a, int b, const char* what) {
    if (a != b) throw DimensionError(std::string(what) + ": dimension mismatch");
}

} // namespace kakeya
