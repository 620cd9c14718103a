#include "kakeya/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace kakeya {

Direction::Direction(const Point& v) {
    if (v.size() < 2) throw DimensionError("Direction: ambient dimension must be >= 2");
    double n = v.norm();
    if (n < 1e-12) throw ArgumentError("Direction: vector norm below 1e-12");
    unit_ = v / n;
}

Direction Direction::negated() const {
    Direction d(*this);
    d.unit_ = -d.unit_;
    return d;
}

double spherical_distance(const Direction& a, const Direction& b) {
    require_same_dim(a.dim(), b.dim(), "spherical_distance");
    double c = std::clamp(a.dot(b), -1.0, 1.0);
    return std::acos(c);
}

Segment::Segment(Point center, Direction direction, double length)
    : center_(std::move(center)), direction_(std::move(direction)), length_(length) {
    require_same_dim(static_cast<int>(center_.size()), direction_.dim(), "Segment");
    if (!(length_ > 0.0)) throw ArgumentError("Segment: length must be positive");
}

double Segment::distance_to(const Point& p) const {
    require_same_dim(static_cast<int>(p.size()), dim(), "Segment::distance_to");
    double t = direction_.unit().dot(p - center_);
    t = std::clamp(t, -0.5 * length_, 0.5 * length_);
    return (p - at(t)).norm();
}

namespace {

Eigen::VectorXd default_half_extents(int n, double width) {
    Eigen::VectorXd h(n - 1);
    h.setConstant(0.5);
    h[0] = 0.5 * width;
    return h;
}

void check_frame(const Segment& core, const Eigen::MatrixXd& frame) {
    const int n = core.dim();
    if (frame.rows() != n || frame.cols() != n - 1)
        throw DimensionError("Tube: frame must be n x (n-1)");
    for (int j = 0; j < frame.cols(); ++j) {
        if (std::abs(frame.col(j).norm() - 1.0) > kUnitTol)
            throw GeometryError("Tube: frame column not unit");
        if (std::abs(frame.col(j).dot(core.direction().unit())) > kUnitTol)
            throw GeometryError("Tube: frame column not orthogonal to core direction");
        for (int k = j + 1; k < frame.cols(); ++k)
            if (std::abs(frame.col(j).dot(frame.col(k))) > kUnitTol)
                throw GeometryError("Tube: frame columns not pairwise orthogonal");
    }
}

} // namespace

Tube::Tube(Segment core, double width)
    : Tube(std::move(core), width, Eigen::MatrixXd(), Eigen::VectorXd()) {}

Tube::Tube(Segment core, double width, Eigen::MatrixXd frame, Eigen::VectorXd half_extents)
    : core_(std::move(core)), width_(width) {
    if (!(width_ > 0.0)) throw ArgumentError("Tube: width must be positive");
    const int n = core_.dim();
    frame_ = frame.size() == 0 ? orthonormal_complement(core_.direction().unit()) : std::move(frame);
    check_frame(core_, frame_);
    half_extents_ = half_extents.size() == 0 ? default_half_extents(n, width_) : std::move(half_extents);
    if (half_extents_.size() != n - 1)
        throw DimensionError("Tube: need n-1 half extents");
    if ((half_extents_.array() <= 0.0).any())
        throw ArgumentError("Tube: half extents must be positive");
}

Tube Tube::slab(Segment core, double width) {
    int n = core.dim();
    return Tube(std::move(core), width, Eigen::MatrixXd(), default_half_extents(n, width));
}

Tube Tube::slab(Segment core, double width, Eigen::MatrixXd frame) {
    int n = core.dim();
    return Tube(std::move(core), width, std::move(frame), default_half_extents(n, width));
}

Tube Tube::segment_box(Segment core, double width) {
    int n = core.dim();
    Eigen::VectorXd h(n - 1);
    h.setConstant(0.5 * width);
    return Tube(std::move(core), width, Eigen::MatrixXd(), std::move(h));
}

double Tube::volume() const {
    double v = core_.length();
    for (int j = 0; j < half_extents_.size(); ++j) v *= 2.0 * half_extents_[j];
    return v;
}

bool Tube::contains(const Point& p) const {
    require_same_dim(static_cast<int>(p.size()), dim(), "Tube::contains");
    Point rel = p - core_.center();
    if (std::abs(core_.direction().unit().dot(rel)) > 0.5 * core_.length() + kBoundaryTol)
        return false;
    for (int j = 0; j < frame_.cols(); ++j)
        if (std::abs(frame_.col(j).dot(rel)) > half_extents_[j] + kBoundaryTol)
            return false;
    return true;
}

std::pair<Point, Point> Tube::bounding_box() const {
    const int n = dim();
    Point half = (0.5 * core_.length()) * core_.direction().unit().cwiseAbs();
    for (int j = 0; j < frame_.cols(); ++j)
        half += half_extents_[j] * frame_.col(j).cwiseAbs();
    Point lo = core_.center() - half;
    Point hi = core_.center() + half;
    (void)n;
    return {lo, hi};
}

std::vector<Point> Tube::corners() const {
    const int n = dim();
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(1) << n);
    for (std::size_t mask = 0; mask < (static_cast<std::size_t>(1) << n); ++mask) {
        Point p = core_.center();
        p += ((mask & 1) ? 0.5 : -0.5) * core_.length() * core_.direction().unit();
        for (int j = 0; j < n - 1; ++j) {
            double s = (mask >> (j + 1)) & 1 ? 1.0 : -1.0;
            p += s * half_extents_[j] * frame_.col(j);
        }
        out.push_back(std::move(p));
    }
    return out;
}

std::array<Vec2, 4> tube_vertices_2d(const Tube& t) {
    if (t.dim() != 2) throw DimensionError("tube_vertices_2d: ambient dimension must be 2");
    Vec2 c = t.core().center();
    Vec2 d = t.core().direction().unit();
    Vec2 m = t.frame().col(0);
    double hl = 0.5 * t.core().length();
    double hw = t.half_extents()[0];
    // counterclockwise when (d, m) is a right-handed pair; flip m otherwise
    if (d.x() * m.y() - d.y() * m.x() < 0.0) m = -m;
    return {Vec2(c + hl * d - hw * m), Vec2(c + hl * d + hw * m),
            Vec2(c - hl * d + hw * m), Vec2(c - hl * d - hw * m)};
}

Hyperplane::Hyperplane(Direction normal, double offset)
    : normal_(std::move(normal)), offset_(offset) {}

Eigen::MatrixXd Hyperplane::basis() const { return orthonormal_complement(normal_.unit()); }

Point line_hyperplane_intersection(const Segment& s, const Hyperplane& h) {
    require_same_dim(s.dim(), h.ambient_dim(), "line_hyperplane_intersection");
    double denom = s.direction().unit().dot(h.normal().unit());
    if (std::abs(denom) < 1e-12)
        throw ParallelError("line_hyperplane_intersection: line parallel to hyperplane");
    double t = -h.signed_distance(s.center()) / denom;
    return s.center() + t * s.direction().unit();
}

PageFamily::PageFamily(const Point& u, const Point& v, double phase) : phase_(phase) {
    if (u.size() != v.size()) throw DimensionError("PageFamily: u, v dimension mismatch");
    if (u.size() < 2) throw DimensionError("PageFamily: ambient dimension must be >= 2");
    double nu = u.norm();
    if (nu < 1e-12) throw ArgumentError("PageFamily: u near zero");
    u_ = u / nu;
    Point w = v - v.dot(u_) * u_;
    double nw = w.norm();
    if (nw < 1e-8) throw ArgumentError("PageFamily: u, v near-dependent");
    v_ = w / nw;
}

Direction PageFamily::normal_at(double t) const {
    double a = t + phase_;
    return Direction(std::cos(a) * u_ + std::sin(a) * v_);
}

Hyperplane page_at(const PageFamily& pages, double t) {
    double tau = 2.0 * M_PI;
    double r = std::fmod(t, tau);
    if (r < 0.0) r += tau;
    return Hyperplane(pages.normal_at(r), 0.0);
}

GrassmannElement::GrassmannElement(int ambient_dim, Eigen::MatrixXd spanning_columns)
    : ambient_dim_(ambient_dim) {
    if (spanning_columns.rows() != ambient_dim)
        throw DimensionError("GrassmannElement: spanning columns have wrong ambient dimension");
    const int k = static_cast<int>(spanning_columns.cols());
    if (k < 1 || k >= ambient_dim)
        throw ArgumentError("GrassmannElement: need 1 <= k < m");
    Eigen::MatrixXd gram = spanning_columns.transpose() * spanning_columns;
    if ((gram - Eigen::MatrixXd::Identity(k, k)).cwiseAbs().maxCoeff() <= kUnitTol) {
        basis_ = std::move(spanning_columns);
        return;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(spanning_columns, Eigen::ComputeThinU);
    if (svd.singularValues()[k - 1] < 1e-8)
        throw ArgumentError("GrassmannElement: spanning vectors near-dependent");
    basis_ = svd.matrixU().leftCols(k);
}

std::vector<double> principal_angles(const GrassmannElement& a, const GrassmannElement& b) {
    require_same_dim(a.ambient_dim(), b.ambient_dim(), "principal_angles");
    Eigen::MatrixXd m = a.basis().transpose() * b.basis();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    Eigen::VectorXd s = svd.singularValues();
    std::vector<double> angles(static_cast<std::size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i)
        angles[static_cast<std::size_t>(i)] = std::acos(std::clamp(s[i], -1.0, 1.0));
    std::sort(angles.begin(), angles.end());
    return angles;
}

Eigen::MatrixXd orthonormal_complement(const Point& unit) {
    const int n = static_cast<int>(unit.size());
    // Householder reflection mapping e_1 to `unit`; its remaining columns
    // form an orthonormal basis of the complement.
    Point w = unit;
    w[0] += (unit[0] >= 0.0 ? 1.0 : -1.0);
    double wn2 = w.squaredNorm();
    Eigen::MatrixXd h = Eigen::MatrixXd::Identity(n, n) - (2.0 / wn2) * (w * w.transpose());
    // column 0 of h is -sign(unit[0]) * unit; the rest span the complement
    Eigen::MatrixXd out = h.rightCols(n - 1);
    return out;
}

double planar_angle(const Direction& d) {
    if (d.dim() != 2) throw DimensionError("planar_angle: 2-D only");
    double a = std::atan2(d.unit()[1], d.unit()[0]);
    if (a < 0.0) a += 2.0 * M_PI;
    return a;
}

} // namespace kakeya
