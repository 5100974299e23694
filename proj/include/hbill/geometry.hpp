#pragma once
/**
 * @file geometry.hpp
 * @brief Planar primitives for the lifted table: the plane with a closed disk
 *        of radius r0 at every integer point.
 *
 * Everything is double precision and value-typed. Obstacles are closed, so
 * boundary contact counts as intersection in the hull tests.
 */

#include <cmath>
#include <compare>
#include <optional>

namespace hbill {

inline constexpr double kSqrt2 = 1.41421356237309504880;
/// Upper end of the small-obstacle regime, sqrt(2)/4.
inline constexpr double kSmallObstacleLimit = kSqrt2 / 4.0;
/// Upper end of the regime where every short passage pair is admissible, sqrt(5)/10.
inline constexpr double kAdmissibleLimit = 0.22360679774997896964;

/// Discriminants closer than this to zero are tangencies and count as misses.
inline constexpr double kTangencyTol = 1e-12;

struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2& operator+=(const Vec2& r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(const Vec2& r) { x -= r.x; y -= r.y; return *this; }

    constexpr double dot(const Vec2& r) const { return x * r.x + y * r.y; }
    /// z-component of the 3D cross product.
    constexpr double cross(const Vec2& r) const { return x * r.y - y * r.x; }
    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    Vec2 normalized() const { const double n = norm(); return {x / n, y / n}; }

    friend constexpr bool operator==(const Vec2&, const Vec2&) = default;
};

/// Integer point of the lattice Z^2; obstacle centres and passage vectors.
struct LatticePoint {
    long m{0};
    long n{0};

    constexpr LatticePoint() = default;
    constexpr LatticePoint(long m_, long n_) : m(m_), n(n_) {}

    constexpr LatticePoint operator+(const LatticePoint& r) const { return {m + r.m, n + r.n}; }
    constexpr LatticePoint operator-(const LatticePoint& r) const { return {m - r.m, n - r.n}; }
    constexpr LatticePoint operator-() const { return {-m, -n}; }
    constexpr long norm2() const { return m * m + n * n; }
    double norm() const { return std::sqrt(static_cast<double>(norm2())); }
    constexpr Vec2 to_vec() const { return {static_cast<double>(m), static_cast<double>(n)}; }

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct Disk {
    LatticePoint center;
    double radius{0.0};

    Vec2 c() const { return center.to_vec(); }
};

struct Segment {
    Vec2 a;
    Vec2 b;
};

/// Throws InvalidModel unless 0 < r0 < sqrt(2)/4.
void require_small_obstacle(double r0);

/// Euclidean distance from @p p to the closed segment @p s.
double dist_point_segment(const Vec2& p, const Segment& s);

/// True iff @p probe meets the convex hull of @p d1 and @p d2 (closed disks).
/// All three radii must agree; otherwise throws InvalidModel.
bool hull_intersects_disk(const Disk& d1, const Disk& d2, const Disk& probe);

/**
 * Smallest t > 0 with |origin + t dir - centre| = radius.
 *
 * Uses the cancellation-free root pair (q, c/q). Returns nullopt for misses,
 * tangencies and rays moving away from the disk. Throws GeometryViolation if
 * the origin is inside the disk by more than 1e-12.
 */
std::optional<double> ray_disk_first_hit(const Vec2& origin, const Vec2& dir, const Disk& d);

/// Specular reflection of unit @p v at unit @p normal; output renormalised.
/// Throws Tangency when |v.n| < 1e-12.
Vec2 reflect(const Vec2& v, const Vec2& normal);

}  // namespace hbill
