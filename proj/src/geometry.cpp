#include "hbill/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "hbill/error.hpp"

namespace hbill {

void require_small_obstacle(double r0) {
    if (!(r0 > 0.0 && r0 < kSmallObstacleLimit)) {
        std::ostringstream os;
        os << "obstacle radius " << r0 << " outside (0, sqrt(2)/4)";
        throw Error(ErrorCode::InvalidModel, os.str());
    }
}

double dist_point_segment(const Vec2& p, const Segment& s) {
    const Vec2 ab = s.b - s.a;
    const double len2 = ab.norm2();
    if (len2 == 0.0) return (p - s.a).norm();
    const double t = std::clamp((p - s.a).dot(ab) / len2, 0.0, 1.0);
    return (p - (s.a + t * ab)).norm();
}

bool hull_intersects_disk(const Disk& d1, const Disk& d2, const Disk& probe) {
    if (d1.radius != d2.radius || d1.radius != probe.radius) {
        throw Error(ErrorCode::InvalidModel, "hull test requires equal radii");
    }
    const double d = dist_point_segment(probe.c(), Segment{d1.c(), d2.c()});
    return d <= 2.0 * probe.radius;
}

std::optional<double> ray_disk_first_hit(const Vec2& origin, const Vec2& dir, const Disk& d) {
    const Vec2 rel = origin - d.c();
    const double dist = rel.norm();
    const double c = (dist - d.radius) * (dist + d.radius);
    if (dist < d.radius - 1e-12) {
        throw Error(ErrorCode::GeometryViolation, "ray origin inside obstacle");
    }
    const double b = rel.dot(dir);
    if (b >= 0.0) return std::nullopt;
    // r^2 - |perpendicular offset|^2, free of the b^2 - c cancellation at grazing incidence.
    const double h = (rel - dir * b).norm();
    const double disc = (d.radius - h) * (d.radius + h);
    if (disc <= kTangencyTol) return std::nullopt;
    const double q = -b + std::sqrt(disc);
    const double t = c / q;
    if (t > 0.0) return t;
    // Origin on (or numerically just inside) the circle while moving inward:
    // the near root is the contact we start from, the far root is the exit.
    return std::nullopt;
}

Vec2 reflect(const Vec2& v, const Vec2& normal) {
    const double vn = v.dot(normal);
    if (std::abs(vn) < 1e-12) throw Error(ErrorCode::Tangency, "grazing reflection");
    return (v - (2.0 * vn) * normal).normalized();
}

}  // namespace hbill
