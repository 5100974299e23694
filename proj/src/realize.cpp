#include "hbill/realize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hbill/compiler.hpp"
#include "hbill/error.hpp"
#include "hbill/flow.hpp"

namespace hbill {

double BrokenLine::chord_length(std::size_t i) const {
    const auto [p, q] = chord(i);
    return (q - p).norm();
}

std::pair<Vec2, Vec2> BrokenLine::chord(std::size_t i) const {
    if (i + 1 < points.size()) return {points[i], points[i + 1]};
    return {points[i], points[0] + shift.value().to_vec()};
}

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_angle(double t) {
    t = std::fmod(t + kPi, 2.0 * kPi);
    if (t < 0) t += 2.0 * kPi;
    return t - kPi;
}

struct ArcObjective {
    Vec2 c, a, b;
    double r;

    Vec2 at(double t) const { return c + Vec2{std::cos(t), std::sin(t)} * r; }
    double f(double t) const {
        const Vec2 p = at(t);
        return (a - p).norm() + (b - p).norm();
    }
    // First and second derivative in t.
    std::pair<double, double> d(double t) const {
        const Vec2 p = at(t);
        const Vec2 dp{-r * std::sin(t), r * std::cos(t)};
        double d1 = 0.0;
        double d2 = 0.0;
        for (const Vec2& x : {a, b}) {
            const Vec2 e = x - p;
            const double g = e.norm();
            const double g1 = -e.dot(dp) / g;
            d1 += g1;
            d2 += (r * r + e.dot(p - c)) / g - g1 * g1 / g;
        }
        return {d1, d2};
    }
};

// Newton iteration inside [lo, hi]; nullopt if it fails to settle.
std::optional<double> newton(const ArcObjective& obj, double t, double lo, double hi, int max_iter) {
    for (int i = 0; i < max_iter; ++i) {
        const auto [d1, d2] = obj.d(t);
        if (!(d2 > 0.0)) return std::nullopt;
        const double step = d1 / d2;
        const double nt = std::clamp(t - step, lo, hi);
        const bool done = std::abs(nt - t) < 1e-13;
        t = nt;
        if (done) return t;
    }
    return std::nullopt;
}

Vec2 solve_corner(const Vec2& c, double r, const Vec2& a, const Vec2& b, const Vec2* hint) {
    const Vec2 ab = b - a;
    const double len = ab.norm();
    if (len > 0.0 && dist_point_segment(c, Segment{a, b}) <= r) {
        const Vec2 dir = ab / len;
        const Vec2 rel = a - c;
        const double bb = rel.dot(dir);
        const double disc = std::max(0.0, bb * bb - (rel.norm2() - r * r));
        const double t = -bb - std::sqrt(disc);
        return a + dir * std::clamp(t, 0.0, len);
    }
    const double ta = std::atan2(a.y - c.y, a.x - c.x);
    const double d = wrap_angle(std::atan2(b.y - c.y, b.x - c.x) - ta);
    const double lo = d > 0 ? ta : ta + d;
    const double hi = d > 0 ? ta + d : ta;
    const ArcObjective obj{c, a, b, r};
    if (hint) {
        double th = std::atan2(hint->y - c.y, hint->x - c.x);
        th = lo + wrap_angle(th - lo);
        if (th < lo) th += 2.0 * kPi;
        if (th >= lo && th <= hi) {
            if (auto t = newton(obj, th, lo, hi, 12)) return obj.at(*t);
        }
    }
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x0 = lo;
    double x1 = hi;
    double m1 = x1 - g * (x1 - x0);
    double m2 = x0 + g * (x1 - x0);
    double f1 = obj.f(m1);
    double f2 = obj.f(m2);
    for (int i = 0; i < 60; ++i) {
        if (f1 < f2) {
            x1 = m2;
            m2 = m1;
            f2 = f1;
            m1 = x1 - g * (x1 - x0);
            f1 = obj.f(m1);
        } else {
            x0 = m1;
            m1 = m2;
            f1 = f2;
            m2 = x0 + g * (x1 - x0);
            f2 = obj.f(m2);
        }
    }
    double t = 0.5 * (x0 + x1);
    if (auto tn = newton(obj, t, lo, hi, 20)) {
        if (obj.f(*tn) <= obj.f(t)) t = *tn;
    }
    return obj.at(t);
}

Vec2 nearest_on_disk(const Vec2& c, double r, const Vec2& toward) {
    const Vec2 d = toward - c;
    return c + d.normalized() * r;
}

std::vector<Vec2> initial_corners(const Itinerary& it, double r0, const std::optional<LatticePoint>& shift) {
    if (!shift) return model_points(it, r0);
    const std::size_t n = it.size();
    std::vector<Vec2> pts(n);
    for (std::size_t j = 0; j < n; ++j) {
        const LatticePoint prev = j > 0 ? it[j - 1] : it[n - 1] - *shift;
        const LatticePoint next = j + 1 < n ? it[j + 1] : it[0] + *shift;
        const Vec2 c = it[j].to_vec();
        Vec2 bis = (prev.to_vec() - c).normalized() + (next.to_vec() - c).normalized();
        if (bis.norm() < 1e-12) bis = Vec2{-(next.to_vec() - c).y, (next.to_vec() - c).x};
        pts[j] = c + bis.normalized() * r0;
    }
    return pts;
}

double total_length(const BrokenLine& bl) {
    double s = 0.0;
    for (std::size_t i = 0; i < bl.chord_count(); ++i) s += bl.chord_length(i);
    return s;
}

void descend(BrokenLine& bl, const MinimizeOptions& opt) {
    const std::size_t n = bl.points.size();
    const double r0 = bl.r0;
    const Vec2 sh = bl.shift ? bl.shift->to_vec() : Vec2{0, 0};
    bl.length = total_length(bl);
    for (long sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
        double max_move = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const Vec2 c = bl.centers[j].to_vec();
            Vec2 np;
            if (bl.shift) {
                const Vec2 a = j > 0 ? bl.points[j - 1] : bl.points[n - 1] - sh;
                const Vec2 b = j + 1 < n ? bl.points[j + 1] : bl.points[0] + sh;
                np = solve_corner(c, r0, a, b, &bl.points[j]);
            } else if (n == 1) {
                np = c;
            } else if (j == 0) {
                np = nearest_on_disk(c, r0, bl.points[1]);
            } else if (j + 1 == n) {
                np = nearest_on_disk(c, r0, bl.points[n - 2]);
            } else {
                np = solve_corner(c, r0, bl.points[j - 1], bl.points[j + 1], &bl.points[j]);
            }
            max_move = std::max(max_move, (np - bl.points[j]).norm());
            bl.points[j] = np;
        }
        const double len = total_length(bl);
        const double decrease = bl.length - len;
        bl.length = len;
        bl.sweeps = sweep;
        if (decrease < opt.tol && max_move < opt.move_tol) return;
    }
    throw Error(ErrorCode::Convergence, "length minimisation exceeded " + std::to_string(opt.max_sweeps) + " sweeps");
}

bool all_collinear(const Itinerary& it, const LatticePoint& shift) {
    std::vector<LatticePoint> ds;
    for (const auto& k : it) ds.push_back(k - it[0]);
    ds.push_back(shift);
    LatticePoint dir{0, 0};
    for (const auto& d : ds) {
        if (d.norm2() == 0) continue;
        if (dir.norm2() == 0) {
            dir = d;
        } else if (dir.m * d.n - dir.n * d.m != 0) {
            return false;
        }
    }
    return true;
}

}  // namespace

Vec2 best_corner(const Vec2& c, double r, const Vec2& a, const Vec2& b) { return solve_corner(c, r, a, b, nullptr); }

BrokenLine minimize_length(const Itinerary& it, double r0, const MinimizeOptions& opt) {
    require_small_obstacle(r0);
    if (it.size() < 2) throw Error(ErrorCode::NotAdmissible, "an orbit needs at least two obstacles");
    if (opt.require_admissible) {
        const auto rep = check_admissible(it, r0, false);
        if (!rep) throw Error(ErrorCode::NotAdmissible, rep.detail);
    }
    BrokenLine bl;
    bl.centers = it;
    bl.r0 = r0;
    bl.points = initial_corners(it, r0, std::nullopt);
    descend(bl, opt);
    return bl;
}

BrokenLine minimize_periodic(const Itinerary& it, const LatticePoint& shift, double r0, const MinimizeOptions& opt) {
    require_small_obstacle(r0);
    if (it.empty()) throw Error(ErrorCode::NotAdmissible, "empty cyclic itinerary");
    if (all_collinear(it, shift)) throw Error(ErrorCode::DegenerateOrbit, "cyclic itinerary spans a single line");
    if (opt.require_admissible) {
        Itinerary ext = it;
        ext.push_back(it[0] + shift);
        if (it.size() > 1) ext.push_back(it[1] + shift);
        else ext.push_back(it[0] + shift + shift);
        const auto rep = check_admissible(ext, r0, false);
        if (!rep) throw Error(ErrorCode::NotAdmissible, rep.detail);
    }
    BrokenLine bl;
    bl.centers = it;
    bl.r0 = r0;
    bl.shift = shift;
    bl.points = initial_corners(it, r0, shift);
    descend(bl, opt);
    return bl;
}

RealizedOrbit validate_orbit(const BrokenLine& bl, double r0) {
    constexpr double kStraight = 1e-8;
    constexpr double kInside = 1e-10;
    RealizedOrbit out;
    out.broken_line = bl;
    out.duration = bl.length;
    const std::size_t n = bl.points.size();
    const std::size_t first = bl.shift ? 0 : 1;
    const std::size_t last = bl.shift ? n : n - 1;
    const Vec2 sh = bl.shift ? bl.shift->to_vec() : Vec2{0, 0};
    double residual = 0.0;
    for (std::size_t j = first; j < last; ++j) {
        const Vec2 p = bl.points[j];
        const Vec2 prev = j > 0 ? bl.points[j - 1] : bl.points[n - 1] - sh;
        const Vec2 next = j + 1 < n ? bl.points[j + 1] : bl.points[0] + sh;
        const Vec2 u = (p - prev).normalized();
        const Vec2 w = (next - p).normalized();
        const Vec2 c = bl.centers[j].to_vec();
        const double dc = (p - c).norm();
        const Vec2 dw = w - u;
        if (dw.norm() < kStraight) continue;
        if (dc < r0 - kInside) {
            throw Error(ErrorCode::InvalidMinimizer, "bent corner strictly inside obstacle " + std::to_string(j));
        }
        const Vec2 nh = (p - c) / dc;
        double res = std::abs(dw.cross(nh));
        if (!(dw.dot(nh) > 0.0)) res = std::max(res, dw.norm());
        residual = std::max(residual, res);
    }
    out.reflection_residual = residual;

    double clearance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < bl.chord_count(); ++i) {
        const auto [p, q] = bl.chord(i);
        const long m0 = static_cast<long>(std::floor(std::min(p.x, q.x))) - 1;
        const long m1 = static_cast<long>(std::ceil(std::max(p.x, q.x))) + 1;
        const long n0 = static_cast<long>(std::floor(std::min(p.y, q.y))) - 1;
        const long n1 = static_cast<long>(std::ceil(std::max(p.y, q.y))) + 1;
        for (long m = m0; m <= m1; ++m) {
            for (long k = n0; k <= n1; ++k) {
                const double d = dist_point_segment(Vec2{double(m), double(k)}, Segment{p, q}) - r0;
                clearance = std::min(clearance, d);
            }
        }
        for (const auto& cr : chord_crossings(p, q)) out.raw_letters.push_back(cr.letter);
    }
    out.clearance = clearance;
    if (clearance < -kInside) throw Error(ErrorCode::Obstructed, "a chord penetrates an obstacle");
    out.word = reduce(out.raw_letters);
    return out;
}

RealizedOrbit realize(const Itinerary& it, double r0, const MinimizeOptions& opt) {
    return validate_orbit(minimize_length(it, r0, opt), r0);
}

TrajectorySegment unroll(const BrokenLine& bl, double T) {
    if (!(T >= 0.0)) throw Error(ErrorCode::Domain, "unroll requires T >= 0");
    TrajectorySegment seg;
    seg.r0 = bl.r0;
    const std::size_t nch = bl.chord_count();
    if (nch == 0) throw Error(ErrorCode::Domain, "broken line has no chords");
    if (!bl.shift) T = std::min(T, bl.length);
    seg.duration = T;
    const auto [p0, q0] = bl.chord(0);
    seg.initial = {p0, (q0 - p0).normalized()};
    double t = 0.0;
    Vec2 offset{0, 0};
    LatticePoint koff{0, 0};
    for (std::size_t i = 0;; ++i) {
        const std::size_t ci = i % nch;
        if (bl.shift && ci == 0 && i > 0) {
            offset += bl.shift->to_vec();
            koff = koff + *bl.shift;
        }
        if (!bl.shift && i == nch) break;
        const auto [pr, qr] = bl.chord(ci);
        const Vec2 p = pr + offset;
        const Vec2 q = qr + offset;
        const double len = (q - p).norm();
        for (const auto& cr : chord_crossings(p, q)) {
            if (t + cr.s * len <= T) seg.crossings.push_back({t + cr.s * len, cr.letter});
        }
        if (t + len > T) break;
        t += len;
        const bool more = bl.shift || ci + 1 < nch;
        if (!more) break;
        const std::size_t nj = (ci + 1) % bl.points.size();
        const auto [np, nq] = bl.chord((ci + 1) % nch);
        CollisionEvent ev;
        ev.time = t;
        ev.obstacle = bl.centers[nj] + koff + (ci + 1 == nch ? *bl.shift : LatticePoint{0, 0});
        ev.point = q;
        ev.v_in = (q - p) / len;
        ev.v_out = (nq - np).normalized();
        seg.collisions.push_back(ev);
    }
    seg.final = {seg.position_at(T), seg.velocity_at(T)};
    return seg;
}

}  // namespace hbill
