#include "hbill/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hbill/error.hpp"

namespace hbill {

namespace {

void axis_crossings(double start, double end, bool x_axis, std::vector<ChordCrossing>& out) {
    if (end > start) {
        const Letter l = x_axis ? Letter::a : Letter::b;
        for (double m = std::floor(start) + 1.0; m <= end; m += 1.0) out.push_back({(m - start) / (end - start), l});
    } else if (end < start) {
        const Letter l = x_axis ? Letter::A : Letter::B;
        for (double m = std::ceil(start) - 1.0; m >= end; m -= 1.0) out.push_back({(start - m) / (start - end), l});
    }
}

}  // namespace

std::vector<ChordCrossing> chord_crossings(const Vec2& p, const Vec2& q) {
    std::vector<ChordCrossing> out;
    axis_crossings(p.x, q.x, true, out);
    axis_crossings(p.y, q.y, false, out);
    std::stable_sort(out.begin(), out.end(), [](const ChordCrossing& u, const ChordCrossing& v) { return u.s < v.s; });
    return out;
}

namespace {

template <class R>
struct V {
    R x, y;
    V operator+(const V& o) const { return {x + o.x, y + o.y}; }
    V operator-(const V& o) const { return {x - o.x, y - o.y}; }
    V operator*(R s) const { return {x * s, y * s}; }
    R dot(const V& o) const { return x * o.x + y * o.y; }
    R norm() const { using std::hypot; return hypot(x, y); }
    V normalized() const { const R n = norm(); return {x / n, y / n}; }
    Vec2 to_double() const { return {static_cast<double>(x), static_cast<double>(y)}; }
};

template <class R>
V<R> lattice(const LatticePoint& k) { return {static_cast<R>(k.m), static_cast<R>(k.n)}; }

// Same contract as ray_disk_first_hit, in precision R.
template <class R>
std::optional<R> first_hit(const V<R>& origin, const V<R>& dir, const LatticePoint& centre, R r) {
    using std::sqrt;
    const V<R> rel = origin - lattice<R>(centre);
    const R dist = rel.norm();
    if (dist < r - R(1e-12)) throw Error(ErrorCode::GeometryViolation, "ray origin inside obstacle");
    const R b = rel.dot(dir);
    if (b >= R(0)) return std::nullopt;
    const R h = (rel - dir * b).norm();
    const R disc = (r - h) * (r + h);
    if (disc <= R(kTangencyTol)) return std::nullopt;
    const R t = (dist - r) * (dist + r) / (-b + sqrt(disc));
    if (t > R(0)) return t;
    return std::nullopt;
}

template <class R>
std::optional<std::pair<R, LatticePoint>> collision_search(const V<R>& p, const V<R>& v, R r0, R t_max) {
    using std::abs;
    using std::floor;
    long cx = static_cast<long>(floor(p.x));
    long cy = static_cast<long>(floor(p.y));
    const int step_x = v.x > 0 ? 1 : -1;
    const int step_y = v.y > 0 ? 1 : -1;
    const R inf = std::numeric_limits<R>::infinity();
    const R dt_x = v.x != R(0) ? R(1) / abs(v.x) : inf;
    const R dt_y = v.y != R(0) ? R(1) / abs(v.y) : inf;
    R next_x = v.x > 0 ? (static_cast<R>(cx + 1) - p.x) / v.x : v.x < 0 ? (static_cast<R>(cx) - p.x) / v.x : inf;
    R next_y = v.y > 0 ? (static_cast<R>(cy + 1) - p.y) / v.y : v.y < 0 ? (static_cast<R>(cy) - p.y) / v.y : inf;

    std::optional<std::pair<R, LatticePoint>> best;
    R cell_entry = 0;
    while (cell_entry <= t_max) {
        for (long dx = 0; dx <= 1; ++dx) {
            for (long dy = 0; dy <= 1; ++dy) {
                const LatticePoint c{cx + dx, cy + dy};
                if (best && best->second == c) continue;
                if (auto t = first_hit<R>(p, v, c, r0); t && *t <= t_max && (!best || *t < best->first)) {
                    best = std::make_pair(*t, c);
                }
            }
        }
        const R cell_exit = std::min(next_x, next_y);
        if (best && best->first <= cell_exit) return best;
        if (next_x < next_y) {
            cx += step_x;
            next_x += dt_x;
        } else {
            cy += step_y;
            next_y += dt_y;
        }
        cell_entry = cell_exit;
    }
    return best;
}

template <class R>
bool on_line(R v) {
    using std::abs;
    using std::round;
    return abs(v - round(v)) < R(1e-12);
}

template <class R>
TrajectorySegment simulate_impl(V<R> pos, V<R> vel, double r0d, double Td) {
    require_small_obstacle(r0d);
    if (!(Td > 0.0) || !std::isfinite(Td)) throw Error(ErrorCode::Domain, "duration must be positive and finite");
    using std::abs;
    using std::round;
    const R r0 = r0d;
    const R T = Td;
    {
        const V<R> rel = pos - V<R>{round(pos.x), round(pos.y)};
        if (rel.norm() < r0 - R(1e-10)) throw Error(ErrorCode::GeometryViolation, "initial point inside an obstacle");
    }
    TrajectorySegment seg;
    seg.initial = {pos.to_double(), vel.to_double()};
    seg.r0 = r0d;
    seg.duration = Td;

    R t = 0;
    while (t < T) {
        if ((abs(vel.y) < R(1e-12) && on_line(pos.y)) || (abs(vel.x) < R(1e-12) && on_line(pos.x))) seg.degenerate = true;
        const R remaining = T - t;
        const auto hit = collision_search<R>(pos, vel, r0, remaining);
        V<R> end;
        R flight;
        if (hit) {
            flight = hit->first;
            const V<R> c = lattice<R>(hit->second);
            // Pin the contact point to the circle so long runs never drift inside.
            end = c + ((pos + vel * flight) - c).normalized() * r0;
        } else {
            flight = remaining;
            end = pos + vel * flight;
        }
        for (const auto& cr : chord_crossings(pos.to_double(), end.to_double())) {
            seg.crossings.push_back({static_cast<double>(t + R(cr.s) * flight), cr.letter});
        }
        t += flight;
        if (!hit) {
            pos = end;
            break;
        }
        const V<R> normal = (end - lattice<R>(hit->second)).normalized();
        const R vn = vel.dot(normal);
        if (abs(vn) < R(1e-12)) throw Error(ErrorCode::Tangency, "grazing reflection");
        const V<R> out = (vel - normal * (R(2) * vn)).normalized();
        CollisionEvent ev;
        ev.time = static_cast<double>(t);
        ev.obstacle = hit->second;
        ev.point = end.to_double();
        ev.v_in = vel.to_double();
        ev.v_out = out.to_double();
        seg.collisions.push_back(ev);
        pos = end;
        vel = out;
    }
    seg.final = {pos.to_double(), vel.to_double()};
    seg.final.position = seg.position_at(Td);
    return seg;
}

}  // namespace

std::optional<std::pair<double, LatticePoint>> next_collision(const PhaseState& state, double r0, double t_max) {
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw Error(ErrorCode::Domain, "t_max must be positive and finite");
    return collision_search<double>({state.position.x, state.position.y}, {state.velocity.x, state.velocity.y}, r0, t_max);
}

TrajectorySegment simulate(const PhaseState& state, double r0, double T) {
    return simulate_impl<double>({state.position.x, state.position.y}, {state.velocity.x, state.velocity.y}, r0, T);
}

TrajectorySegment simulate_extended(const ExtendedState& state, double r0, double T) {
    return simulate_impl<long double>({state.x, state.y}, {state.vx, state.vy}, r0, T);
}

Vec2 TrajectorySegment::position_at(double t) const {
    t = std::clamp(t, 0.0, duration);
    auto it = std::upper_bound(collisions.begin(), collisions.end(), t,
                               [](double tt, const CollisionEvent& e) { return tt < e.time; });
    if (it == collisions.begin()) return initial.position + t * initial.velocity;
    const auto& e = *std::prev(it);
    return e.point + (t - e.time) * e.v_out;
}

Vec2 TrajectorySegment::velocity_at(double t) const {
    auto it = std::upper_bound(collisions.begin(), collisions.end(), t,
                               [](double tt, const CollisionEvent& e) { return tt < e.time; });
    if (it == collisions.begin()) return initial.velocity;
    return std::prev(it)->v_out;
}

std::vector<Letter> raw_letters(const TrajectorySegment& seg) {
    if (seg.degenerate) throw Error(ErrorCode::DegenerateOrbit, "orbit runs along an integer line");
    std::vector<Letter> out;
    out.reserve(seg.crossings.size());
    for (const auto& c : seg.crossings) {
        // Velocity on the chord that owns the crossing, i.e. the one arriving at c.time.
        auto it = std::lower_bound(seg.collisions.begin(), seg.collisions.end(), c.time,
                                   [](const CollisionEvent& e, double tt) { return e.time < tt; });
        const Vec2 v = it == seg.collisions.begin() ? seg.initial.velocity : std::prev(it)->v_out;
        const double deriv = is_x_letter(c.letter) ? v.x : v.y;
        if (std::abs(deriv) < 1e-12) throw Error(ErrorCode::DegenerateCrossing, "non-transversal crossing");
        out.push_back(c.letter);
    }
    return out;
}

Word word_of(const TrajectorySegment& seg) {
    const auto ls = raw_letters(seg);
    return Word(ls);
}

PhaseState boundary_state(double r0, double angle, double tilt) {
    const Vec2 n{std::cos(angle), std::sin(angle)};
    const Vec2 v{std::cos(angle + tilt), std::sin(angle + tilt)};
    return PhaseState{n * r0, v};
}

PhaseState random_boundary_state(double r0, Rng& rng) {
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double lim = std::numbers::pi / 2.0 - 1e-6;
    const double tilt = rng.uniform(-lim, lim);
    return boundary_state(r0, angle, tilt);
}

namespace {

// Cumulative variation of one coordinate at each knot of the piecewise-linear path.
struct VariationProfile {
    std::vector<double> knot_time;
    std::vector<double> knot_value;
    std::vector<double> rate;  // |velocity component| after each knot

    VariationProfile(const TrajectorySegment& seg, int axis) {
        auto comp = [axis](const Vec2& v) { return std::abs(axis == 0 ? v.x : v.y); };
        knot_time.push_back(0.0);
        knot_value.push_back(0.0);
        rate.push_back(comp(seg.initial.velocity));
        Vec2 prev = seg.initial.position;
        for (const auto& e : seg.collisions) {
            const double d = axis == 0 ? std::abs(e.point.x - prev.x) : std::abs(e.point.y - prev.y);
            knot_time.push_back(e.time);
            knot_value.push_back(knot_value.back() + d);
            rate.push_back(comp(e.v_out));
            prev = e.point;
        }
    }

    double at(double t) const {
        auto it = std::upper_bound(knot_time.begin(), knot_time.end(), t);
        const auto k = static_cast<std::size_t>(std::distance(knot_time.begin(), it)) - 1;
        return knot_value[k] + rate[k] * (t - knot_time[k]);
    }
};

}  // namespace

double min_crossing_gap_variation(const TrajectorySegment& seg, int axis) {
    const VariationProfile prof(seg, axis);
    double best = std::numeric_limits<double>::infinity();
    double last = -1.0;
    for (const auto& c : seg.crossings) {
        if (is_x_letter(c.letter) != (axis == 0)) continue;
        if (last >= 0.0) best = std::min(best, prof.at(c.time) - prof.at(last));
        last = c.time;
    }
    return best;
}

double total_axis_variation(const TrajectorySegment& seg) {
    return VariationProfile(seg, 0).at(seg.duration) + VariationProfile(seg, 1).at(seg.duration);
}

}  // namespace hbill
