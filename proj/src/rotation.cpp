#include "hbill/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "hbill/error.hpp"
#include "hbill/parallel.hpp"

namespace hbill {

namespace {

void check_grid(const std::vector<double>& T_grid) {
    for (std::size_t i = 0; i < T_grid.size(); ++i) {
        if (!(T_grid[i] > 0.0) || (i > 0 && !(T_grid[i] > T_grid[i - 1]))) {
            throw Error(ErrorCode::Domain, "T grid must be positive and increasing");
        }
    }
}

}  // namespace

RotationSeries rotation_series(const TrajectorySegment& seg, const std::vector<double>& T_grid) {
    check_grid(T_grid);
    RotationSeries out;
    if (seg.degenerate) {
        out.degenerate = true;
        return out;
    }
    std::vector<Letter> letters;
    std::size_t next = 0;
    for (double T : T_grid) {
        if (T > seg.duration * (1.0 + 1e-12)) throw Error(ErrorCode::Domain, "T grid exceeds the segment duration");
        while (next < seg.crossings.size() && seg.crossings[next].time <= T) letters.push_back(seg.crossings[next++].letter);
        RotationEstimate e;
        e.T = T;
        e.word = reduce(letters);
        e.speed = static_cast<double>(e.word.length()) / T;
        if (!out.estimates.empty()) e.prefix_depth = longest_common_prefix(out.estimates.back().word, e.word).length();
        out.estimates.push_back(std::move(e));
    }
    return out;
}

RotationSeries rotation_series(const PhaseState& initial, double r0, const std::vector<double>& T_grid) {
    check_grid(T_grid);
    if (T_grid.empty()) return {};
    return rotation_series(simulate(initial, r0, T_grid.back()), T_grid);
}

double corridor_period(long n, double r0) {
    const double nn = static_cast<double>(n);
    return 2.0 * std::sqrt(2.0 * nn * nn + 2.0 * nn + 1.0 + 4.0 * r0 * r0 - 2.0 * kSqrt2 * r0);
}

std::pair<Vec2, Vec2> corridor_points(long n, double r0) {
    const Vec2 v0{-r0 / kSqrt2, r0 / kSqrt2};
    return {v0, Vec2{static_cast<double>(n), static_cast<double>(n + 1)} - v0};
}

PhaseState corridor_initial_state(long n, double r0) {
    const auto [p, q] = corridor_points(n, r0);
    return {p, (q - p).normalized()};
}

CorridorRow corridor_orbit(long n, double r0) {
    require_small_obstacle(r0);
    if (n < 1) throw Error(ErrorCode::Domain, "corridor index n must be >= 1");
    CorridorRow row;
    row.n = n;
    row.T_closed = corridor_period(n, r0);
    row.ratio = static_cast<double>(4 * n + 2) / row.T_closed;

    // One simulated period, ending just past the return to P_1. The orbit is
    // near-grazing for large n, so the flight runs in extended precision.
    const long double rl = r0;
    const long double s2 = std::sqrt(2.0L);
    const long double px = -rl / s2;
    const long double py = rl / s2;
    const long double dx = static_cast<long double>(n) - 2.0L * px;
    const long double dy = static_cast<long double>(n + 1) - 2.0L * py;
    const long double dn = std::hypot(dx, dy);
    const TrajectorySegment seg = simulate_extended({px, py, dx / dn, dy / dn}, r0, row.T_closed + 0.25);
    if (seg.collisions.size() < 2) throw Error(ErrorCode::Construction, "corridor orbit lost before one period");
    row.T_simulated = seg.collisions[1].time;
    std::vector<Letter> ls;
    for (const auto& c : seg.crossings) {
        if (c.time <= row.T_simulated) ls.push_back(c.letter);
    }
    row.word_length = reduce(ls).length();

    const Itinerary it{{0, 0}, {n, n + 1}};
    const LatticePoint shift{2 * n + 1, 2 * n + 1};
    Itinerary ext{{0, 0}, {n, n + 1}, shift, shift + LatticePoint{n, n + 1}};
    row.admissible = check_admissible(ext, r0, false).ok;
    MinimizeOptions opt;
    opt.require_admissible = false;
    const RealizedOrbit orb = validate_orbit(minimize_periodic(it, shift, r0, opt), r0);
    row.T_realized = orb.duration;
    row.realized_word_length = orb.word.length();
    row.reflection_residual = orb.reflection_residual;
    row.clearance = orb.clearance;
    const auto [p, q] = corridor_points(n, r0);
    row.corner_error = std::max((orb.broken_line.points[0] - p).norm(), (orb.broken_line.points[1] - q).norm());
    return row;
}

std::vector<CorridorRow> corridor_family(long n_max, double r0) {
    require_small_obstacle(r0);
    if (n_max < 1) return {};
    return parallel_map(static_cast<std::size_t>(n_max), [&](std::size_t i) { return corridor_orbit(static_cast<long>(i) + 1, r0); });
}

namespace {

Itinerary idle_itinerary(long pairs) {
    Itinerary it{{0, 0}};
    for (long i = 0; i < pairs; ++i) {
        it.push_back({1, 1});
        it.push_back({0, 0});
    }
    return it;
}

// Insert idle pairs spread round-robin over the eligible boundary corners.
Itinerary spread_idle(const CompiledItinerary& c, long pairs, double r0) {
    if (pairs <= 0) return c.centers;
    std::vector<std::size_t> eligible;
    for (std::size_t j : c.boundary_corners) {
        try {
            idle_direction(c.centers, j, r0);
            eligible.push_back(j);
        } catch (const Error&) {
        }
    }
    if (eligible.empty()) throw Error(ErrorCode::Insertion, "no boundary corner accepts idle pairs");
    std::vector<long> share(eligible.size(), pairs / static_cast<long>(eligible.size()));
    for (long i = 0; i < pairs % static_cast<long>(eligible.size()); ++i) ++share[static_cast<std::size_t>(i)];
    Itinerary it = c.centers;
    long placed = 0;
    for (std::size_t e = eligible.size(); e-- > 0;) {
        if (share[e] == 0) continue;
        try {
            it = dilute(it, share[e], eligible[e], r0);
            placed += share[e];
        } catch (const Error&) {
        }
    }
    if (placed < pairs) {
        // Put the remainder on the first corner that takes it.
        for (std::size_t e = eligible.size(); e-- > 0 && placed < pairs;) {
            try {
                it = dilute(it, pairs - placed, eligible[e], r0);
                placed = pairs;
            } catch (const Error&) {
            }
        }
    }
    if (placed < pairs) throw Error(ErrorCode::Insertion, "idle pairs could not be placed");
    return it;
}

}  // namespace

AchievedPoint achievable_point(double target_speed, const EndPrefix& direction, std::size_t depth, double r0) {
    require_small_obstacle(r0);
    if (!(r0 < kAdmissibleLimit)) throw Error(ErrorCode::InvalidModel, "achievable_point requires r0 < sqrt(5)/10");
    if (target_speed < 0.0) throw Error(ErrorCode::Domain, "target speed must be nonnegative");
    if (target_speed > kSqrt2 / 2.0) throw Error(ErrorCode::OutOfGuarantee, "target speed exceeds sqrt(2)/2");
    AchievedPoint out;
    out.target_speed = target_speed;
    out.target_word = direction.prefix(depth);
    if (target_speed == 0.0 || out.target_word.empty()) {
        const long pairs = std::max<long>(1, static_cast<long>(depth));
        out.orbit = realize(idle_itinerary(pairs), r0);
        out.idle_pairs = pairs;
        out.speed = static_cast<double>(out.orbit.word.length()) / out.orbit.duration;
        out.prefix_depth = longest_common_prefix(out.orbit.word, out.target_word).length();
        return out;
    }
    const CompiledItinerary c = compile_code(BlockWord::from_word(out.target_word), r0);
    const double L = static_cast<double>(out.target_word.length());
    const double per_pair = 2.0 * (kSqrt2 - 2.0 * r0);
    RealizedOrbit orb = realize(c.centers, r0);
    long pairs = 0;
    for (int iter = 0; iter < 8; ++iter) {
        const double want_T = L / target_speed;
        const long step = std::lround((want_T - orb.duration) / per_pair);
        if (step == 0 || (pairs + step) < 0) break;
        pairs += step;
        orb = realize(spread_idle(c, pairs, r0), r0);
    }
    out.orbit = std::move(orb);
    out.idle_pairs = pairs;
    out.speed = static_cast<double>(out.orbit.word.length()) / out.orbit.duration;
    out.prefix_depth = longest_common_prefix(out.orbit.word, out.target_word).length();
    return out;
}

Itinerary commutator_itinerary(long k) {
    if (k < 1) throw Error(ErrorCode::Domain, "commutator winding count must be >= 1");
    static const LatticePoint loop[4] = {{1, -1}, {2, 0}, {1, 1}, {0, 0}};
    Itinerary it{{0, 0}};
    for (long i = 0; i < k; ++i) {
        for (const auto& p : loop) it.push_back(p);
    }
    it.push_back(loop[0]);
    return it;
}

CommutatorResult commutator_ceiling(long k, double r0) {
    require_small_obstacle(r0);
    if (!(r0 < kAdmissibleLimit)) throw Error(ErrorCode::InvalidModel, "commutator_ceiling requires r0 < sqrt(5)/10");
    const RealizedOrbit orb = realize(commutator_itinerary(k), r0);
    CommutatorResult res;
    res.T = orb.duration;
    res.ratio = 4.0 * static_cast<double>(k) / orb.duration;
    res.bound = kSqrt2 / (2.0 * (1.0 - 2.0 * r0));
    res.word = orb.word;
    res.reflection_residual = orb.reflection_residual;
    res.clearance = orb.clearance;
    return res;
}

WindingOracle winding_length_oracle(int N, int max_coord) {
    if (N < 0 || max_coord < 1) throw Error(ErrorCode::Domain, "winding oracle needs N >= 0 and max_coord >= 1");
    WindingOracle out;
    if (N == 0) return out;
    std::vector<Vec2> pts;
    for (int m = -max_coord; m <= max_coord; ++m) {
        for (int n = -max_coord; n <= max_coord; ++n) {
            if (m != 0 || n != 0) pts.push_back({double(m), double(n)});
        }
    }
    const std::size_t P = pts.size();
    // Cut ray at an angle no lattice direction takes.
    const Vec2 cut{std::cos(1.0), std::sin(1.0)};
    auto sheet_step = [&](const Vec2& p, const Vec2& q) -> int {
        const double cp = cut.cross(p);
        const double cq = cut.cross(q);
        if ((cp < 0) == (cq < 0)) return 0;
        const Vec2 d = q - p;
        const double s = cp / (cp - cq);
        const Vec2 x = p + d * s;
        if (x.dot(cut) <= 0.0) return 0;
        return cp < 0 ? 1 : -1;
    };
    // Admissible edges: segments not through the origin.
    std::vector<std::vector<std::tuple<std::size_t, double, int>>> adj(P);
    for (std::size_t i = 0; i < P; ++i) {
        for (std::size_t j = 0; j < P; ++j) {
            if (i == j) continue;
            if (dist_point_segment({0, 0}, Segment{pts[i], pts[j]}) < 1e-12) continue;
            adj[i].push_back({j, (pts[j] - pts[i]).norm(), sheet_step(pts[i], pts[j])});
        }
    }
    const int lo = -1;
    const int hi = N + 1;
    const int S = hi - lo + 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t src = 0; src < P; ++src) {
        std::vector<double> dist(P * S, std::numeric_limits<double>::infinity());
        using Item = std::pair<double, std::size_t>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
        auto id = [&](std::size_t v, int s) { return v * S + static_cast<std::size_t>(s - lo); };
        dist[id(src, 0)] = 0.0;
        pq.push({0.0, id(src, 0)});
        while (!pq.empty()) {
            const auto [d, u] = pq.top();
            pq.pop();
            if (d > dist[u] || d >= best) continue;
            const std::size_t v = u / S;
            const int s = static_cast<int>(u % S) + lo;
            if (v == src && s == N) {
                best = std::min(best, d);
                break;
            }
            for (const auto& [w, len, ds] : adj[v]) {
                const int ns = s + ds;
                if (ns < lo || ns > hi) continue;
                const std::size_t x = id(w, ns);
                if (d + len < dist[x]) {
                    dist[x] = d + len;
                    pq.push({dist[x], x});
                }
            }
        }
    }
    out.length = best;
    out.complete = std::isfinite(best);
    return out;
}

}  // namespace hbill
