#pragma once
/**
 * @file flow.hpp
 * @brief Event-driven billiard flow in the lifted table and the word of a
 *        trajectory segment.
 *
 * Collision search marches the ray through unit cells and tests the four
 * corner disks of each visited cell. A disk of radius below 1/2 only meets
 * the four cells around its centre, so every hit at a time inside a cell is
 * found while that cell is visited.
 *
 * Crossings of integer lines are enumerated per straight chord in closed
 * form. A crossing located exactly at a chord end point is attributed to the
 * chord that arrives there (half-open convention in the direction of travel).
 * At a reflection point lying on an integer line the normal is parallel to
 * that line, so the crossing is always transversal.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hbill/freegroup.hpp"
#include "hbill/geometry.hpp"

namespace hbill {

struct PhaseState {
    Vec2 position;
    Vec2 velocity;  ///< unit
};

struct CollisionEvent {
    double time{0.0};
    LatticePoint obstacle;
    Vec2 point;
    Vec2 v_in;
    Vec2 v_out;
};

struct CrossingEvent {
    double time{0.0};
    Letter letter{Letter::a};
};

struct TrajectorySegment {
    PhaseState initial;
    double r0{0.0};
    double duration{0.0};
    std::vector<CollisionEvent> collisions;
    std::vector<CrossingEvent> crossings;
    PhaseState final;
    /// Set when the orbit runs along an integer line (the trivial axis-aligned
    /// bouncing orbits); its word is then undefined.
    bool degenerate{false};

    /// Position of the lifted orbit at time t in [0, duration].
    Vec2 position_at(double t) const;
    /// Velocity just after time t.
    Vec2 velocity_at(double t) const;
};

/// Crossing of an integer line by the chord p -> q, at chord parameter s in (0, 1].
struct ChordCrossing {
    double s{0.0};
    Letter letter{Letter::a};
};

/// Crossings of the chord p -> q ordered by parameter.
std::vector<ChordCrossing> chord_crossings(const Vec2& p, const Vec2& q);

/// Earliest obstacle hit within (0, t_max]. Tangent disks are skipped.
/// Throws Domain for non-finite or non-positive t_max.
std::optional<std::pair<double, LatticePoint>> next_collision(const PhaseState& state, double r0, double t_max);

/// Flow for time T. Throws GeometryViolation for an initial point inside an obstacle.
TrajectorySegment simulate(const PhaseState& state, double r0, double T);

/// Initial state carried in extended precision.
struct ExtendedState {
    long double x{0}, y{0}, vx{0}, vy{0};
};

/// simulate() with the flight arithmetic in long double, for ill-conditioned
/// orbits whose initial data is known beyond double precision.
TrajectorySegment simulate_extended(const ExtendedState& state, double r0, double T);

/// Reduced word of the crossing sequence. Throws DegenerateOrbit for flagged
/// segments and DegenerateCrossing for a crossing with |derivative| < 1e-12.
Word word_of(const TrajectorySegment& seg);

/// Letters in crossing order before reduction.
std::vector<Letter> raw_letters(const TrajectorySegment& seg);

/// Start on the boundary of the obstacle at the origin: @p angle fixes the
/// footpoint, @p tilt in (-pi/2, pi/2) the outgoing direction relative to the
/// outward normal.
PhaseState boundary_state(double r0, double angle, double tilt);

/// Seeded 64-bit generator; draws are converted to doubles by hand so that
/// sequences do not depend on the standard library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t next() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Random footpoint and tilt, tilt bounded away from grazing by 1e-6.
PhaseState random_boundary_state(double r0, Rng& rng);

/// Minimum over consecutive same-axis crossings of the integral of |x_axis'|
/// between them (axis 0 for x-crossings, 1 for y). +inf when fewer than two.
double min_crossing_gap_variation(const TrajectorySegment& seg, int axis);

/// Integral of |x1'| + |x2'| over the whole segment.
double total_axis_variation(const TrajectorySegment& seg);

}  // namespace hbill
