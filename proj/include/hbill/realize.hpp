#pragma once
/**
 * @file realize.hpp
 * @brief Realise an itinerary as a billiard orbit by minimising the length of
 *        broken lines whose corners lie on the itinerary's disks.
 */

#include <optional>
#include <vector>

#include "hbill/admissibility.hpp"
#include "hbill/flow.hpp"
#include "hbill/freegroup.hpp"

namespace hbill {

struct MinimizeOptions {
    double tol = 1e-12;        ///< per-sweep length decrease
    double move_tol = 1e-12;   ///< per-sweep max corner displacement
    long max_sweeps = 100000;
    bool require_admissible = true;
};

struct BrokenLine {
    std::vector<Vec2> points;
    Itinerary centers;
    double r0{0.0};
    double length{0.0};
    long sweeps{0};
    std::optional<LatticePoint> shift;  ///< set for periodic lines

    double chord_length(std::size_t i) const;
    std::size_t chord_count() const { return shift ? points.size() : points.size() - 1; }
    /// Chord i as (start, end); the closing chord of a periodic line ends at P_0 + shift.
    std::pair<Vec2, Vec2> chord(std::size_t i) const;
};

struct RealizedOrbit {
    BrokenLine broken_line;
    double duration{0.0};
    Word word;
    std::vector<Letter> raw_letters;
    double reflection_residual{0.0};
    double clearance{0.0};  ///< min over chords and nearby disks of distance - r0
};

/// Open broken line P_0 ... P_L with free end corners.
/// Throws NotAdmissible, Convergence.
BrokenLine minimize_length(const Itinerary& it, double r0, const MinimizeOptions& opt = {});

/// Closed broken line with P_{L+1} = P_0 + shift.
/// Throws NotAdmissible, DegenerateOrbit (collinear data, e.g. the bouncing orbit), Convergence.
BrokenLine minimize_periodic(const Itinerary& it, const LatticePoint& shift, double r0, const MinimizeOptions& opt = {});

/// Throws InvalidMinimizer (bent corner inside its disk) or Obstructed (a chord cuts a disk).
RealizedOrbit validate_orbit(const BrokenLine& bl, double r0);

/// minimize_length + validate_orbit.
RealizedOrbit realize(const Itinerary& it, double r0, const MinimizeOptions& opt = {});

/// Trajectory traced by the broken line from P_0, for time @p T (periodic
/// lines repeat by their shift; open lines stop at their last corner).
TrajectorySegment unroll(const BrokenLine& bl, double T);

/// Solution of min |A - P| + |P - B| over the closed disk (c, r), A and B outside.
Vec2 best_corner(const Vec2& c, double r, const Vec2& a, const Vec2& b);

}  // namespace hbill
