#pragma once
/**
 * @file rotation.hpp
 * @brief Homotopical rotation data (speed ||w|| / T, end prefix) of orbit
 *        segments, and the constructions bounding the rotation set.
 */

#include <cstddef>
#include <vector>

#include "hbill/compiler.hpp"
#include "hbill/flow.hpp"
#include "hbill/freegroup.hpp"
#include "hbill/realize.hpp"

namespace hbill {

struct RotationEstimate {
    double T{0.0};
    Word word;
    double speed{0.0};
    /// Common prefix length with the previous estimate's word (0 for the first).
    std::size_t prefix_depth{0};
};

struct RotationSeries {
    std::vector<RotationEstimate> estimates;
    bool degenerate{false};
};

/// Estimates along one simulated orbit. Throws Domain for a non-increasing or
/// non-positive grid. A degenerate orbit yields an empty, flagged series.
RotationSeries rotation_series(const PhaseState& initial, double r0, const std::vector<double>& T_grid);
/// Same over an existing segment (grid must end within its duration).
RotationSeries rotation_series(const TrajectorySegment& seg, const std::vector<double>& T_grid);

/// Closed-form corridor period 2 (2n^2 + 2n + 1 + 4 r0^2 - 2 sqrt(2) r0)^(1/2).
double corridor_period(long n, double r0);
/// Reflection points P_0 = v0 and Q_0 = -v0 + (n, n+1).
std::pair<Vec2, Vec2> corridor_points(long n, double r0);
PhaseState corridor_initial_state(long n, double r0);

struct CorridorRow {
    long n{0};
    double T_closed{0.0};
    double T_simulated{0.0};   ///< time of the second collision of the simulated orbit
    double T_realized{0.0};    ///< length of the periodic minimiser
    std::size_t word_length{0};          ///< reduced word of one simulated period
    std::size_t realized_word_length{0}; ///< reduced word of one minimiser period
    double ratio{0.0};         ///< (4n+2) / T_n
    double corner_error{0.0};  ///< minimiser corners vs P_0, Q_0
    double reflection_residual{0.0};
    double clearance{0.0};
    bool admissible{false};    ///< whether the cyclic itinerary passes the hull conditions
};

CorridorRow corridor_orbit(long n, double r0);
std::vector<CorridorRow> corridor_family(long n_max, double r0);

struct AchievedPoint {
    RealizedOrbit orbit;
    Word target_word;
    double target_speed{0.0};
    double speed{0.0};
    long idle_pairs{0};
    std::size_t prefix_depth{0};  ///< common prefix of the realised word and the direction
};

/// Compile the direction prefix, dilute to the target speed, realise.
/// Throws OutOfGuarantee for target_speed > sqrt(2)/2, Domain for a negative target.
AchievedPoint achievable_point(double target_speed, const EndPrefix& direction, std::size_t depth, double r0);

/// Itinerary winding @p k times counter-clockwise around O_(1,0) through
/// (0,0), (1,-1), (2,0), (1,1), starting and ending at (0,0).
Itinerary commutator_itinerary(long k);

struct CommutatorResult {
    double ratio{0.0};  ///< 4k / T
    double bound{0.0};  ///< sqrt(2) / (2 (1 - 2 r0))
    double T{0.0};
    Word word;
    double reflection_residual{0.0};
    double clearance{0.0};
};

CommutatorResult commutator_ceiling(long k, double r0);

struct WindingOracle {
    double length{0.0};
    bool complete{true};
};

/// Shortest closed integer-cornered broken line avoiding the origin and
/// winding at least N times around it, corners in [-max_coord, max_coord]^2.
WindingOracle winding_length_oracle(int N, int max_coord);

}  // namespace hbill
