#pragma once
/**
 * @file entropy.hpp
 * @brief The five-domain partition of the table, visit counts against the
 *        counting bound, the entropy constant 6 sqrt(2) ln 2 and word growth.
 *
 * D2+ = {frac(x1) <= eps0}, D2- = {frac(x1) >= 1 - eps0}, D3+/D3- likewise in
 * x2, D1 the rest. Where several apply: D2+ > D2- > D3+ > D3-.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hbill/flow.hpp"

namespace hbill {

enum class PartitionLabel : std::uint8_t { D1, D2p, D2m, D3p, D3m };

/// "1", "2+", "2-", "3+", "3-".
std::string_view to_string(PartitionLabel l);

/// Throws Domain unless 0 < eps0 < 1/2.
PartitionLabel label(const Vec2& q, double eps0);

struct VisitCount {
    std::size_t visits{0};     ///< maximal stays in D2+, D2-, D3+ or D3-
    std::size_t d1_visits{0};  ///< maximal stays in D1
    double bound{0.0};         ///< 2 sqrt(2) T / (1 - eps0) + 4
    double d1_bound{0.0};      ///< f(T, eps0) = 2 sqrt(2) T / (1 - eps0) + 5
    bool holds() const { return static_cast<double>(visits) <= bound && static_cast<double>(d1_visits) <= d1_bound; }
    double slack() const { return bound - static_cast<double>(visits); }
};

/// Label runs are located exactly per chord. Throws DegenerateOrbit for a flagged segment.
VisitCount visit_bound_check(const TrajectorySegment& seg, double eps0);

/// f(T, eps0).
double visit_function(double T, double eps0);

/// (6 sqrt(2) / (1 - eps0)) ln 2, the T -> infinity limit of ln 8^f / T. Accepts 0 < eps0 <= 1/2.
double htop_upper_constant(double eps0);
/// ln 8^{f(T, eps0)} / T at finite T.
double htop_finite(double T, double eps0);
/// Richardson extrapolation of htop_upper_constant to eps0 -> 0 from eps0 = h, h/2, ...
double htop_extrapolated(double h = 0.05, int levels = 6);

struct GrowthRow {
    int L{0};
    std::uint64_t word_count{0};  ///< reduced words of length L
    std::uint64_t realized{0};    ///< of those, round-tripped exactly
    double min_T{0.0};
    double max_T{0.0};
    std::size_t max_L_total{0};
    bool within_bound{true};      ///< every T <= sqrt(2) (L_total + 1)
    double max_residual{0.0};
    double min_clearance{0.0};
    std::vector<double> durations;  ///< per word, enumeration order
};

/// Exhaustive compile + realize + round trip for every reduced word of length
/// 1..L_max. Throws Construction on any round-trip failure.
std::vector<GrowthRow> word_growth(int L_max, double r0);

struct BudgetCount {
    double budget{0.0};       ///< Lambda
    double realized{0.0};     ///< estimated number of words with realised T <= Lambda
    std::uint64_t certified{0};  ///< ball_count(floor(Lambda / sqrt(2)) - 1)
};

struct GrowthFit {
    std::vector<BudgetCount> counts;
    double slope{0.0};            ///< least squares slope of ln realized vs Lambda
    double certified_slope{0.0};  ///< same for the certified counts
};

/// Count words by realised duration: exact for lengths <= L_exact, sampled
/// (samples per length, seeded) beyond, up to lengths where no sample fits.
GrowthFit growth_exponent(double r0, const std::vector<double>& budgets, int L_exact, int samples, std::uint64_t seed);

/// Labels at t = 0, eps0, ..., floor(T / eps0) eps0.
std::vector<PartitionLabel> pi_itinerary(const TrajectorySegment& seg, double eps0);
std::string format_labels(const std::vector<PartitionLabel>& labels);

/// Uniform random reduced word of length n.
Word random_word(std::size_t n, Rng& rng);

}  // namespace hbill
