#pragma once
/**
 * @file admissibility.hpp
 * @brief Itineraries of obstacle centres and the convex-hull admissibility
 *        conditions.
 *
 * Conditions checked, for centres k_0, ..., k_n:
 *   (1) k_0 = (0, 0);
 *   (2) for every consecutive pair only the two obstacles themselves meet the
 *       convex hull of their union;
 *   (3) every interior obstacle O_{k_i} is disjoint from the convex hull of
 *       O_{k_{i-1}} and O_{k_{i+1}} (strict: distance > 2 r0).
 * Strong admissibility additionally asks for passage vectors of norm 1 or sqrt(2).
 */

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hbill/geometry.hpp"

namespace hbill {

using Itinerary = std::vector<LatticePoint>;
using PassageVector = LatticePoint;

struct AdmissibilityReport {
    bool ok{true};
    int condition{0};      ///< violated condition (1..3), 0 for coinciding consecutive centres
    std::size_t index{0};  ///< centre index where the violation was found
    std::string detail;

    explicit operator bool() const noexcept { return ok; }
};

/// Full check with the first violation. With @p anchored false, condition (1)
/// is skipped (translated itineraries). Throws InvalidModel unless 0 < r0 < sqrt(2)/4.
AdmissibilityReport check_admissible(const Itinerary& it, double r0, bool anchored = true);

bool is_admissible(const Itinerary& it, double r0);
bool is_strongly_admissible(const Itinerary& it, double r0);

/// True iff passage @p l2 may follow @p l1: the centres -l1, 0, l2 satisfy
/// conditions (2) and (3). Throws Domain unless both norms are 1 or sqrt(2).
bool edge_allowed(const PassageVector& l1, const PassageVector& l2, double r0);

/// The eight integer vectors of norm 1 or sqrt(2), counter-clockwise from (1, 0).
const std::array<PassageVector, 8>& short_passages();
bool is_short_passage(const PassageVector& l);

std::vector<PassageVector> passages_of(const Itinerary& it);
Itinerary itinerary_from_passages(const LatticePoint& start, const std::vector<PassageVector>& ls);

/// Whitespace-separated "m,n" pairs, e.g. "0,0 1,0 1,1". Throws Parse.
Itinerary parse_itinerary(std::string_view text);
std::string format_itinerary(const Itinerary& it);

}  // namespace hbill
