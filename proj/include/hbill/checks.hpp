#pragma once
/**
 * @file checks.hpp
 * @brief The acceptance suite: one result per criterion at the stated tolerances.
 */

#include <functional>
#include <string>
#include <vector>

#include "hbill/geometry.hpp"

namespace hbill {

struct CheckResult {
    std::string name;
    bool pass{false};
    std::string detail;
    double seconds{0.0};
};

/// Runs every criterion in a fixed order; @p on_result sees each result as it completes.
std::vector<CheckResult> run_acceptance(const std::function<void(const CheckResult&)>& on_result = {});

/// Brute-force value of the 3-disk broken-line problem by nested refined grids
/// over the first two corner angles (the third corner is the nearest point to the second).
double three_disk_grid_oracle(const LatticePoint& k0, const LatticePoint& k1, const LatticePoint& k2, double r0);

}  // namespace hbill
