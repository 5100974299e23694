#pragma once
/**
 * @file io.hpp
 * @brief Versioned, locale-independent CSV and JSON output.
 *
 * CSV files open with a comment line
 *   # hbill v1 schema=<name> config_hash=<16 hex> seed=<n>
 * followed by the column header. JSON documents carry the same three fields.
 */

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hbill/flow.hpp"
#include "hbill/realize.hpp"

namespace hbill {

inline constexpr std::string_view kSchemaVersion = "v1";

/// Shortest round-trip decimal form, '.' separator regardless of locale.
std::string fmt(double v);
std::string fmt(long v);
std::string fmt(unsigned long v);
std::string fmt(unsigned long long v);
std::string fmt(int v);

/// FNV-1a 64 of the canonical (sorted-key, compact) dump, as 16 hex digits.
std::string config_hash(const nlohmann::json& config);

class CsvWriter {
public:
    CsvWriter(std::ostream& os, std::string_view schema, const nlohmann::json& config, std::uint64_t seed,
              const std::vector<std::string>& columns);
    void row(const std::vector<std::string>& cells);

private:
    std::ostream& os_;
    std::size_t width_;
};

nlohmann::json header_json(std::string_view schema, const nlohmann::json& config, std::uint64_t seed);

nlohmann::json vec_json(const Vec2& v);
nlohmann::json to_json(const TrajectorySegment& seg);
/// RealizedOrbit: itinerary, corners, length, word, residuals, sweep count.
nlohmann::json to_json(const RealizedOrbit& orb);

/// Crossing letters stored in a trajectory document.
Word word_from_trajectory_json(const nlohmann::json& doc);

/// Indented dump with a trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace hbill
