#include "hbill/io.hpp"

#include <array>
#include <charconv>
#include <cstdio>

#include "hbill/error.hpp"

namespace hbill {

namespace {

template <class T>
std::string to_chars_string(T v) {
    std::array<char, 64> buf{};
    const auto [p, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (ec != std::errc{}) throw Error(ErrorCode::Domain, "number formatting failed");
    return std::string(buf.data(), p);
}

}  // namespace

std::string fmt(double v) { return to_chars_string(v); }
std::string fmt(long v) { return to_chars_string(v); }
std::string fmt(unsigned long v) { return to_chars_string(v); }
std::string fmt(unsigned long long v) { return to_chars_string(v); }
std::string fmt(int v) { return to_chars_string(v); }

std::string config_hash(const nlohmann::json& config) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : config.dump()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CsvWriter::CsvWriter(std::ostream& os, std::string_view schema, const nlohmann::json& config, std::uint64_t seed,
                     const std::vector<std::string>& columns)
    : os_(os), width_(columns.size()) {
    os_ << "# hbill " << kSchemaVersion << " schema=" << schema << " config_hash=" << config_hash(config)
        << " seed=" << seed << '\n';
    row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != width_) throw Error(ErrorCode::Domain, "csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os_ << ',';
        os_ << cells[i];
    }
    os_ << '\n';
}

nlohmann::json header_json(std::string_view schema, const nlohmann::json& config, std::uint64_t seed) {
    return {{"version", kSchemaVersion}, {"schema", schema}, {"config_hash", config_hash(config)}, {"seed", seed}, {"config", config}};
}

nlohmann::json vec_json(const Vec2& v) { return nlohmann::json::array({v.x, v.y}); }

nlohmann::json to_json(const TrajectorySegment& seg) {
    nlohmann::json j;
    j["r0"] = seg.r0;
    j["duration"] = seg.duration;
    j["initial"] = {{"position", vec_json(seg.initial.position)}, {"velocity", vec_json(seg.initial.velocity)}};
    j["final"] = {{"position", vec_json(seg.final.position)}, {"velocity", vec_json(seg.final.velocity)}};
    j["degenerate"] = seg.degenerate;
    auto& cols = j["collisions"] = nlohmann::json::array();
    for (const auto& c : seg.collisions) {
        cols.push_back({{"time", c.time},
                        {"obstacle", {c.obstacle.m, c.obstacle.n}},
                        {"point", vec_json(c.point)},
                        {"v_in", vec_json(c.v_in)},
                        {"v_out", vec_json(c.v_out)}});
    }
    auto& crs = j["crossings"] = nlohmann::json::array();
    std::string letters;
    for (const auto& c : seg.crossings) {
        crs.push_back({{"time", c.time}, {"letter", std::string(1, to_char(c.letter))}});
        letters.push_back(to_char(c.letter));
    }
    j["raw_letters"] = letters;
    if (!seg.degenerate) j["word"] = word_of(seg).str();
    return j;
}

nlohmann::json to_json(const RealizedOrbit& orb) {
    const BrokenLine& bl = orb.broken_line;
    nlohmann::json j;
    j["r0"] = bl.r0;
    j["itinerary"] = format_itinerary(bl.centers);
    if (bl.shift) j["shift"] = {bl.shift->m, bl.shift->n};
    auto& pts = j["corners"] = nlohmann::json::array();
    for (const auto& p : bl.points) pts.push_back(vec_json(p));
    j["length"] = orb.duration;
    j["word"] = orb.word.str();
    std::string raw;
    for (Letter l : orb.raw_letters) raw.push_back(to_char(l));
    j["raw_letters"] = raw;
    j["reflection_residual"] = orb.reflection_residual;
    j["clearance"] = orb.clearance;
    j["sweeps"] = bl.sweeps;
    return j;
}

Word word_from_trajectory_json(const nlohmann::json& doc) {
    const nlohmann::json& t = doc.contains("trajectory") ? doc.at("trajectory") : doc;
    if (t.value("degenerate", false)) throw Error(ErrorCode::DegenerateOrbit, "trajectory is degenerate");
    if (!t.contains("raw_letters")) throw Error(ErrorCode::Parse, "trajectory document has no raw_letters");
    return Word::parse(t.at("raw_letters").get<std::string>());
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace hbill
