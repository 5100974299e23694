#include "hbill/admissibility.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "hbill/error.hpp"

namespace hbill {

namespace {

std::string pt(const LatticePoint& k) {
    std::ostringstream os;
    os << '(' << k.m << ',' << k.n << ')';
    return os.str();
}

AdmissibilityReport fail(int condition, std::size_t index, std::string detail) {
    return AdmissibilityReport{false, condition, index, std::move(detail)};
}

// Condition (2) for one pair: scan the hull's bounding box inflated by ceil(2 r0) + 1 cells.
std::optional<LatticePoint> hull_intruder(const LatticePoint& k1, const LatticePoint& k2, double r0) {
    const long pad = static_cast<long>(std::ceil(2.0 * r0)) + 1;
    const Disk d1{k1, r0};
    const Disk d2{k2, r0};
    for (long m = std::min(k1.m, k2.m) - pad; m <= std::max(k1.m, k2.m) + pad; ++m) {
        for (long n = std::min(k1.n, k2.n) - pad; n <= std::max(k1.n, k2.n) + pad; ++n) {
            const LatticePoint c{m, n};
            if (c == k1 || c == k2) continue;
            if (hull_intersects_disk(d1, d2, Disk{c, r0})) return c;
        }
    }
    return std::nullopt;
}

}  // namespace

AdmissibilityReport check_admissible(const Itinerary& it, double r0, bool anchored) {
    require_small_obstacle(r0);
    if (it.empty()) return fail(1, 0, "empty itinerary");
    if (anchored && it.front() != LatticePoint{0, 0}) return fail(1, 0, "itinerary does not start at (0,0)");
    for (std::size_t i = 1; i < it.size(); ++i) {
        if (it[i] == it[i - 1]) return fail(0, i, "consecutive centres coincide at " + pt(it[i]));
        if (auto c = hull_intruder(it[i - 1], it[i], r0)) {
            return fail(2, i, "obstacle " + pt(*c) + " meets hull of " + pt(it[i - 1]) + " and " + pt(it[i]));
        }
    }
    for (std::size_t i = 1; i + 1 < it.size(); ++i) {
        // A backtrack k_{i+1} = k_{i-1} degenerates the segment to a point; applied literally.
        const double d = dist_point_segment(it[i].to_vec(), Segment{it[i - 1].to_vec(), it[i + 1].to_vec()});
        if (!(d > 2.0 * r0)) {
            return fail(3, i, "obstacle " + pt(it[i]) + " meets hull of " + pt(it[i - 1]) + " and " + pt(it[i + 1]));
        }
    }
    return {};
}

bool is_admissible(const Itinerary& it, double r0) { return check_admissible(it, r0).ok; }

bool is_strongly_admissible(const Itinerary& it, double r0) {
    if (!is_admissible(it, r0)) return false;
    for (std::size_t i = 1; i < it.size(); ++i) {
        if (!is_short_passage(it[i] - it[i - 1])) return false;
    }
    return true;
}

const std::array<PassageVector, 8>& short_passages() {
    static const std::array<PassageVector, 8> v{{{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}}};
    return v;
}

bool is_short_passage(const PassageVector& l) { return l.norm2() == 1 || l.norm2() == 2; }

bool edge_allowed(const PassageVector& l1, const PassageVector& l2, double r0) {
    if (!is_short_passage(l1) || !is_short_passage(l2)) {
        throw Error(ErrorCode::Domain, "passage vectors must have norm 1 or sqrt(2)");
    }
    const Itinerary it{-l1, {0, 0}, l2};
    return check_admissible(it, r0, false).ok;
}

std::vector<PassageVector> passages_of(const Itinerary& it) {
    std::vector<PassageVector> out;
    for (std::size_t i = 1; i < it.size(); ++i) out.push_back(it[i] - it[i - 1]);
    return out;
}

Itinerary itinerary_from_passages(const LatticePoint& start, const std::vector<PassageVector>& ls) {
    Itinerary it{start};
    it.reserve(ls.size() + 1);
    for (const auto& l : ls) it.push_back(it.back() + l);
    return it;
}

Itinerary parse_itinerary(std::string_view text) {
    Itinerary it;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_long = [&](long& out) {
        const char* b = text.data() + i;
        const char* e = text.data() + text.size();
        auto [p, ec] = std::from_chars(b, e, out);
        if (ec != std::errc{}) throw Error(ErrorCode::Parse, "expected integer in itinerary at offset " + std::to_string(i));
        i += static_cast<std::size_t>(p - b);
    };
    skip_ws();
    while (i < text.size()) {
        long m = 0;
        long n = 0;
        read_long(m);
        if (i >= text.size() || text[i] != ',') throw Error(ErrorCode::Parse, "expected ',' in itinerary");
        ++i;
        read_long(n);
        it.push_back({m, n});
        if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
            throw Error(ErrorCode::Parse, "expected whitespace between centres");
        }
        skip_ws();
    }
    return it;
}

std::string format_itinerary(const Itinerary& it) {
    std::string s;
    for (std::size_t i = 0; i < it.size(); ++i) {
        if (i) s.push_back(' ');
        s += std::to_string(it[i].m) + ',' + std::to_string(it[i].n);
    }
    return s;
}

}  // namespace hbill
