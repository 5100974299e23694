#include "hbill/compiler.hpp"

#include <array>
#include <cmath>
#include <set>
#include <tuple>

#include "hbill/error.hpp"
#include "hbill/flow.hpp"

namespace hbill {

BlockWord BlockWord::from_word(const Word& w) {
    BlockWord bw;
    for (Letter l : w.letters()) {
        const Axis ax = is_x_letter(l) ? Axis::a : Axis::b;
        const long s = letter_sign(l);
        if (!bw.blocks.empty() && bw.blocks.back().axis == ax) {
            bw.blocks.back().exponent += s;
        } else {
            bw.blocks.push_back({ax, s});
        }
    }
    return bw;
}

Word BlockWord::word() const {
    std::vector<Letter> ls;
    for (const auto& b : blocks) {
        const Letter l = b.axis == Axis::a ? (b.exponent > 0 ? Letter::a : Letter::A)
                                           : (b.exponent > 0 ? Letter::b : Letter::B);
        for (long i = 0; i < std::labs(b.exponent); ++i) ls.push_back(l);
    }
    return reduce(ls);
}

std::size_t BlockWord::length() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += static_cast<std::size_t>(std::labs(b.exponent));
    return n;
}

namespace {

Vec2 bisector_corner(const LatticePoint& prev, const LatticePoint& k, const LatticePoint& next, double r0) {
    const Vec2 c = k.to_vec();
    const Vec2 u = (prev.to_vec() - c).normalized();
    const Vec2 w = (next.to_vec() - c).normalized();
    return c + (u + w).normalized() * r0;
}

Vec2 end_corner(const LatticePoint& k, const Vec2& toward, double r0) {
    const Vec2 c = k.to_vec();
    return c + (toward - c).normalized() * r0;
}

// Model corner j of centres cs[0..n), computed locally.
Vec2 corner(const Itinerary& cs, std::size_t j, double r0) {
    const std::size_t n = cs.size();
    if (n == 1) return cs[0].to_vec();
    if (j > 0 && j + 1 < n) return bisector_corner(cs[j - 1], cs[j], cs[j + 1], r0);
    if (j == 0) return end_corner(cs[0], n > 2 ? corner(cs, 1, r0) : cs[1].to_vec(), r0);
    return end_corner(cs[n - 1], n > 2 ? corner(cs, n - 2, r0) : cs[n - 2].to_vec(), r0);
}

PassageVector zigzag(Axis ax, long s, int parity, long i) {
    const long t = (i % 2 == 0) ? parity : -parity;
    return ax == Axis::a ? PassageVector{s, t} : PassageVector{t, s};
}

bool chain_ok(const PassageVector& l1, const PassageVector& l2) { return l2 != l1 && l2 != -l1; }

int passage_code(const PassageVector& l) { return static_cast<int>((l.m + 1) * 3 + (l.n + 1)); }

// Finalised letters may trail the completed blocks by at most this many.
constexpr std::size_t kLetterLag = 3;

constexpr std::array<PassageVector, 8> kConnectors{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};

class CodeSearch {
public:
    CodeSearch(const BlockWord& w, double r0) : blocks_(w.blocks), r0_(r0), target_(w.word().letters()) {
        prefix_.push_back(0);
        for (const auto& b : blocks_) prefix_.push_back(prefix_.back() + static_cast<std::size_t>(std::labs(b.exponent)));
    }

    bool run() {
        for (const auto& c0 : kConnectors) {
            centers_ = {{0, 0}, c0};
            passages_ = {c0};
            connectors_.clear();
            if (descend(0, 0, 0)) return true;
        }
        return false;
    }

    Itinerary centers_;
    std::vector<PassageVector> passages_;
    std::vector<std::size_t> connectors_;

private:
    // Append letters of chords [from, to) and compare with the target.
    bool verify_chords(std::size_t from, std::size_t to, std::size_t& nletters) const {
        for (std::size_t i = from; i < to; ++i) {
            const Vec2 p = corner(centers_, i, r0_);
            const Vec2 q = corner(centers_, i + 1, r0_);
            for (const auto& cr : chord_crossings(p, q)) {
                if (nletters >= target_.size() || target_[nletters] != cr.letter) return false;
                ++nletters;
            }
        }
        return true;
    }

    bool descend(std::size_t bi, std::size_t nchords, std::size_t nletters) {
        const auto key = memo_key(bi, nletters);
        if (dead_.count(key)) return false;
        if (try_block(bi, nchords, nletters)) return true;
        dead_.insert(key);
        return false;
    }

    std::tuple<std::size_t, int, std::size_t> memo_key(std::size_t bi, std::size_t nletters) const {
        int tail = 0;
        const std::size_t n = passages_.size();
        for (std::size_t i = n >= 3 ? n - 3 : 0; i < n; ++i) tail = tail * 9 + passage_code(passages_[i]);
        return {bi, tail, nletters};
    }

    bool try_block(std::size_t bi, std::size_t nchords, std::size_t nletters) {
        if (bi == blocks_.size()) {
            std::size_t nl = nletters;
            return verify_chords(nchords, centers_.size() - 1, nl) && nl == target_.size();
        }
        const Block& b = blocks_[bi];
        const long s = b.exponent > 0 ? 1 : -1;
        const long len = std::labs(b.exponent);
        const std::size_t base = passages_.size();
        for (int parity : {1, -1}) {
            if (parity == -1 && len == 1) break;
            for (const auto& c : kConnectors) {
                bool ok = true;
                for (long i = 0; i + 1 < len + 1 && ok; ++i) {
                    const PassageVector l = i < len - 1 ? zigzag(b.axis, s, parity, i) : c;
                    if (!chain_ok(passages_.back(), l)) ok = false;
                    passages_.push_back(l);
                    centers_.push_back(centers_.back() + l);
                }
                std::size_t nl = nletters;
                const std::size_t upto = centers_.size() - 2;
                if (ok && verify_chords(nchords, upto, nl) && nl + kLetterLag >= prefix_[bi + 1]) {
                    connectors_.push_back(passages_.size() - 1);
                    if (descend(bi + 1, upto, nl)) return true;
                    connectors_.pop_back();
                }
                passages_.resize(base);
                centers_.resize(base + 1);
            }
        }
        return false;
    }

    const std::vector<Block>& blocks_;
    double r0_;
    std::vector<Letter> target_;
    std::vector<std::size_t> prefix_;
    std::set<std::tuple<std::size_t, int, std::size_t>> dead_;
};

}  // namespace

std::vector<Vec2> model_points(const Itinerary& it, double r0) {
    std::vector<Vec2> pts;
    pts.reserve(it.size());
    for (std::size_t j = 0; j < it.size(); ++j) pts.push_back(corner(it, j, r0));
    return pts;
}

std::vector<Letter> predicted_letters(const Itinerary& it, double r0) {
    const auto pts = model_points(it, r0);
    std::vector<Letter> out;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        for (const auto& cr : chord_crossings(pts[i], pts[i + 1])) out.push_back(cr.letter);
    }
    return out;
}

CompiledItinerary compile_code(const BlockWord& w, double r0) {
    require_small_obstacle(r0);
    if (!(r0 < kAdmissibleLimit)) throw Error(ErrorCode::InvalidModel, "compile requires r0 < sqrt(5)/10");
    if (w.blocks.empty()) throw Error(ErrorCode::Domain, "cannot compile the empty word");
    for (const auto& b : w.blocks) {
        if (b.exponent == 0) throw Error(ErrorCode::Domain, "block exponents must be nonzero");
    }
    for (std::size_t i = 1; i < w.blocks.size(); ++i) {
        if (w.blocks[i].axis == w.blocks[i - 1].axis) throw Error(ErrorCode::Domain, "block axes must alternate");
    }
    CodeSearch search(w, r0);
    if (!search.run()) throw Error(ErrorCode::Construction, "no symbolic code found for " + w.word().str());
    CompiledItinerary out;
    out.centers = std::move(search.centers_);
    out.passages = std::move(search.passages_);
    out.connectors = std::move(search.connectors_);
    for (std::size_t c : out.connectors) {
        for (std::size_t j : {c, c + 1}) {
            if (j >= 1 && j + 1 < out.centers.size() &&
                (out.boundary_corners.empty() || out.boundary_corners.back() != j)) {
                out.boundary_corners.push_back(j);
            }
        }
    }
    if (!is_strongly_admissible(out.centers, r0)) {
        throw Error(ErrorCode::Construction, "compiled itinerary is not strongly admissible");
    }
    return out;
}

std::size_t enumerate_codes(long n, double r0) {
    if (n < 0) throw Error(ErrorCode::Domain, "enumerate_codes requires n >= 0");
    const long sgn_n = (n % 2 == 0) ? 1 : -1;
    std::set<std::vector<PassageVector>> codes;
    for (int mirror : {1, -1}) {
        for (const PassageVector& first : {PassageVector{1, 0}, PassageVector{0, -1}}) {
            for (const PassageVector& last : {PassageVector{1, 0}, PassageVector{0, sgn_n}}) {
                std::vector<PassageVector> code{first};
                for (long i = 1; i <= n; ++i) code.push_back({1, (i % 2 == 1) ? 1 : -1});
                code.push_back(last);
                for (auto& l : code) l.n *= mirror;
                bool ok = true;
                for (std::size_t i = 0; i + 1 < code.size() && ok; ++i) ok = edge_allowed(code[i], code[i + 1], r0);
                if (ok) codes.insert(code);
            }
        }
    }
    return codes.size();
}

PassageVector idle_direction(const Itinerary& it, std::size_t position, double r0) {
    if (position == 0 || position + 1 >= it.size()) {
        throw Error(ErrorCode::Insertion, "idle pairs go at interior centres only");
    }
    const Vec2 d = corner(it, position, r0) - it[position].to_vec();
    constexpr double kAxisTol = 1e-9;
    if (std::abs(d.x) < kAxisTol || std::abs(d.y) < kAxisTol) {
        throw Error(ErrorCode::Insertion, "model corner is axis aligned at the requested position");
    }
    return {d.x > 0 ? 1 : -1, d.y > 0 ? 1 : -1};
}

Itinerary dilute(const Itinerary& it, long idle_pairs, std::size_t position, double r0) {
    if (idle_pairs < 0) throw Error(ErrorCode::Domain, "idle_pairs must be nonnegative");
    if (idle_pairs == 0) return it;
    const PassageVector alpha = idle_direction(it, position, r0);
    const LatticePoint k = it[position];
    Itinerary out(it.begin(), it.begin() + static_cast<std::ptrdiff_t>(position) + 1);
    for (long i = 0; i < idle_pairs; ++i) {
        out.push_back(k + alpha);
        out.push_back(k);
    }
    out.insert(out.end(), it.begin() + static_cast<std::ptrdiff_t>(position) + 1, it.end());
    if (!is_strongly_admissible(out, r0)) throw Error(ErrorCode::Insertion, "idle insertion breaks admissibility");
    if (reduce(predicted_letters(out, r0)) != reduce(predicted_letters(it, r0))) {
        throw Error(ErrorCode::Insertion, "idle insertion changes the word");
    }
    return out;
}

}  // namespace hbill
