#include "hbill/entropy.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "hbill/compiler.hpp"
#include "hbill/error.hpp"
#include "hbill/parallel.hpp"
#include "hbill/realize.hpp"

namespace hbill {

std::string_view to_string(PartitionLabel l) {
    switch (l) {
        case PartitionLabel::D1: return "1";
        case PartitionLabel::D2p: return "2+";
        case PartitionLabel::D2m: return "2-";
        case PartitionLabel::D3p: return "3+";
        case PartitionLabel::D3m: return "3-";
    }
    return "?";
}

namespace {

void check_eps(double eps0) {
    if (!(eps0 > 0.0 && eps0 < 0.5)) throw Error(ErrorCode::Domain, "eps0 must lie in (0, 1/2)");
}

double frac(double v) { return v - std::floor(v); }

PartitionLabel label_unchecked(const Vec2& q, double eps0) {
    const double fx = frac(q.x);
    const double fy = frac(q.y);
    if (fx <= eps0) return PartitionLabel::D2p;
    if (fx >= 1.0 - eps0) return PartitionLabel::D2m;
    if (fy <= eps0) return PartitionLabel::D3p;
    if (fy >= 1.0 - eps0) return PartitionLabel::D3m;
    return PartitionLabel::D1;
}

// Chord parameters in (0, 1) where the coordinate a + s (b - a) meets a label boundary.
void boundary_params(double a, double b, double eps0, std::vector<double>& out) {
    if (a == b) return;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);
    for (double m = std::floor(lo) - 1.0; m <= std::ceil(hi) + 1.0; m += 1.0) {
        for (double v : {m, m + eps0, m + 1.0 - eps0}) {
            if (v > lo && v < hi) out.push_back((v - a) / (b - a));
        }
    }
}

}  // namespace

PartitionLabel label(const Vec2& q, double eps0) {
    check_eps(eps0);
    return label_unchecked(q, eps0);
}

double visit_function(double T, double eps0) { return 2.0 * kSqrt2 * T / (1.0 - eps0) + 5.0; }

VisitCount visit_bound_check(const TrajectorySegment& seg, double eps0) {
    check_eps(eps0);
    if (seg.degenerate) throw Error(ErrorCode::DegenerateOrbit, "visit counting needs a non-degenerate segment");
    VisitCount vc;
    bool have = false;
    PartitionLabel cur = PartitionLabel::D1;
    auto push = [&](PartitionLabel l) {
        if (have && l == cur) return;
        have = true;
        cur = l;
        if (l == PartitionLabel::D1) ++vc.d1_visits;
        else ++vc.visits;
    };
    std::vector<Vec2> knots{seg.initial.position};
    for (const auto& c : seg.collisions) knots.push_back(c.point);
    knots.push_back(seg.position_at(seg.duration));
    std::vector<double> ss;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const Vec2 p = knots[i];
        const Vec2 q = knots[i + 1];
        ss.assign({0.0, 1.0});
        boundary_params(p.x, q.x, eps0, ss);
        boundary_params(p.y, q.y, eps0, ss);
        std::sort(ss.begin(), ss.end());
        for (std::size_t k = 0; k + 1 < ss.size(); ++k) {
            if (ss[k + 1] - ss[k] <= 0.0) continue;
            const double mid = 0.5 * (ss[k] + ss[k + 1]);
            push(label_unchecked(p + (q - p) * mid, eps0));
        }
    }
    if (!have) push(label_unchecked(seg.initial.position, eps0));
    vc.bound = 2.0 * kSqrt2 * seg.duration / (1.0 - eps0) + 4.0;
    vc.d1_bound = visit_function(seg.duration, eps0);
    return vc;
}

double htop_upper_constant(double eps0) {
    if (!(eps0 > 0.0 && eps0 <= 0.5)) throw Error(ErrorCode::Domain, "eps0 must lie in (0, 1/2]");
    return 6.0 * kSqrt2 * std::numbers::ln2 / (1.0 - eps0);
}

double htop_finite(double T, double eps0) {
    if (!(T > 0.0)) throw Error(ErrorCode::Domain, "T must be positive");
    return visit_function(T, eps0) * 3.0 * std::numbers::ln2 / T;
}

double htop_extrapolated(double h, int levels) {
    if (!(h > 0.0 && h <= 0.5) || levels < 1) throw Error(ErrorCode::Domain, "bad extrapolation parameters");
    std::vector<std::vector<double>> R(static_cast<std::size_t>(levels));
    for (int i = 0; i < levels; ++i) {
        R[i].push_back(htop_upper_constant(h / std::ldexp(1.0, i)));
        for (int j = 1; j <= i; ++j) {
            const double f = std::ldexp(1.0, j);
            R[i].push_back(R[i][j - 1] + (R[i][j - 1] - R[i - 1][j - 1]) / (f - 1.0));
        }
    }
    return R.back().back();
}

std::vector<GrowthRow> word_growth(int L_max, double r0) {
    if (L_max < 1) throw Error(ErrorCode::Domain, "L_max must be >= 1");
    std::vector<GrowthRow> rows;
    for (int L = 1; L <= L_max; ++L) {
        const auto words = enumerate_words(L);
        struct One {
            double T;
            std::size_t L_total;
            double residual;
            double clearance;
        };
        const auto res = parallel_map(words.size(), [&](std::size_t i) {
            const auto c = compile_code(BlockWord::from_word(words[i]), r0);
            const auto orb = realize(c.centers, r0);
            if (!(orb.word == words[i])) {
                throw Error(ErrorCode::Construction, "round trip failed for " + words[i].str() + " -> " + orb.word.str());
            }
            return One{orb.duration, c.total_passages(), orb.reflection_residual, orb.clearance};
        });
        GrowthRow row;
        row.L = L;
        row.word_count = words.size();
        row.realized = res.size();
        row.min_T = res.front().T;
        row.max_T = res.front().T;
        row.min_clearance = res.front().clearance;
        for (const auto& o : res) {
            row.min_T = std::min(row.min_T, o.T);
            row.max_T = std::max(row.max_T, o.T);
            row.max_L_total = std::max(row.max_L_total, o.L_total);
            row.max_residual = std::max(row.max_residual, o.residual);
            row.min_clearance = std::min(row.min_clearance, o.clearance);
            if (o.T > kSqrt2 * static_cast<double>(o.L_total + 1)) row.within_bound = false;
            row.durations.push_back(o.T);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Word random_word(std::size_t n, Rng& rng) {
    std::vector<Letter> ls;
    ls.reserve(n);
    while (ls.size() < n) {
        if (ls.empty()) {
            ls.push_back(static_cast<Letter>(rng.next() % 4));
        } else {
            const auto options = std::array<Letter, 4>{Letter::a, Letter::A, Letter::b, Letter::B};
            std::array<Letter, 3> ok{};
            std::size_t k = 0;
            for (Letter l : options) {
                if (l != inverse(ls.back())) ok[k++] = l;
            }
            ls.push_back(ok[rng.next() % 3]);
        }
    }
    return Word(ls);
}

GrowthFit growth_exponent(double r0, const std::vector<double>& budgets, int L_exact, int samples, std::uint64_t seed) {
    if (budgets.size() < 2 || samples < 1) throw Error(ErrorCode::Domain, "need at least two budgets and one sample");
    const double max_budget = *std::max_element(budgets.begin(), budgets.end());
    // Crossing bound: a word realised within time T has length at most sqrt(2) T + 2.
    const int L_cap = static_cast<int>(std::floor(kSqrt2 * max_budget + 2.0));
    std::vector<std::vector<double>> durations(static_cast<std::size_t>(L_cap + 1));
    std::vector<double> weight(static_cast<std::size_t>(L_cap + 1), 1.0);
    durations[0] = {0.0};
    const auto exact = word_growth(std::min(L_exact, L_cap), r0);
    for (const auto& row : exact) durations[static_cast<std::size_t>(row.L)] = row.durations;
    for (int L = L_exact + 1; L <= L_cap; ++L) {
        std::vector<Word> ws;
        Rng rng(seed + static_cast<std::uint64_t>(L));
        for (int i = 0; i < samples; ++i) ws.push_back(random_word(static_cast<std::size_t>(L), rng));
        durations[static_cast<std::size_t>(L)] = parallel_map(ws.size(), [&](std::size_t i) {
            const auto c = compile_code(BlockWord::from_word(ws[i]), r0);
            const auto orb = realize(c.centers, r0);
            if (!(orb.word == ws[i])) throw Error(ErrorCode::Construction, "round trip failed for " + ws[i].str());
            return orb.duration;
        });
        weight[static_cast<std::size_t>(L)] = static_cast<double>(sphere_count(L)) / samples;
    }
    GrowthFit fit;
    for (double lam : budgets) {
        BudgetCount bc;
        bc.budget = lam;
        for (std::size_t L = 0; L < durations.size(); ++L) {
            const auto n = std::count_if(durations[L].begin(), durations[L].end(), [&](double T) { return T <= lam; });
            bc.realized += weight[L] * static_cast<double>(n);
        }
        const int depth = static_cast<int>(std::floor(lam / kSqrt2)) - 1;
        bc.certified = depth >= 0 ? ball_count(depth) : 0;
        fit.counts.push_back(bc);
    }
    auto slope = [&](auto get) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = static_cast<double>(fit.counts.size());
        for (const auto& c : fit.counts) {
            const double x = c.budget;
            const double y = std::log(get(c));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    fit.slope = slope([](const BudgetCount& c) { return c.realized; });
    fit.certified_slope = slope([](const BudgetCount& c) { return static_cast<double>(c.certified); });
    return fit;
}

std::vector<PartitionLabel> pi_itinerary(const TrajectorySegment& seg, double eps0) {
    check_eps(eps0);
    std::vector<PartitionLabel> out;
    const auto steps = static_cast<std::size_t>(std::floor(seg.duration / eps0 + 1e-12));
    for (std::size_t i = 0; i <= steps; ++i) {
        out.push_back(label_unchecked(seg.position_at(std::min(seg.duration, static_cast<double>(i) * eps0)), eps0));
    }
    return out;
}

std::string format_labels(const std::vector<PartitionLabel>& labels) {
    std::string s;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) s.push_back(',');
        s += to_string(labels[i]);
    }
    return s;
}

}  // namespace hbill
