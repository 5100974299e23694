#include "hbill/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hbill/admissibility.hpp"
#include "hbill/compiler.hpp"
#include "hbill/entropy.hpp"
#include "hbill/error.hpp"
#include "hbill/flow.hpp"
#include "hbill/freegroup.hpp"
#include "hbill/io.hpp"
#include "hbill/parallel.hpp"
#include "hbill/realize.hpp"
#include "hbill/rotation.hpp"

namespace hbill {

namespace {

struct SuiteState {
    double max_residual{0.0};
    double min_clearance{std::numeric_limits<double>::infinity()};
    std::size_t orbits{0};
    std::vector<TrajectorySegment> random_orbits;

    void record(double residual, double clearance) {
        max_residual = std::max(max_residual, residual);
        min_clearance = std::min(min_clearance, clearance);
        ++orbits;
    }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

CheckResult check_corridor(SuiteState& st) {
    const auto t0 = Clock::now();
    CheckResult r{"corridor-family", true, "", 0.0};
    double worst_sim = 0.0;
    double worst_real = 0.0;
    double worst_ratio_slack = std::numeric_limits<double>::infinity();
    std::size_t bad_words = 0;
    for (double r0 : {0.10, 0.20, 0.30}) {
        for (const auto& row : corridor_family(30, r0)) {
            worst_sim = std::max(worst_sim, std::abs(row.T_simulated / row.T_closed - 1.0));
            worst_real = std::max(worst_real, std::abs(row.T_realized / row.T_closed - 1.0));
            const auto want = static_cast<std::size_t>(4 * row.n + 2);
            if (row.word_length != want || row.realized_word_length != want) ++bad_words;
            worst_ratio_slack = std::min(worst_ratio_slack, 2.0 / row.n - std::abs(row.ratio - kSqrt2));
            st.record(row.reflection_residual, row.clearance);
        }
    }
    r.seconds = since(t0);
    r.pass = worst_sim <= 1e-9 && worst_real <= 1e-9 && bad_words == 0 && worst_ratio_slack >= 0.0 && r.seconds < 10.0;
    r.detail = "max_rel_err_sim=" + fmt(worst_sim) + " max_rel_err_realized=" + fmt(worst_real) +
               " word_mismatches=" + fmt(static_cast<unsigned long>(bad_words)) + " min_ratio_slack=" + fmt(worst_ratio_slack);
    return r;
}

CheckResult check_radial(SuiteState& st) {
    const auto t0 = Clock::now();
    CheckResult r{"radial-upper-bound", true, "", 0.0};
    const double r0 = 0.25;
    const double T = 100.0;
    Rng rng(20240601);
    std::vector<PhaseState> starts;
    for (int i = 0; i < 1000; ++i) starts.push_back(random_boundary_state(r0, rng));
    st.random_orbits = parallel_map(starts.size(), [&](std::size_t i) { return simulate(starts[i], r0, T); });
    std::size_t violations = 0;
    double max_ratio = 0.0;
    double min_gap = std::numeric_limits<double>::infinity();
    for (const auto& seg : st.random_orbits) {
        const double N = static_cast<double>(seg.crossings.size());
        if (N > kSqrt2 * T + 2.0) ++violations;
        max_ratio = std::max(max_ratio, N / T);
        min_gap = std::min({min_gap, min_crossing_gap_variation(seg, 0), min_crossing_gap_variation(seg, 1)});
    }
    r.seconds = since(t0);
    r.pass = violations == 0 && min_gap >= 1.0 - 1e-12 && r.seconds < 60.0;
    r.detail = "violations=" + fmt(static_cast<unsigned long>(violations)) + " max_N_over_T=" + fmt(max_ratio) +
               " min_gap_variation=" + fmt(min_gap);
    return r;
}

CheckResult check_lower_bound(SuiteState& st) {
    const auto t0 = Clock::now();
    CheckResult r{"lower-bound-construction", true, "", 0.0};
    std::ostringstream os;
    try {
        const auto rows = word_growth(6, 0.20);
        std::size_t words = 0;
        bool counts_ok = true;
        bool bound_ok = true;
        for (const auto& row : rows) {
            words += row.realized;
            counts_ok = counts_ok && row.realized == sphere_count(row.L);
            bound_ok = bound_ok && row.within_bound;
            st.max_residual = std::max(st.max_residual, row.max_residual);
            st.min_clearance = std::min(st.min_clearance, row.min_clearance);
            st.orbits += row.realized;
        }
        r.pass = counts_ok && bound_ok;
        os << "words=" << words << " all_counts_match=" << counts_ok << " T_within_sqrt2(Ltot+1)=" << bound_ok;
    } catch (const Error& e) {
        r.pass = false;
        os << "error=" << e.what();
    }
    r.seconds = since(t0);
    r.pass = r.pass && r.seconds < 300.0;
    r.detail = os.str();
    return r;
}

CheckResult check_threshold() {
    const auto t0 = Clock::now();
    CheckResult r{"admissibility-threshold", true, "", 0.0};
    const Disk probe_at{{0, 0}, 0.0};
    auto hits = [&](double r0) {
        return hull_intersects_disk(Disk{{-1, -1}, r0}, Disk{{0, 1}, r0}, Disk{probe_at.center, r0});
    };
    double lo = 0.1;
    double hi = 0.3;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        (hits(mid) ? hi : lo) = mid;
    }
    const double flip = 0.5 * (lo + hi);
    const double err = std::abs(flip - std::sqrt(5.0) / 10.0);
    std::size_t pairs = 0;
    std::size_t allowed = 0;
    std::size_t collinear_rejected = 0;
    for (const auto& l1 : short_passages()) {
        for (const auto& l2 : short_passages()) {
            if (l2 == l1) {
                collinear_rejected += edge_allowed(l1, l2, 0.20) ? 0 : 1;
                continue;
            }
            ++pairs;
            allowed += edge_allowed(l1, l2, 0.20) ? 1 : 0;
        }
    }
    r.seconds = since(t0);
    r.pass = err <= 1e-9 && hits(0.23) && !hits(0.22) && allowed == pairs && collinear_rejected == 8;
    r.detail = "flip_r0=" + fmt(flip) + " err=" + fmt(err) + " allowed=" + fmt(static_cast<unsigned long>(allowed)) + "/" +
               fmt(static_cast<unsigned long>(pairs)) + " collinear_rejected=" + fmt(static_cast<unsigned long>(collinear_rejected)) + "/8";
    return r;
}

CheckResult check_commutator(SuiteState& st) {
    const auto t0 = Clock::now();
    CheckResult r{"commutator-ceiling", true, "", 0.0};
    std::vector<double> ratios;
    bool within = true;
    bool words_ok = true;
    std::ostringstream os;
    const Word target = [] {
        std::string s;
        for (int i = 0; i < 50; ++i) s += "abAB";
        return Word::parse(s);
    }();
    for (double r0 : {0.20, 0.10, 0.05, 0.01}) {
        const auto c = commutator_ceiling(50, r0);
        ratios.push_back(c.ratio);
        within = within && c.ratio <= c.bound + 0.02;
        words_ok = words_ok && c.word == target;
        st.record(c.reflection_residual, c.clearance);
        os << "r0=" << fmt(r0) << ":" << fmt(c.ratio) << "<=" << fmt(c.bound) << " ";
    }
    bool decreasing = true;
    for (std::size_t i = 1; i < ratios.size(); ++i) decreasing = decreasing && ratios[i] < ratios[i - 1];
    const double final_gap = std::abs(ratios.back() - kSqrt2 / 2.0);
    r.seconds = since(t0);
    r.pass = within && decreasing && final_gap <= 0.03 && words_ok && r.seconds < 60.0;
    os << "decreasing=" << decreasing << " final_gap=" << fmt(final_gap) << " words=(abAB)^50:" << words_ok;
    r.detail = os.str();
    return r;
}

CheckResult check_achievable(SuiteState& st) {
    const auto t0 = Clock::now();
    CheckResult r{"achievable-ball", true, "", 0.0};
    const double r0 = 0.20;
    const std::vector<std::pair<std::string, EndPrefix>> dirs{
        {"(ab)^inf", EndPrefix::periodic(Word(), Word::parse("ab"))},
        {"(abAB)^inf", EndPrefix::periodic(Word(), Word::parse("abAB"))},
        {"a^inf", EndPrefix::periodic(Word(), Word::parse("a"))}};
    const std::vector<double> targets{0.1, 0.3, 0.5, 0.7};
    const std::size_t n = dirs.size() * targets.size();
    const auto pts = parallel_map(n, [&](std::size_t i) { return achievable_point(targets[i % 4], dirs[i / 4].second, 100, r0); });
    double worst = 0.0;
    bool prefix_ok = true;
    for (const auto& p : pts) {
        worst = std::max(worst, std::abs(p.speed - p.target_speed));
        prefix_ok = prefix_ok && p.orbit.word == p.target_word && p.prefix_depth == 100;
        st.record(p.orbit.reflection_residual, p.orbit.clearance);
    }
    r.seconds = since(t0);
    r.pass = worst <= 0.05 && prefix_ok;
    r.detail = "cases=" + fmt(static_cast<unsigned long>(n)) + " max_speed_err=" + fmt(worst) + " exact_prefix=" + (prefix_ok ? "1" : "0");
    return r;
}

CheckResult check_entropy(SuiteState& st) {
    const auto t0 = Clock::now();
    CheckResult r{"entropy-constants", true, "", 0.0};
    const double h = htop_extrapolated();
    const double h_err = std::abs(h - 5.8815488);
    std::vector<double> budgets;
    for (int lam = 10; lam <= 40; lam += 2) budgets.push_back(lam);
    const auto fit = growth_exponent(0.20, budgets, 6, 100, 7);
    std::size_t visit_fail = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    for (const auto& seg : st.random_orbits) {
        const auto vc = visit_bound_check(seg, 0.05);
        if (!vc.holds()) ++visit_fail;
        min_slack = std::min(min_slack, vc.slack());
    }
    r.seconds = since(t0);
    r.pass = h_err < 1e-6 && fit.slope >= std::log(3.0) / kSqrt2 - 0.1 && visit_fail == 0 && st.random_orbits.size() == 1000;
    r.detail = "htop=" + fmt(h) + " err=" + fmt(h_err) + " growth_slope=" + fmt(fit.slope) + " certified_slope=" +
               fmt(fit.certified_slope) + " visit_failures=" + fmt(static_cast<unsigned long>(visit_fail)) + "/" +
               fmt(static_cast<unsigned long>(st.random_orbits.size())) + " min_visit_slack=" + fmt(min_slack);
    return r;
}

std::vector<Letter> random_letters(Rng& rng, std::size_t max_len) {
    const std::size_t n = rng.next() % (max_len + 1);
    std::vector<Letter> ls(n);
    for (auto& l : ls) l = static_cast<Letter>(rng.next() % 4);
    return ls;
}

CheckResult check_freegroup() {
    const auto t0 = Clock::now();
    CheckResult r{"free-group-suite", true, "", 0.0};
    Rng rng(99);
    constexpr int kCases = 100000;
    std::size_t idem = 0;
    std::size_t assoc = 0;
    std::size_t tri = 0;
    for (int i = 0; i < kCases; ++i) {
        const auto ls = random_letters(rng, 24);
        const Word w = reduce(ls);
        if (reduce(w.letters()) == w) ++idem;
    }
    for (int i = 0; i < kCases; ++i) {
        const Word u = reduce(random_letters(rng, 12));
        const Word v = reduce(random_letters(rng, 12));
        const Word w = reduce(random_letters(rng, 12));
        if (concat(concat(u, v), w) == concat(u, concat(v, w))) ++assoc;
    }
    for (int i = 0; i < kCases; ++i) {
        const Word u = reduce(random_letters(rng, 12));
        const Word v = reduce(random_letters(rng, 12));
        const Word w = reduce(random_letters(rng, 12));
        if (cayley_distance(u, w) <= cayley_distance(u, v) + cayley_distance(v, w)) ++tri;
    }
    bool balls = true;
    std::uint64_t cum = 0;
    for (int n = 0; n <= 8; ++n) {
        cum += enumerate_words(n).size();
        balls = balls && cum == ball_count(n);
    }
    r.seconds = since(t0);
    r.pass = idem == kCases && assoc == kCases && tri == kCases && balls;
    r.detail = "idempotent=" + fmt(static_cast<unsigned long>(idem)) + " associative=" + fmt(static_cast<unsigned long>(assoc)) +
               " triangle=" + fmt(static_cast<unsigned long>(tri)) + " of " + fmt(kCases) + " ball_count_n<=8=" + (balls ? "1" : "0");
    return r;
}

struct ThreeDisk {
    LatticePoint k0, k1, k2;
    double r0;
};

CheckResult check_certificate(SuiteState& st) {
    const auto t0 = Clock::now();
    CheckResult r{"reflection-certificate", true, "", 0.0};
    const std::vector<ThreeDisk> cases{{{0, 0}, {1, 1}, {2, 0}, 0.2},  {{0, 0}, {1, 0}, {1, 1}, 0.2},
                                       {{0, 0}, {1, -1}, {3, 0}, 0.1}, {{0, 0}, {0, 1}, {1, 2}, 0.15},
                                       {{0, 0}, {2, 1}, {1, 2}, 0.2},  {{0, 0}, {1, 1}, {0, 2}, 0.05}};
    double worst = 0.0;
    for (const auto& c : cases) {
        const auto orb = realize({c.k0, c.k1, c.k2}, c.r0);
        st.record(orb.reflection_residual, orb.clearance);
        worst = std::max(worst, std::abs(orb.duration - three_disk_grid_oracle(c.k0, c.k1, c.k2, c.r0)));
    }
    r.seconds = since(t0);
    r.pass = st.max_residual < 1e-8 && st.min_clearance >= -1e-10 && worst <= 1e-6;
    r.detail = "orbits=" + fmt(static_cast<unsigned long>(st.orbits)) + " max_residual=" + fmt(st.max_residual) +
               " min_clearance=" + fmt(st.min_clearance) + " max_oracle_gap=" + fmt(worst);
    return r;
}

}  // namespace

double three_disk_grid_oracle(const LatticePoint& k0, const LatticePoint& k1, const LatticePoint& k2, double r0) {
    const Vec2 c0 = k0.to_vec();
    const Vec2 c1 = k1.to_vec();
    const Vec2 c2 = k2.to_vec();
    auto f = [&](double a, double b) {
        const Vec2 p0 = c0 + Vec2{std::cos(a), std::sin(a)} * r0;
        const Vec2 p1 = c1 + Vec2{std::cos(b), std::sin(b)} * r0;
        return (p1 - p0).norm() + (c2 - p1).norm() - r0;
    };
    constexpr double kPi = std::numbers::pi;
    int N = 1000;
    double ca = 0.0;
    double cb = 0.0;
    double w = kPi;
    double best = std::numeric_limits<double>::infinity();
    for (int level = 0; level < 14; ++level) {
        double ba = ca;
        double bb = cb;
        for (int i = 0; i <= N; ++i) {
            const double a = ca - w + 2.0 * w * i / N;
            for (int j = 0; j <= N; ++j) {
                const double b = cb - w + 2.0 * w * j / N;
                const double v = f(a, b);
                if (v < best) {
                    best = v;
                    ba = a;
                    bb = b;
                }
            }
        }
        ca = ba;
        cb = bb;
        w = 4.0 * w / N;
        N = 100;
    }
    return best;
}

std::vector<CheckResult> run_acceptance(const std::function<void(const CheckResult&)>& on_result) {
    SuiteState st;
    std::vector<CheckResult> out;
    auto run = [&](const char* name, auto&& fn) {
        CheckResult res;
        try {
            res = fn();
        } catch (const std::exception& e) {
            res.name = name;
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        if (on_result) on_result(res);
        out.push_back(res);
    };
    run("corridor-family", [&] { return check_corridor(st); });
    run("radial-upper-bound", [&] { return check_radial(st); });
    run("lower-bound-construction", [&] { return check_lower_bound(st); });
    run("admissibility-threshold", [&] { return check_threshold(); });
    run("commutator-ceiling", [&] { return check_commutator(st); });
    run("achievable-ball", [&] { return check_achievable(st); });
    run("entropy-constants", [&] { return check_entropy(st); });
    run("free-group-suite", [&] { return check_freegroup(); });
    run("reflection-certificate", [&] { return check_certificate(st); });
    return out;
}

}  // namespace hbill
