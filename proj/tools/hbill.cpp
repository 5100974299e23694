// Command-line front end.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "hbill/checks.hpp"
#include "hbill/compiler.hpp"
#include "hbill/entropy.hpp"
#include "hbill/error.hpp"
#include "hbill/io.hpp"
#include "hbill/parallel.hpp"
#include "hbill/realize.hpp"
#include "hbill/rotation.hpp"

using namespace hbill;
using nlohmann::json;

namespace {

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::InvalidModel:
        case ErrorCode::OutOfGuarantee:
        case ErrorCode::NotAdmissible:
        case ErrorCode::Obstructed:
            return 3;
        case ErrorCode::Convergence:
        case ErrorCode::InvalidMinimizer:
            return 4;
        case ErrorCode::Parse:
        case ErrorCode::Domain:
            return 2;
        default:
            return 1;
    }
}

struct Sink {
    std::string path;
    std::unique_ptr<std::ofstream> file;

    std::ostream& open() {
        if (path.empty() || path == "-") return std::cout;
        file = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file) throw Error(ErrorCode::Domain, "cannot open " + path);
        return *file;
    }
};

LatticePoint parse_point(const std::string& s) {
    const auto it = parse_itinerary(s);
    if (it.size() != 1) throw Error(ErrorCode::Parse, "expected one m,n pair: " + s);
    return it.front();
}

struct StateArgs {
    double x = 0.5, y = 0.5, vx = 1.0, vy = 0.0;
    double angle = std::nan(""), tilt = 0.0;

    void add(CLI::App* c) {
        c->add_option("--x", x, "initial x");
        c->add_option("--y", y, "initial y");
        c->add_option("--vx", vx, "initial velocity x (normalised)");
        c->add_option("--vy", vy, "initial velocity y (normalised)");
        c->add_option("--angle", angle, "start on O_(0,0) at this footpoint angle");
        c->add_option("--tilt", tilt, "outgoing angle from the normal, with --angle");
    }

    PhaseState state(double r0) const {
        if (!std::isnan(angle)) return boundary_state(r0, angle, tilt);
        const double n = std::hypot(vx, vy);
        if (!(n > 0.0)) throw Error(ErrorCode::Domain, "zero velocity");
        return {{x, y}, {vx / n, vy / n}};
    }

    json config() const {
        if (!std::isnan(angle)) return {{"angle", angle}, {"tilt", tilt}};
        return {{"x", x}, {"y", y}, {"vx", vx}, {"vy", vy}};
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homotopical rotation experiments for the Sinai billiard"};
    app.require_subcommand(1);
    Sink sink;
    app.add_option("--out", sink.path, "output file (default stdout)");
    double r0 = 0.2;
    std::uint64_t seed = 0;

    auto common = [&](CLI::App* c) {
        c->add_option("--r0", r0, "obstacle radius");
        c->add_option("--out", sink.path, "output file (default stdout)");
    };

    // simulate
    auto* sim = app.add_subcommand("simulate", "flow an initial state, trajectory JSON");
    StateArgs sim_state;
    double sim_T = 10.0;
    common(sim);
    sim_state.add(sim);
    sim->add_option("--T", sim_T, "duration");

    // word
    auto* wrd = app.add_subcommand("word", "word of a trajectory JSON");
    std::string word_in = "-";
    wrd->add_option("--in", word_in, "trajectory JSON (default stdin)");

    // compile
    auto* cmp = app.add_subcommand("compile", "word to strongly admissible itinerary");
    std::string cmp_word;
    long cmp_idle = 0;
    common(cmp);
    cmp->add_option("--word", cmp_word, "reduced word over a, b, A, B")->required();
    cmp->add_option("--idle", cmp_idle, "idle pairs at the first block boundary");

    // realize
    auto* rlz = app.add_subcommand("realize", "itinerary to orbit JSON");
    std::string rlz_it, rlz_shift;
    bool rlz_free = false;
    common(rlz);
    rlz->add_option("--itinerary", rlz_it, "centres, e.g. \"0,0 1,0 1,1\"")->required();
    rlz->add_option("--shift", rlz_shift, "period translation m,n (closed orbit)");
    rlz->add_flag("--no-admissibility", rlz_free, "skip the hull gate (clearance still checked)");

    // corridor
    auto* cor = app.add_subcommand("corridor", "corridor family table CSV");
    long cor_n = 30;
    common(cor);
    cor->add_option("--n-max", cor_n, "largest n");

    // rotate
    auto* rot = app.add_subcommand("rotate", "achievable points or rotation series CSV");
    std::string rot_mode = "achievable";
    std::vector<double> rot_speeds{0.1, 0.3, 0.5, 0.7};
    std::string rot_stem, rot_period = "ab";
    std::size_t rot_depth = 100;
    std::vector<double> rot_grid{50, 100, 200};
    StateArgs rot_state;
    common(rot);
    rot->add_option("--mode", rot_mode, "achievable | series")->check(CLI::IsMember({"achievable", "series"}));
    rot->add_option("--speed", rot_speeds, "target speeds");
    rot->add_option("--stem", rot_stem, "direction stem");
    rot->add_option("--period", rot_period, "direction period");
    rot->add_option("--depth", rot_depth, "prefix depth");
    rot->add_option("--T", rot_grid, "time grid (series)");
    rot_state.add(rot);

    // commutator
    auto* com = app.add_subcommand("commutator", "commutator ceiling table CSV");
    std::vector<double> com_r{0.2, 0.1, 0.05, 0.01};
    long com_k = 50;
    com->add_option("--r0", com_r, "radii");
    com->add_option("--k", com_k, "windings");
    com->add_option("--out", sink.path, "output file (default stdout)");

    // entropy
    auto* ent = app.add_subcommand("entropy", "visit bounds, word growth, growth fit, labels");
    std::string ent_mode = "visits";
    std::size_t ent_orbits = 1000;
    double ent_T = 100.0, ent_eps = 0.05;
    int ent_lmax = 6, ent_exact = 6, ent_samples = 100;
    std::vector<double> ent_budgets;
    StateArgs ent_state;
    common(ent);
    ent->add_option("--mode", ent_mode, "visits | growth | fit | labels")
        ->check(CLI::IsMember({"visits", "growth", "fit", "labels"}));
    ent->add_option("--orbits", ent_orbits, "random orbits (visits)");
    ent->add_option("--seed", seed, "base seed");
    ent->add_option("--T", ent_T, "duration");
    ent->add_option("--eps", ent_eps, "eps0");
    ent->add_option("--lmax", ent_lmax, "largest word length (growth)");
    ent->add_option("--lexact", ent_exact, "exhaustive lengths (fit)");
    ent->add_option("--samples", ent_samples, "samples per longer length (fit)");
    ent->add_option("--budget", ent_budgets, "length budgets (fit), default 10..40 step 2");
    ent_state.add(ent);

    // check
    auto* chk = app.add_subcommand("check", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        std::cout.precision(17);
        if (*sim) {
            const auto seg = simulate(sim_state.state(r0), r0, sim_T);
            json cfg = sim_state.config();
            cfg["r0"] = r0;
            cfg["T"] = sim_T;
            json doc = header_json("trajectory", cfg, seed);
            doc["trajectory"] = to_json(seg);
            sink.open() << dump_json(doc);
        } else if (*wrd) {
            std::stringstream ss;
            if (word_in == "-") {
                ss << std::cin.rdbuf();
            } else {
                std::ifstream f(word_in);
                if (!f) throw Error(ErrorCode::Domain, "cannot open " + word_in);
                ss << f.rdbuf();
            }
            json doc;
            try {
                doc = json::parse(ss.str());
            } catch (const json::exception& e) {
                throw Error(ErrorCode::Parse, e.what());
            }
            std::cout << word_from_trajectory_json(doc).str() << "\n";
        } else if (*cmp) {
            const auto c = compile_code(BlockWord::parse(cmp_word), r0);
            auto it = c.centers;
            if (cmp_idle > 0) {
                if (c.boundary_corners.empty()) throw Error(ErrorCode::Insertion, "no block boundary to dilute at");
                it = dilute(it, cmp_idle, c.boundary_corners.front(), r0);
            }
            sink.open() << format_itinerary(it) << "\n";
        } else if (*rlz) {
            const auto it = parse_itinerary(rlz_it);
            MinimizeOptions opt;
            opt.require_admissible = !rlz_free;
            const auto bl = rlz_shift.empty() ? minimize_length(it, r0, opt)
                                              : minimize_periodic(it, parse_point(rlz_shift), r0, opt);
            const auto orb = validate_orbit(bl, r0);
            json cfg{{"r0", r0}, {"itinerary", rlz_it}, {"shift", rlz_shift}, {"admissibility", !rlz_free}};
            json doc = header_json("orbit", cfg, seed);
            doc["orbit"] = to_json(orb);
            sink.open() << dump_json(doc);
        } else if (*cor) {
            const auto rows = corridor_family(cor_n, r0);
            auto& os = sink.open();
            CsvWriter w(os, "corridor", {{"r0", r0}, {"n_max", cor_n}}, seed,
                        {"n", "r0", "T_closed", "T_simulated", "T_realized", "word_length", "realized_word_length",
                         "ratio", "sqrt2_gap", "corner_error", "reflection_residual", "clearance", "admissible"});
            for (const auto& r : rows)
                w.row({fmt(r.n), fmt(r0), fmt(r.T_closed), fmt(r.T_simulated), fmt(r.T_realized),
                       fmt(static_cast<unsigned long>(r.word_length)),
                       fmt(static_cast<unsigned long>(r.realized_word_length)), fmt(r.ratio),
                       fmt(std::sqrt(2.0) - r.ratio), fmt(r.corner_error), fmt(r.reflection_residual),
                       fmt(r.clearance), r.admissible ? "1" : "0"});
        } else if (*rot && rot_mode == "achievable") {
            const auto dir = EndPrefix::periodic(Word::parse(rot_stem), Word::parse(rot_period));
            const auto pts = parallel_map(rot_speeds.size(),
                                          [&](std::size_t i) { return achievable_point(rot_speeds[i], dir, rot_depth, r0); });
            const std::string dname = rot_stem + "(" + rot_period + ")^inf";
            json cfg{{"mode", rot_mode}, {"r0", r0}, {"speeds", rot_speeds}, {"stem", rot_stem},
                     {"period", rot_period}, {"depth", rot_depth}};
            CsvWriter w(sink.open(), "rotation", cfg, seed,
                        {"experiment", "r0", "direction", "target_speed", "T", "word_length", "speed", "prefix_depth",
                         "idle_pairs", "reflection_residual", "clearance"});
            for (const auto& p : pts)
                w.row({"achievable", fmt(r0), dname, fmt(p.target_speed), fmt(p.orbit.duration),
                       fmt(static_cast<unsigned long>(p.orbit.word.length())), fmt(p.speed),
                       fmt(static_cast<unsigned long>(p.prefix_depth)), fmt(p.idle_pairs),
                       fmt(p.orbit.reflection_residual), fmt(p.orbit.clearance)});
        } else if (*rot) {
            const auto series = rotation_series(rot_state.state(r0), r0, rot_grid);
            json cfg = rot_state.config();
            cfg["mode"] = rot_mode;
            cfg["r0"] = r0;
            cfg["T"] = rot_grid;
            CsvWriter w(sink.open(), "rotation", cfg, seed,
                        {"experiment", "r0", "direction", "target_speed", "T", "word_length", "speed", "prefix_depth",
                         "idle_pairs", "reflection_residual", "clearance"});
            if (series.degenerate) std::cerr << "warning: degenerate orbit, no estimates\n";
            for (const auto& e : series.estimates)
                w.row({"series", fmt(r0), e.word.str(), "", fmt(e.T), fmt(static_cast<unsigned long>(e.word.length())),
                       fmt(e.speed), fmt(static_cast<unsigned long>(e.prefix_depth)), "", "", ""});
        } else if (*com) {
            const auto res = parallel_map(com_r.size(), [&](std::size_t i) { return commutator_ceiling(com_k, com_r[i]); });
            CsvWriter w(sink.open(), "commutator", {{"r0", com_r}, {"k", com_k}}, seed,
                        {"r0", "k", "T", "word_length", "ratio", "bound", "reflection_residual", "clearance"});
            for (std::size_t i = 0; i < res.size(); ++i)
                w.row({fmt(com_r[i]), fmt(com_k), fmt(res[i].T), fmt(static_cast<unsigned long>(res[i].word.length())),
                       fmt(res[i].ratio), fmt(res[i].bound), fmt(res[i].reflection_residual), fmt(res[i].clearance)});
        } else if (*ent && ent_mode == "visits") {
            const auto counts = parallel_map(ent_orbits, [&](std::size_t i) {
                Rng rng(seed + i);
                return visit_bound_check(simulate(random_boundary_state(r0, rng), r0, ent_T), ent_eps);
            });
            json cfg{{"mode", ent_mode}, {"r0", r0}, {"T", ent_T}, {"eps0", ent_eps}, {"orbits", ent_orbits}};
            CsvWriter w(sink.open(), "visits", cfg, seed,
                        {"seed", "T", "eps0", "visits", "bound", "slack", "d1_visits", "d1_bound", "holds"});
            for (std::size_t i = 0; i < counts.size(); ++i) {
                const auto& v = counts[i];
                w.row({fmt(static_cast<unsigned long long>(seed + i)), fmt(ent_T), fmt(ent_eps),
                       fmt(static_cast<unsigned long>(v.visits)), fmt(v.bound), fmt(v.slack()),
                       fmt(static_cast<unsigned long>(v.d1_visits)), fmt(v.d1_bound), v.holds() ? "1" : "0"});
            }
        } else if (*ent && ent_mode == "growth") {
            const auto rows = word_growth(ent_lmax, r0);
            CsvWriter w(sink.open(), "growth", {{"mode", ent_mode}, {"r0", r0}, {"lmax", ent_lmax}}, seed,
                        {"L", "word_count", "realized", "min_T", "max_T", "max_L_total", "within_bound",
                         "max_residual", "min_clearance"});
            for (const auto& r : rows)
                w.row({fmt(r.L), fmt(static_cast<unsigned long long>(r.word_count)),
                       fmt(static_cast<unsigned long long>(r.realized)), fmt(r.min_T), fmt(r.max_T),
                       fmt(static_cast<unsigned long>(r.max_L_total)), r.within_bound ? "1" : "0",
                       fmt(r.max_residual), fmt(r.min_clearance)});
        } else if (*ent && ent_mode == "fit") {
            if (ent_budgets.empty())
                for (int b = 10; b <= 40; b += 2) ent_budgets.push_back(b);
            const auto fit = growth_exponent(r0, ent_budgets, ent_exact, ent_samples, seed);
            json cfg{{"mode", ent_mode}, {"r0", r0}, {"budgets", ent_budgets}, {"lexact", ent_exact},
                     {"samples", ent_samples}};
            CsvWriter w(sink.open(), "growth_fit", cfg, seed,
                        {"budget", "realized", "certified", "slope", "certified_slope", "reference"});
            for (const auto& c : fit.counts)
                w.row({fmt(c.budget), fmt(c.realized), fmt(static_cast<unsigned long long>(c.certified)),
                       fmt(fit.slope), fmt(fit.certified_slope), fmt(std::log(3.0) / std::sqrt(2.0))});
        } else if (*ent) {
            const auto seg = simulate(ent_state.state(r0), r0, ent_T);
            json cfg = ent_state.config();
            cfg["mode"] = ent_mode;
            cfg["r0"] = r0;
            cfg["T"] = ent_T;
            cfg["eps0"] = ent_eps;
            json doc = header_json("labels", cfg, seed);
            doc["labels"] = format_labels(pi_itinerary(seg, ent_eps));
            sink.open() << dump_json(doc);
        } else if (*chk) {
            bool ok = true;
            run_acceptance([&](const CheckResult& r) {
                ok = ok && r.pass;
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << fmt(std::round(r.seconds * 100) / 100)
                          << "s) " << r.detail << std::endl;
            });
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
