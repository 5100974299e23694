#include <doctest.h>

#include <cmath>

#include "hbill/checks.hpp"
#include "hbill/compiler.hpp"
#include "hbill/entropy.hpp"
#include "hbill/error.hpp"
#include "hbill/realize.hpp"
#include "hbill/rotation.hpp"

using namespace hbill;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::Domain;
}

double center_sum(const Itinerary& it) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < it.size(); ++i) s += (it[i + 1].to_vec() - it[i].to_vec()).norm();
    return s;
}

}  // namespace

TEST_SUITE("realize") {

TEST_CASE("free segment") {
    const auto bl = minimize_length({{0, 0}, {1, 1}}, 0.2);
    CHECK(bl.length == doctest::Approx(std::sqrt(2.0) - 0.4).epsilon(1e-12));
    CHECK(std::abs(bl.points[0].x - bl.points[0].y) < 1e-12);
    CHECK(std::abs(bl.points[1].x - bl.points[1].y) < 1e-12);
    const auto orb = validate_orbit(bl, 0.2);
    CHECK(orb.reflection_residual == 0.0);
}

TEST_CASE("best_corner") {
    const Vec2 p = best_corner({0, 0}, 0.2, {-1, 1}, {1, 1});
    CHECK(p.x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(0.2));
    const Vec2 q = best_corner({0, 0}, 0.2, {-1, 0.1}, {1, 0.1});
    CHECK(std::abs(q.y - 0.1) < 1e-12);
    CHECK(q.x < 0.0);
}

TEST_CASE("corridor periodic minimizer") {
    const double r0 = 0.2;
    for (long n = 1; n <= 30; ++n) {
        const Itinerary it{{0, 0}, {n, n + 1}};
        MinimizeOptions opt;
        opt.require_admissible = false;
        const auto bl = minimize_periodic(it, {2 * n + 1, 2 * n + 1}, r0, opt);
        CAPTURE(n);
        CHECK(std::abs(bl.length / corridor_period(n, r0) - 1.0) < 1e-9);
        if (n == 1) {
            const auto [P, Q] = corridor_points(1, r0);
            CHECK((bl.points[0] - P).norm() < 1e-8);
            CHECK((bl.points[1] - Q).norm() < 1e-8);
            CHECK(validate_orbit(bl, r0).reflection_residual < 1e-8);
        }
    }
}

TEST_CASE("gates") {
    CHECK(code_of([] { (void)minimize_length({{0, 0}, {1, 0}, {2, 0}}, 0.2); }) == ErrorCode::NotAdmissible);
    CHECK(code_of([] { (void)minimize_periodic({{0, 0}, {1, 0}}, {0, 0}, 0.2); }) == ErrorCode::DegenerateOrbit);
}

TEST_CASE("compiled a^3 certificate") {
    const auto orb = realize(compile(BlockWord::parse("aaa"), 0.2), 0.2);
    CHECK(orb.word.str() == "aaa");
    CHECK(orb.reflection_residual < 1e-8);
    CHECK(orb.clearance >= -1e-10);
}

TEST_CASE("descent and length bounds") {
    Rng rng(31);
    const double r0 = 0.2;
    for (int k = 0; k < 40; ++k) {
        const auto w = random_word(4 + rng.next() % 12, rng);
        const auto it = compile(BlockWord::from_word(w), r0);
        CAPTURE(w.str());
        double prev = center_sum(it) + 1e-12;
        for (long s = 1; s <= 6; ++s) {
            MinimizeOptions opt;
            opt.max_sweeps = s;
            double len = 0.0;
            try {
                len = minimize_length(it, r0, opt).length;
            } catch (const Error& e) {
                REQUIRE(e.code() == ErrorCode::Convergence);
                continue;
            }
            CHECK(len <= prev + 1e-12);
            prev = len;
        }
        const auto bl = minimize_length(it, r0);
        CHECK(bl.length <= center_sum(it));
        CHECK(bl.length >= center_sum(it) - 2.0 * r0 * double(it.size() - 1) - 1e-12);
    }
}

TEST_CASE("three-disk oracle") {
    const double r0 = 0.2;
    const Itinerary cases[] = {{{0, 0}, {1, 0}, {1, 1}}, {{0, 0}, {1, 1}, {2, 0}}, {{0, 0}, {1, 0}, {2, 1}}};
    for (const auto& it : cases) {
        const double v = minimize_length(it, r0).length;
        CHECK(std::abs(v - three_disk_grid_oracle(it[0], it[1], it[2], r0)) < 1e-6);
    }
}

TEST_CASE("flow relaunch reproduces corners") {
    Rng rng(8);
    const double r0 = 0.2;
    for (int k = 0; k < 30; ++k) {
        const auto w = random_word(10 + rng.next() % 40, rng);
        const auto orb = realize(compile(BlockWord::from_word(w), r0), r0);
        const auto& bl = orb.broken_line;
        CAPTURE(w.str());
        for (std::size_t i = 0; i + 1 < bl.chord_count(); ++i) {
            const auto [a, b] = bl.chord(i);
            const double len = (b - a).norm();
            if (len < 1e-9) continue;
            const auto seg = simulate({a, (b - a) * (1.0 / len)}, r0, len * (1.0 + 1e-9) + 1e-12);
            const Vec2 hit = seg.collisions.empty() ? seg.final.position : seg.collisions.front().point;
            CHECK((hit - b).norm() < 1e-6);
        }
        // a short orbit followed from its first corner
        const std::size_t legs = std::min<std::size_t>(bl.chord_count(), 6);
        const auto [a0, b0] = bl.chord(0);
        double T = 0.0;
        for (std::size_t i = 0; i < legs; ++i) T += bl.chord_length(i);
        const auto seg = simulate({a0, (b0 - a0).normalized()}, r0, T);
        for (std::size_t i = 0; i + 1 < legs && i < seg.collisions.size(); ++i)
            CHECK((seg.collisions[i].point - bl.points[i + 1]).norm() < 1e-6);
    }
}

TEST_CASE("commutator loop") {
    const double r0 = 0.2;
    const Itinerary it{{0, 0}, {1, -1}, {2, 0}, {1, 1}};
    const auto bl = minimize_periodic(it, {0, 0}, r0);
    const auto orb = validate_orbit(bl, r0);
    CHECK(orb.reflection_residual < 1e-8);
    CHECK(orb.clearance >= -1e-10);
    CHECK(orb.word.length() == 4);
    // a cyclic conjugate of the commutator
    const std::string twice = orb.word.str() + orb.word.str();
    CHECK(twice.find("abAB") != std::string::npos);
}

}  // TEST_SUITE
