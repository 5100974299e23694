#include <doctest.h>

#include <cmath>

#include "hbill/error.hpp"
#include "hbill/realize.hpp"
#include "hbill/rotation.hpp"

using namespace hbill;

TEST_SUITE("rotation") {

TEST_CASE("corridor period closed form") {
    CHECK(corridor_period(1, 0.2) == doctest::Approx(2.0 * std::sqrt(5.0 + 0.16 - 2.0 * std::sqrt(2.0) * 0.2)));
    CHECK(6.0 / corridor_period(1, 0.2) == doctest::Approx(1.39962).epsilon(1e-5));
}

TEST_CASE("corridor rotation series is constant") {
    const double r0 = 0.2;
    const double T1 = corridor_period(1, r0);
    MinimizeOptions opt;
    opt.require_admissible = false;
    const auto bl = minimize_periodic({{0, 0}, {1, 2}}, {3, 3}, r0, opt);
    std::vector<double> grid;
    for (int k = 1; k <= 10; ++k) grid.push_back(k * T1 * (1.0 + 1e-9));
    const auto seg = unroll(bl, grid.back() + 1e-6);
    const auto series = rotation_series(seg, grid);
    REQUIRE_FALSE(series.degenerate);
    REQUIRE(series.estimates.size() == 10);
    for (std::size_t k = 0; k < 10; ++k) {
        CHECK(series.estimates[k].word.length() == 6 * (k + 1));
        CHECK(series.estimates[k].speed == doctest::Approx(6.0 / T1).epsilon(1e-8));
        if (k > 0) CHECK(series.estimates[k].prefix_depth == 6 * k);
    }
}

TEST_CASE("corridor family rows") {
    const auto rows = corridor_family(30, 0.2);
    REQUIRE(rows.size() == 30);
    double C = 0.0;
    for (const auto& row : rows) {
        CAPTURE(row.n);
        CHECK(std::abs(row.T_realized / row.T_closed - 1.0) < 1e-9);
        CHECK(std::abs(row.T_simulated / row.T_closed - 1.0) < 1e-9);
        CHECK(row.word_length == std::size_t(4 * row.n + 2));
        CHECK(row.realized_word_length == std::size_t(4 * row.n + 2));
        CHECK(row.ratio < std::sqrt(2.0));
        C = std::max(C, double(row.n) * (std::sqrt(2.0) - row.ratio));
    }
    CHECK(C < 1.0);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].ratio > rows[i - 1].ratio);
}

TEST_CASE("degenerate orbit is flagged") {
    const auto s = rotation_series({{0.2, 0.0}, {1.0, 0.0}}, 0.2, {1.0, 2.0});
    CHECK(s.degenerate);
    CHECK(s.estimates.empty());
    CHECK_THROWS_AS(rotation_series({{0.5, 0.5}, {1.0, 0.0}}, 0.2, {2.0, 1.0}), Error);
}

TEST_CASE("random orbit speeds obey the crossing bound") {
    Rng rng(77);
    for (int k = 0; k < 100; ++k) {
        const double r0 = rng.uniform(0.05, 0.34);
        const auto s = rotation_series(random_boundary_state(r0, rng), r0, {50.0, 100.0, 200.0});
        for (const auto& e : s.estimates) CHECK(e.speed <= std::sqrt(2.0) + 2.0 / e.T);
    }
}

TEST_CASE("achievable points") {
    const double r0 = 0.2;
    const auto ab = EndPrefix::periodic(Word{}, Word::parse("ab"));
    const auto p = achievable_point(0.7, ab, 100, r0);
    CHECK(std::abs(p.speed - 0.7) <= 0.05);
    CHECK(p.prefix_depth >= 100);
    CHECK(p.speed <= std::sqrt(2.0) + 2.0 / p.orbit.duration);

    const auto a = EndPrefix::periodic(Word{}, Word::parse("a"));
    const auto q = achievable_point(0.5, a, 50, r0);
    CHECK(std::abs(q.speed - 0.5) <= 0.05);
    CHECK(q.prefix_depth >= 50);

    const auto z = achievable_point(0.0, ab, 100, r0);
    CHECK(z.speed < 0.05);

    CHECK_THROWS_AS(achievable_point(0.8, ab, 100, r0), Error);
    CHECK_THROWS_AS(achievable_point(0.5, ab, 100, 0.23), Error);
}

TEST_CASE("dilution is star-shaped") {
    const double r0 = 0.2;
    const auto e = EndPrefix::periodic(Word::parse("aB"), Word::parse("Ab"));
    for (double s : {0.6, 0.45, 0.3, 0.15}) {
        const auto p = achievable_point(s, e, 80, r0);
        CAPTURE(s);
        CHECK(std::abs(p.speed - s) <= 0.05);
        CHECK(p.prefix_depth >= 80);
    }
}

TEST_CASE("commutator") {
    const auto it = commutator_itinerary(2);
    CHECK(it.size() == 10);
    CHECK(it.front() == LatticePoint{0, 0});
    const auto c1 = commutator_ceiling(1, 0.2);
    CHECK(c1.word.str() == "abAB");
    CHECK(c1.T >= 4.0 * std::sqrt(2.0) * (1.0 - 0.4) - 2.0);
    double prev = 10.0;
    for (double r0 : {0.2, 0.1, 0.05, 0.01}) {
        const auto c = commutator_ceiling(50, r0);
        CAPTURE(r0);
        CHECK(c.ratio <= c.bound + 0.02);
        CHECK(c.ratio < prev);
        CHECK(c.ratio > std::sqrt(2.0) / 2.0);
        prev = c.ratio;
    }
}

TEST_CASE("winding oracle") {
    CHECK(winding_length_oracle(0, 3).length == 0.0);
    const auto w1 = winding_length_oracle(1, 3);
    CHECK(w1.complete);
    CHECK(w1.length == doctest::Approx(4.0 * std::sqrt(2.0)));
    CHECK(winding_length_oracle(2, 3).length == doctest::Approx(8.0 * std::sqrt(2.0)));
}

}  // TEST_SUITE
