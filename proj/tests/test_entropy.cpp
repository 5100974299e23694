#include <doctest.h>

#include <cmath>

#include "hbill/entropy.hpp"
#include "hbill/error.hpp"
#include "hbill/realize.hpp"
#include "hbill/rotation.hpp"

using namespace hbill;

TEST_SUITE("entropy") {

TEST_CASE("label examples") {
    CHECK(label({0.5, 0.5}, 0.05) == PartitionLabel::D1);
    CHECK(label({0.03, 0.5}, 0.05) == PartitionLabel::D2p);
    CHECK(label({0.97, 0.5}, 0.05) == PartitionLabel::D2m);
    CHECK(label({0.5, 1.02}, 0.05) == PartitionLabel::D3p);
    CHECK(label({-3.5, -0.01}, 0.05) == PartitionLabel::D3m);
    CHECK(label({0.02, 0.98}, 0.05) == PartitionLabel::D2p);
    CHECK(label({0.98, 0.98}, 0.05) == PartitionLabel::D2m);
    CHECK_THROWS_AS(label({0.5, 0.5}, 0.5), Error);
    CHECK_THROWS_AS(label({0.5, 0.5}, 0.0), Error);
}

TEST_CASE("labels partition the plane") {
    Rng rng(5);
    const double eps = 0.05;
    int counts[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 1000000; ++i) {
        const Vec2 q{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const double f1 = q.x - std::floor(q.x);
        const double f2 = q.y - std::floor(q.y);
        const bool d2p = f1 <= eps, d2m = f1 >= 1 - eps, d3p = f2 <= eps, d3m = f2 >= 1 - eps;
        PartitionLabel want = PartitionLabel::D1;
        if (d2p) want = PartitionLabel::D2p;
        else if (d2m) want = PartitionLabel::D2m;
        else if (d3p) want = PartitionLabel::D3p;
        else if (d3m) want = PartitionLabel::D3m;
        const auto got = label(q, eps);
        if (got != want) CHECK(got == want);
        ++counts[static_cast<int>(got)];
    }
    for (int c : counts) CHECK(c > 0);
}

TEST_CASE("label strings") {
    CHECK(to_string(PartitionLabel::D1) == "1");
    CHECK(to_string(PartitionLabel::D3m) == "3-");
    CHECK(format_labels({PartitionLabel::D1, PartitionLabel::D2p, PartitionLabel::D3m}) == "1,2+,3-");
    CHECK(format_labels({}).empty());
}

TEST_CASE("entropy constants") {
    const double c0 = 6.0 * std::sqrt(2.0) * std::log(2.0);
    CHECK(std::abs(htop_extrapolated() - 5.8815488) < 1e-6);
    CHECK(htop_upper_constant(0.5) == doctest::Approx(2.0 * c0).epsilon(1e-14));
    double prev = 0.0;
    for (double e = 0.01; e <= 0.5; e += 0.01) {
        const double h = htop_upper_constant(e);
        CHECK(h > prev);
        prev = h;
    }
    CHECK(visit_function(10.0, 0.05) == doctest::Approx(2.0 * std::sqrt(2.0) * 10.0 / 0.95 + 5.0));
    CHECK(htop_finite(1e6, 0.05) == doctest::Approx(htop_upper_constant(0.05)).epsilon(1e-5));
    CHECK_THROWS_AS(htop_upper_constant(0.0), Error);
}

TEST_CASE("visit bound on the corridor orbit") {
    const double r0 = 0.2;
    MinimizeOptions opt;
    opt.require_admissible = false;
    const auto bl = minimize_periodic({{0, 0}, {1, 2}}, {3, 3}, r0, opt);
    const auto seg = unroll(bl, 10.0 * corridor_period(1, r0));
    const auto v = visit_bound_check(seg, 0.05);
    CHECK(v.holds());
    CHECK(v.visits > 0);
    MESSAGE("corridor visits ", v.visits, " bound ", v.bound, " slack ", v.slack());
}

TEST_CASE("visit bound on random orbits") {
    Rng rng(20);
    for (int k = 0; k < 200; ++k) {
        const double r0 = rng.uniform(0.05, 0.34);
        const double T = k < 20 ? rng.uniform(0.001, 0.1) : 100.0;
        const auto seg = simulate(random_boundary_state(r0, rng), r0, T);
        const auto v = visit_bound_check(seg, 0.05);
        CHECK(v.holds());
        if (k < 20) CHECK(v.visits <= 4);
    }
}

TEST_CASE("word growth counts") {
    const auto rows = word_growth(6, 0.2);
    REQUIRE(rows.size() == 6);
    for (const auto& row : rows) {
        CAPTURE(row.L);
        CHECK(row.word_count == sphere_count(row.L));
        CHECK(row.realized == row.word_count);
        CHECK(row.within_bound);
        CHECK(row.max_residual < 1e-8);
        CHECK(row.min_clearance >= -1e-10);
    }
    CHECK(rows[0].realized == 4);
    CHECK(rows[2].realized == 36);
}

TEST_CASE("pi itineraries") {
    // straight flight inside D1
    const auto seg = simulate({{0.3, 0.5}, {1.0, 0.0}}, 0.2, 0.4);
    const auto labels = pi_itinerary(seg, 0.05);
    CHECK(labels.size() == 9);
    for (auto l : labels) CHECK(l == PartitionLabel::D1);

    // nearby orbits separate
    const PhaseState s = boundary_state(0.2, 0.7, 0.3);
    const PhaseState t{s.position, Vec2{std::cos(0.7 + 0.3 + 1e-6), std::sin(0.7 + 0.3 + 1e-6)}};
    const auto a = pi_itinerary(simulate(s, 0.2, 60.0), 0.05);
    const auto b = pi_itinerary(simulate(t, 0.2, 60.0), 0.05);
    REQUIRE(a.size() == b.size());
    CHECK(a != b);
    CHECK(a.front() == b.front());

    // corridor orbit repeats with the period
    const double T1 = corridor_period(1, 0.2);
    MinimizeOptions opt;
    opt.require_admissible = false;
    const auto bl = minimize_periodic({{0, 0}, {1, 2}}, {3, 3}, 0.2, opt);
    const double eps = T1 / 80.0;
    const auto c = pi_itinerary(unroll(bl, 6.0 * T1), eps);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i + 80 < c.size(); ++i) mismatches += c[i] != c[i + 80];
    CHECK(mismatches <= 2);
}

TEST_CASE("random words are reduced") {
    Rng rng(1);
    for (int k = 0; k < 1000; ++k) {
        const auto w = random_word(1 + rng.next() % 30, rng);
        CHECK(reduce(w.letters()) == w);
    }
}

}  // TEST_SUITE
