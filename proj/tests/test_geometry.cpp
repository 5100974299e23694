#include <doctest.h>

#include <cmath>
#include <random>

#include "hbill/error.hpp"
#include "hbill/geometry.hpp"

using namespace hbill;

TEST_SUITE("geometry") {

TEST_CASE("dist_point_segment examples") {
    CHECK(dist_point_segment({0, 0}, {{-1, -1}, {0, 1}}) == doctest::Approx(1.0 / std::sqrt(5.0)).epsilon(1e-15));
    CHECK(dist_point_segment({0, 0}, {{0, 0}, {1, 0}}) == 0.0);
    CHECK(dist_point_segment({0, 1}, {{-1, 0}, {1, 0}}) == 1.0);
    CHECK(dist_point_segment({3, 0}, {{-1, 0}, {1, 0}}) == 2.0);
}

TEST_CASE("dist_point_segment matches dense sampling") {
    const Vec2 a{-1, -1};
    const Vec2 b{0, 1};
    double best = 1e9;
    constexpr int kN = 1000000;
    for (int i = 0; i <= kN; ++i) best = std::min(best, (a + (b - a) * (double(i) / kN)).norm());
    CHECK(std::abs(best - dist_point_segment({0, 0}, {a, b})) < 1e-9);
}

TEST_CASE("hull_intersects_disk examples") {
    auto probe = [](double r) { return hull_intersects_disk({{-1, -1}, r}, {{0, 1}, r}, {{0, 0}, r}); };
    CHECK_FALSE(probe(0.22));
    CHECK(probe(0.23));
    CHECK(hull_intersects_disk({{0, 0}, 0.01}, {{2, 0}, 0.01}, {{1, 0}, 0.01}));
    CHECK_THROWS_AS(hull_intersects_disk({{0, 0}, 0.1}, {{2, 0}, 0.2}, {{1, 0}, 0.1}), Error);
}

TEST_CASE("hull_intersects_disk is symmetric and monotone in r0") {
    std::mt19937 g(3);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int i = 0; i < 2000; ++i) {
        const LatticePoint k1{c(g), c(g)}, k2{c(g), c(g)}, k3{c(g), c(g)};
        bool seen = false;
        for (double r = 0.01; r < 0.35; r += 0.01) {
            const bool h = hull_intersects_disk({k1, r}, {k2, r}, {k3, r});
            CHECK(h == hull_intersects_disk({k2, r}, {k1, r}, {k3, r}));
            if (seen) CHECK(h);
            seen = seen || h;
        }
    }
}

TEST_CASE("ray_disk_first_hit examples") {
    auto t = ray_disk_first_hit({-1, 0}, {1, 0}, {{0, 0}, 0.25});
    REQUIRE(t);
    CHECK(*t == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_FALSE(ray_disk_first_hit({-1, 0.25}, {1, 0}, {{0, 0}, 0.25}));
    CHECK_FALSE(ray_disk_first_hit({-1, 0.5}, {1, 0}, {{0, 0}, 0.25}));
    CHECK_FALSE(ray_disk_first_hit({1, 0}, {1, 0}, {{0, 0}, 0.25}));
    CHECK_THROWS_AS(ray_disk_first_hit({0.1, 0}, {1, 0}, {{0, 0}, 0.25}), Error);
}

TEST_CASE("ray_disk_first_hit lands on the circle") {
    std::mt19937_64 g(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int hits = 0;
    for (int i = 0; i < 100000; ++i) {
        const Vec2 o{3 * u(g), 3 * u(g)};
        if (o.norm() < 0.3) continue;
        const Vec2 d = Vec2{u(g), u(g)}.normalized();
        if (auto t = ray_disk_first_hit(o, d, {{0, 0}, 0.3})) {
            ++hits;
            CHECK(std::abs((o + d * *t).norm() - 0.3) < 1e-10);
        }
    }
    CHECK(hits > 1000);
}

TEST_CASE("reflect examples and invariants") {
    const Vec2 r1 = reflect({1, 0}, {-1, 0});
    CHECK(r1.x == doctest::Approx(-1.0));
    CHECK(r1.y == doctest::Approx(0.0));
    const double s = 1.0 / std::sqrt(2.0);
    const Vec2 r2 = reflect({1, 0}, {-s, -s});
    CHECK(std::abs(r2.x) < 1e-15);
    CHECK(r2.y == doctest::Approx(-1.0).epsilon(1e-15));
    const Vec2 r3 = reflect({0, -1}, {0, 1});
    CHECK(r3.y == doctest::Approx(1.0));
    CHECK_THROWS_AS(reflect({1, 0}, {0, 1}), Error);

    std::mt19937_64 g(9);
    std::uniform_real_distribution<double> ang(-M_PI, M_PI);
    for (int i = 0; i < 100000; ++i) {
        const double an = ang(g);
        const double av = ang(g);
        const Vec2 n{std::cos(an), std::sin(an)};
        Vec2 v{std::cos(av), std::sin(av)};
        if (std::abs(v.dot(n)) < 1e-6) continue;
        if (v.dot(n) > 0) v = -v;
        const Vec2 w = reflect(v, n);
        CHECK(std::abs(w.norm() - 1.0) < 1e-12);
        CHECK(std::abs(v.dot(n) + w.dot(n)) < 1e-12);
    }
}

TEST_CASE("small obstacle regime") {
    CHECK_NOTHROW(require_small_obstacle(0.35));
    CHECK_THROWS_AS(require_small_obstacle(kSmallObstacleLimit), Error);
    CHECK_THROWS_AS(require_small_obstacle(0.0), Error);
}

}
