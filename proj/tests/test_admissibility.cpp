#include <doctest.h>

#include <cmath>

#include "hbill/admissibility.hpp"
#include "hbill/error.hpp"
#include "hbill/flow.hpp"

using namespace hbill;

TEST_SUITE("admissibility") {

TEST_CASE("is_admissible examples") {
    const auto r = check_admissible({{0, 0}, {1, 0}, {2, 0}}, 0.2);
    CHECK_FALSE(r.ok);
    CHECK(r.condition == 3);
    CHECK(r.index == 1);

    CHECK(is_admissible({{0, 0}, {1, 0}, {1, 1}}, 0.2));
    CHECK(is_admissible({{0, 0}}, 0.2));
    CHECK(is_strongly_admissible({{0, 0}}, 0.2));
    CHECK(is_strongly_admissible({{0, 0}, {1, 1}, {2, 0}}, 0.2) == is_admissible({{0, 0}, {1, 1}, {2, 0}}, 0.2));
    CHECK_FALSE(is_strongly_admissible({{0, 0}, {2, 1}}, 0.2));
}

TEST_CASE("condition 1 anchors the itinerary") {
    const Itinerary it{{1, 0}, {2, 1}};
    const auto r = check_admissible(it, 0.2);
    CHECK_FALSE(r.ok);
    CHECK(r.condition == 1);
    CHECK(check_admissible(it, 0.2, false).ok);
}

TEST_CASE("coinciding centres are rejected") {
    const auto r = check_admissible({{0, 0}, {0, 0}}, 0.2);
    CHECK_FALSE(r.ok);
    CHECK(r.condition == 0);
}

TEST_CASE("condition 2 sees a third obstacle") {
    const auto r = check_admissible({{0, 0}, {2, 0}}, 0.2);
    CHECK_FALSE(r.ok);
    CHECK(r.condition == 2);
}

TEST_CASE("pair near the origin flips at sqrt(5)/10") {
    const double thr = std::sqrt(5.0) / 10.0;
    const Itinerary it{{-1, -1}, {0, 1}};
    CHECK(check_admissible(it, thr - 1e-6, false).ok);
    CHECK_FALSE(check_admissible(it, thr + 1e-6, false).ok);
}

TEST_CASE("model range") {
    CHECK_THROWS_AS(is_admissible({{0, 0}}, 0.0), Error);
    CHECK_THROWS_AS(is_admissible({{0, 0}}, 0.36), Error);
}

TEST_CASE("edge_allowed examples") {
    CHECK(edge_allowed({1, 0}, {0, 1}, 0.2));
    CHECK_FALSE(edge_allowed({1, 0}, {1, 0}, 0.2));
    CHECK_THROWS_AS(edge_allowed({2, 0}, {0, 1}, 0.2), Error);
}

TEST_CASE("every distinct non-reversing pair is an edge") {
    for (double r0 : {0.10, 0.15, 0.20, 0.22}) {
        for (const auto& l1 : short_passages()) {
            for (const auto& l2 : short_passages()) {
                if (l2 == l1 || (l2.m == -l1.m && l2.n == -l1.n)) continue;
                CAPTURE(r0);
                CHECK(edge_allowed(l1, l2, r0));
            }
        }
    }
}

TEST_CASE("admissibility is monotone in r0") {
    Rng rng(4);
    for (int k = 0; k < 300; ++k) {
        std::vector<PassageVector> ls;
        const int n = 1 + int(rng.uniform() * 8);
        for (int i = 0; i < n; ++i) ls.push_back(short_passages()[rng.next() % 8]);
        const auto it = itinerary_from_passages({0, 0}, ls);
        const double r_hi = rng.uniform(0.05, 0.35);
        if (!is_admissible(it, r_hi)) continue;
        for (double r = r_hi; r > 0.01; r *= 0.7) CHECK(is_admissible(it, r));
    }
}

TEST_CASE("itinerary text round trip") {
    const Itinerary it{{0, 0}, {1, 0}, {-2, 13}};
    CHECK(format_itinerary(it) == "0,0 1,0 -2,13");
    CHECK(parse_itinerary(format_itinerary(it)) == it);
    CHECK(parse_itinerary("  0,0\t1,1\n") == Itinerary{{0, 0}, {1, 1}});
    CHECK_THROWS_AS(parse_itinerary("0,0 1"), Error);
    CHECK_THROWS_AS(parse_itinerary("0,x"), Error);
}

TEST_CASE("passages") {
    const Itinerary it{{0, 0}, {1, 0}, {1, 1}};
    const auto ls = passages_of(it);
    CHECK(ls == std::vector<PassageVector>{{1, 0}, {0, 1}});
    CHECK(itinerary_from_passages({0, 0}, ls) == it);
    for (const auto& l : short_passages()) CHECK(is_short_passage(l));
    CHECK_FALSE(is_short_passage({0, 0}));
    CHECK_FALSE(is_short_passage({2, 0}));
}

}  // TEST_SUITE
