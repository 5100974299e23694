#include <doctest.h>

#include <cmath>

#include "hbill/compiler.hpp"
#include "hbill/error.hpp"
#include "hbill/realize.hpp"

using namespace hbill;

namespace {

Itinerary compile_text(const char* w, double r0 = 0.2) { return compile(BlockWord::parse(w), r0); }

}  // namespace

TEST_SUITE("compiler") {

TEST_CASE("block words") {
    const auto bw = BlockWord::parse("aaBBBab");
    REQUIRE(bw.blocks.size() == 4);
    CHECK(bw.blocks[0].axis == Axis::a);
    CHECK(bw.blocks[0].exponent == 2);
    CHECK(bw.blocks[1].exponent == -3);
    CHECK(bw.length() == 7);
    CHECK(bw.word().str() == "aaBBBab");
}

TEST_CASE("compile examples") {
    CHECK(format_itinerary(compile_text("aaa")) == "0,0 1,0 2,1 3,0 4,0");
    CHECK(format_itinerary(compile_text("ab")) == "0,0 1,0 1,1 2,2");
    CHECK(format_itinerary(compile_text("aB")) == "0,0 1,0 1,-1 2,-2");
    CHECK(format_itinerary(compile_text("abAB")) == "0,0 1,0 2,1 1,2 1,1 0,0");
}

TEST_CASE("compile errors") {
    CHECK_THROWS_AS(compile(BlockWord{}, 0.2), Error);
    CHECK_THROWS_AS(compile(BlockWord{{{Axis::a, 0}}}, 0.2), Error);
    CHECK_THROWS_AS(compile(BlockWord{{{Axis::a, 1}, {Axis::a, 1}}}, 0.2), Error);
    try {
        (void)compile_text("ab", 0.23);
        FAIL("expected model error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidModel);
    }
}

TEST_CASE("code counts") {
    CHECK(enumerate_codes(0) == 6);
    for (long n = 1; n <= 5; ++n) CHECK(enumerate_codes(n) == 8);
}

TEST_CASE("exhaustive round trip up to length 8") {
    const double r0 = 0.2;
    for (int L = 1; L <= 8; ++L) {
        for (const auto& w : enumerate_words(L)) {
            const auto c = compile_code(BlockWord::from_word(w), r0);
            CAPTURE(w.str());
            REQUIRE(is_strongly_admissible(c.centers, r0));
            CHECK(reduce(predicted_letters(c.centers, r0)) == w);
            const auto orb = realize(c.centers, r0);
            CHECK(orb.word == w);
            // speed floor
            CHECK(c.total_passages() <= w.length() + 1);
            CHECK(orb.duration <= std::sqrt(2.0) * double(c.total_passages()) + 1e-9);
        }
    }
}

TEST_CASE("round trip at other radii") {
    for (double r0 : {0.22, 0.05, 0.01}) {
        for (int L = 1; L <= 5; ++L) {
            for (const auto& w : enumerate_words(L)) {
                CAPTURE(r0);
                CAPTURE(w.str());
                CHECK(realize(compile(BlockWord::from_word(w), r0), r0).word == w);
            }
        }
    }
}

TEST_CASE("long words compile") {
    Word w = Word::parse("abAB");
    Word p;
    for (int k = 0; k < 50; ++k) p = concat(p, w);
    const auto it = compile(BlockWord::from_word(p), 0.2);
    CHECK(realize(it, 0.2).word == p);
}

TEST_CASE("dilution") {
    const double r0 = 0.2;
    const auto c = compile_code(BlockWord::parse("aaa"), r0);
    REQUIRE_FALSE(c.boundary_corners.empty());
    const std::size_t pos = c.boundary_corners.front();
    CHECK(dilute(c.centers, 0, pos, r0) == c.centers);

    const auto base = realize(c.centers, r0);
    const auto d = dilute(c.centers, 4, pos, r0);
    CHECK(d.size() == c.centers.size() + 8);
    CHECK(is_strongly_admissible(d, r0));
    const auto orb = realize(d, r0);
    CHECK(orb.word.str() == "aaa");
    CHECK(orb.duration > base.duration + 4.0);

    const auto alpha = idle_direction(c.centers, pos, r0);
    CHECK(std::abs(alpha.m) == 1);
    CHECK(std::abs(alpha.n) == 1);
    CHECK_THROWS_AS(dilute(c.centers, 1, 0, r0), Error);
}

TEST_CASE("model points are on the obstacles") {
    const double r0 = 0.2;
    const auto it = compile_text("abbAAB", r0);
    const auto pts = model_points(it, r0);
    REQUIRE(pts.size() == it.size());
    for (std::size_t i = 0; i < it.size(); ++i) CHECK(std::abs((pts[i] - it[i].to_vec()).norm() - r0) < 1e-12);
}

}  // TEST_SUITE
