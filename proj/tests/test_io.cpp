#include <doctest.h>

#include <clocale>
#include <sstream>

#include "hbill/compiler.hpp"
#include "hbill/error.hpp"
#include "hbill/io.hpp"
#include "hbill/realize.hpp"

using namespace hbill;

TEST_SUITE("io") {

TEST_CASE("number formatting") {
    CHECK(fmt(0.1) == "0.1");
    CHECK(fmt(1.0) == "1");
    CHECK(fmt(-2.5e-10) == "-2.5e-10");
    CHECK(fmt(42) == "42");
    CHECK(fmt(-7L) == "-7");
    CHECK(std::stod(fmt(1.0 / 3.0)) == 1.0 / 3.0);
    const char* old = std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
    CHECK(fmt(0.5) == "0.5");
    if (old) std::setlocale(LC_NUMERIC, "C");
}

TEST_CASE("config hash is stable and key-order independent") {
    const nlohmann::json a = {{"r0", 0.2}, {"n_max", 30}};
    nlohmann::json b;
    b["n_max"] = 30;
    b["r0"] = 0.2;
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a).size() == 16);
    CHECK(config_hash(a) != config_hash(nlohmann::json{{"r0", 0.21}, {"n_max", 30}}));
}

TEST_CASE("csv header and rows") {
    std::ostringstream os;
    const nlohmann::json cfg = {{"r0", 0.2}};
    CsvWriter w(os, "corridor", cfg, 7, {"n", "T"});
    w.row({"1", "4.2"});
    CHECK_THROWS_AS(w.row({"1"}), Error);
    const std::string want = "# hbill v1 schema=corridor config_hash=" + config_hash(cfg) + " seed=7\nn,T\n1,4.2\n";
    CHECK(os.str() == want);
}

TEST_CASE("json documents") {
    const auto h = header_json("orbit", {{"r0", 0.2}}, 3);
    CHECK(h["version"] == "v1");
    CHECK(h["schema"] == "orbit");
    CHECK(h["seed"] == 3);

    const auto seg = simulate({{0.5, 0.5}, {1.0, 0.0}}, 0.2, 2.0);
    const auto j = to_json(seg);
    CHECK(word_from_trajectory_json(j).str() == "aa");
    CHECK(word_from_trajectory_json(nlohmann::json{{"trajectory", j}}).str() == "aa");

    const auto orb = realize(compile(BlockWord::parse("abAB"), 0.2), 0.2);
    const auto oj = to_json(orb);
    CHECK(oj["word"] == "abAB");
    CHECK(oj["itinerary"] == "0,0 1,0 2,1 1,2 1,1 0,0");
    CHECK(dump_json(oj).back() == '\n');
    CHECK(dump_json(oj) == dump_json(to_json(realize(compile(BlockWord::parse("abAB"), 0.2), 0.2))));
}

}  // TEST_SUITE
