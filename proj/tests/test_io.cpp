#include <doctest.h>

#include <json.hpp>

#include "causet/causal.hpp"
#include "causet/io.hpp"
#include "causet/rng.hpp"
#include "causet/svg.hpp"
#include "causet/worldline.hpp"

using namespace causet;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("doubles round-trip through 17 significant digits") {
    CounterStream rng(123);
    for (int i = 0; i < 1000; ++i) {
        const double v = (rng.next_unit() - 0.5) * std::exp(rng.next_in(-20, 20));
        CHECK(std::strtod(io::format_double(v).c_str(), nullptr) == v);
    }
}

TEST_CASE("events CSV round-trips bit-exactly") {
    const Sprinkle s = sprinkle({.n = 300, .edge = 1.0, .seed = 9, .mode = SprinkleMode::FixedN});
    const std::string csv = io::events_to_csv(s.events);
    const std::vector<Event> back = io::events_from_csv(csv);
    CHECK(back == s.events);
}

TEST_CASE("events CSV parse errors carry line numbers") {
    CHECK_THROWS_AS(io::events_from_csv(""), io::ParseError);
    CHECK_THROWS_AS(io::events_from_csv("a,b\n1,2\n"), io::ParseError);
    try {
        io::events_from_csv("t,x\n0.5,0.1\noops,3\n", "bad.csv");
        FAIL("expected ParseError");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("bad.csv:3") != std::string::npos);
    }
    CHECK_THROWS_AS(io::events_from_csv("t,x\n1,2,3\n"), io::ParseError);
    CHECK_THROWS_AS(io::events_from_csv("t,x\nnan,0\n"), io::ParseError);
}

TEST_CASE("events JSON round-trips with the config") {
    const Sprinkle s =
        sprinkle({.n = 50, .edge = 2.0, .seed = 31, .mode = SprinkleMode::Poisson});
    const std::string text = io::sprinkle_to_json(s);
    CHECK(io::events_from_json(text) == s.events);

    const nlohmann::json j = nlohmann::json::parse(text);
    CHECK(j["config"]["n"] == 50);
    CHECK(j["config"]["S"] == 2.0);
    CHECK(j["config"]["seed"] == 31);
    CHECK(j["config"]["mode"] == "poisson");

    CHECK_THROWS_AS(io::events_from_json("{\"events\": 5}"), io::ParseError);
    CHECK_THROWS_AS(io::events_from_json("not json"), io::ParseError);
}

TEST_CASE("matrix serialization round-trips bit-exactly in both formats") {
    const Sprinkle s = sprinkle({.n = 60, .edge = 1.0, .seed = 13, .mode = SprinkleMode::FixedN});
    const CausalMatrix c = build_causal_matrix(s);
    const LinkMatrix l = build_link_matrix(c);

    CHECK(io::matrix_from_csv(io::matrix_to_csv(c.bits)) == c.bits);
    CHECK(io::matrix_from_json(io::matrix_to_json(c.bits)) == c.bits);
    CHECK(io::matrix_from_csv(io::matrix_to_csv(l.bits)) == l.bits);
    CHECK(io::matrix_from_json(io::matrix_to_json(l.bits)) == l.bits);

    const BitMatrix empty(3);
    CHECK(io::matrix_from_csv(io::matrix_to_csv(empty)) == empty);
    CHECK(io::matrix_from_json(io::matrix_to_json(empty)) == empty);
}

TEST_CASE("matrix parse errors") {
    CHECK_THROWS_AS(io::matrix_from_csv("0,1\n0\n"), io::ParseError);
    CHECK_THROWS_AS(io::matrix_from_csv("0,2\n0,0\n"), io::ParseError);
    CHECK_THROWS_AS(io::matrix_from_json("{\"n\": 2, \"edges\": [[0, 5]]}"), io::ParseError);
    CHECK_THROWS_AS(io::matrix_from_json("{\"n\": 2}"), io::ParseError);
}

TEST_CASE("sampled function CSV round-trips bit-exactly") {
    const TestFunction f = TestFunction::gaussian(1.0, 0.7, 6.0, 1.0 / 64.0);
    const TestFunction back = io::function_from_csv(io::function_to_csv(f));
    CHECK(back.size() == f.size());
    CHECK(back.half_width() == f.half_width());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(back.values()[i] == f.values()[i]);

    CHECK_THROWS_AS(io::function_from_csv("x,re,im\n0,1,0\n"), io::ParseError);
    CHECK_THROWS_AS(io::function_from_csv("x,re,im\n-1,1,0\n0,1,0\n2,1,0\n"), io::ParseError);
    CHECK_THROWS_AS(io::function_from_csv("t,x\n"), io::ParseError);
}

TEST_CASE("ensemble JSON carries the full record") {
    const CausalMatrix c =
        build_causal_matrix(std::vector<Event>{{0, 0}, {1, -0.9}, {1, 0.9}, {2, 0}});
    const WorldlineEnsemble e =
        build_ensemble(build_link_matrix(c), AmplitudeModel{{0.5, 0.5}}, 0, 3);
    const nlohmann::json j = nlohmann::json::parse(io::ensemble_to_json(e));
    CHECK(j["source"] == 0);
    CHECK(j["target"] == 3);
    CHECK(j["chains"].size() == 2);
    CHECK(j["chains"][0] == nlohmann::json::array({0, 1, 3}));
    CHECK(j["weights"].size() == 2);
    CHECK(j["total"].contains("re"));
    CHECK(j["total"].contains("im"));
    CHECK(j["truncated"] == false);
}

TEST_CASE("FNV-1a digests match the reference vectors") {
    const std::string empty;
    CHECK(io::fnv1a64({empty.data(), empty.size()}) == 0xcbf29ce484222325ull);
    const std::string a = "a";
    CHECK(io::fnv1a64({a.data(), a.size()}) == 0xaf63dc4c8601ec8cull);
    const std::string foobar = "foobar";
    CHECK(io::fnv1a64({foobar.data(), foobar.size()}) == 0x85944171f73967e8ull);
    CHECK(io::digest_hex({foobar.data(), foobar.size()}) == "85944171f73967e8");
}

TEST_CASE("scatter plot carries one circle per event inside the outline") {
    const Sprinkle s = sprinkle({.n = 250, .edge = 1.0, .seed = 21, .mode = SprinkleMode::FixedN});
    const std::string svg = svg::diamond_scatter(s);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count_occurrences(svg, "<circle") == 250);
    CHECK(count_occurrences(svg, "<polygon") == 1);
    CHECK(count_occurrences(svg, "</svg>") == 1);
    // every tag is closed: self-closing or explicit
    CHECK(count_occurrences(svg, "<") == count_occurrences(svg, ">"));
}
