#include <doctest.h>

#include <random>
#include <regex>

#include "support.hpp"
#include "svr/json_io.hpp"
#include "svr/render.hpp"

using namespace svr;
using io::json;

TEST_SUITE("io") {

TEST_CASE("coordinates and shapes round-trip") {
    CHECK(io::to_json(Coord{3, -1}) == json::array({3, -1}));
    CHECK(io::coord_from_json(json::array({2, 1})) == Coord{2, 1});
    CHECK(io::coord_from_json(json(4)) == Coord{4});
    CHECK_THROWS_AS(io::coord_from_json(json::array({1})), io::FormatError);
    CHECK_THROWS_AS(io::coord_from_json(json("x")), io::FormatError);

    const Shape l = Shape::lshape(Coord{1}, Coord{2}, Coord{1, 1}, Coord{3});
    const json jl = io::to_json(l);
    CHECK(jl.at("kind") == "lshape");
    CHECK(jl.at("coords").contains("w"));
    CHECK(io::shape_from_json(jl) == l);

    const Shape s = Shape::unit_square(Coord{0, 1}, Coord{2}, Coord{1, 1});
    CHECK(io::shape_from_json(io::to_json(s)) == s);
    json bad = io::to_json(s);
    bad["coords"]["t"] = json::array({9, 0});
    CHECK_THROWS_AS(io::shape_from_json(bad), io::FormatError);
    bad = io::to_json(s);
    bad["kind"] = "circle";
    CHECK_THROWS_AS(io::shape_from_json(bad), io::FormatError);
}

TEST_CASE("drawings round-trip") {
    std::mt19937 rng(41);
    for (ShapeKind k : {ShapeKind::Rect, ShapeKind::UnitSquare, ShapeKind::LShape}) {
        const Drawing d = testing::random_drawing(rng, k, 5);
        const json j = io::to_json(d);
        CHECK(j.at("n") == d.size());
        CHECK(io::drawing_from_json(j) == d);
        CHECK(io::drawing_from_json(json::parse(j.dump())) == d);
    }
    json j = io::to_json(testing::random_drawing(rng, ShapeKind::Rect, 3));
    j["shapes"][1]["vertex"] = 1;
    CHECK_THROWS_AS(io::drawing_from_json(j), io::FormatError);
    j["n"] = 7;
    CHECK_THROWS_AS(io::drawing_from_json(j), io::FormatError);
    CHECK_THROWS_AS(io::drawing_from_json(json::object()), io::FormatError);
}

TEST_CASE("graph pairs round-trip") {
    const GraphPair g{4, {{1, 2}, {3, 4}}, {{2, 3}}};
    const json j = io::to_json(g);
    CHECK(j.dump() == R"({"eh":[[2,3]],"ev":[[1,2],[3,4]],"n":4})");
    CHECK(io::graph_pair_from_json(j) == g);
    CHECK_THROWS_AS(io::graph_pair_from_json(json::parse(R"({"n":2,"ev":[[1,3]],"eh":[]})")), io::FormatError);
    CHECK_THROWS_AS(io::graph_pair_from_json(json::parse(R"({"n":2,"ev":[[1,1]],"eh":[]})")), io::FormatError);
    CHECK_THROWS_AS(io::graph_pair_from_json(json::parse(R"({"n":2,"ev":[]})")), io::FormatError);
}

TEST_CASE("gadget indices round-trip") {
    const sat::GadgetIndex a = sat::build_ussvr_instance(sat::NaeInstance{4, {{1, 2, 3}, {4, 1, 2}, {3, 4, 3}}});
    CHECK(io::gadget_index_from_json(io::to_json(a)) == a);
    const sat::GadgetIndex b = sat::build_rsvr_instance(sat::Cnf3Instance{3, {{3, 1, 2}, {-1, -2, 1}, {2, 1, -3}}});
    const json jb = io::to_json(b);
    CHECK(io::gadget_index_from_json(jb) == b);
    CHECK(jb.at("roles")[2].at("role") == "negated-leaf");
    json tampered = jb;
    tampered["pair"]["ev"].erase(0);
    CHECK_THROWS_AS(io::gadget_index_from_json(tampered), io::FormatError);
    tampered = jb;
    tampered["mode"] = "other";
    CHECK_THROWS_AS(io::gadget_index_from_json(tampered), io::FormatError);
}

TEST_CASE("decision documents") {
    const std::vector<std::string> h{"a", "b", "c", "d", "e", "f", "g"}, v{"a", "c", "b", "g", "e", "f", "d"};
    const PathPair p = normalize_path_pair(v, h);
    const json no = io::to_json(paths::decide_lsvr(p), p);
    CHECK(no.at("exists") == false);
    CHECK(no.at("orientation").is_null());
    CHECK(no.at("violations").at("SW") == json::parse(R"([["c","b"]])"));
    CHECK(no.at("drawing").is_null());

    const PathPair q = PathPair::from_permutation({4, 3, 5, 2, 1});
    const json yes = io::to_json(paths::decide_lsvr(q), q);
    CHECK(yes.at("exists") == true);
    CHECK(yes.at("orientation") == "SW");
    CHECK(yes.at("stretch").at("left") == json::parse(R"(["4","3"])"));
    CHECK(yes.at("stretch").at("down") == json::parse(R"(["1","2"])"));
    CHECK(io::drawing_from_json(yes.at("drawing")) == *paths::decide_lsvr(q).drawing);
}

TEST_CASE("serialization is byte-stable") {
    const PathPair q = PathPair::from_permutation({2, 1, 6, 4, 5, 3});
    const std::string a = io::to_json(paths::decide_lsvr(q), q).dump(2);
    const std::string b = io::to_json(paths::decide_lsvr(q), q).dump(2);
    CHECK(a == b);
    // Keys come out sorted at every level.
    const json j = json::parse(a);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(std::is_sorted(keys.begin(), keys.end()));
}

TEST_CASE("rendering keeps the coordinate order") {
    std::mt19937 rng(55);
    for (int trial = 0; trial < 50; ++trial) {
        const Drawing d = testing::random_drawing(rng, trial % 2 ? ShapeKind::LShape : ShapeKind::Rect, 5);
        RenderConfig cfg;
        const double e = checked_eps_substitute(d, cfg);
        std::vector<Coord> cs;
        for (const Shape& s : d.shapes)
            for (Coord c : {s.left(), s.right(), s.bottom(), s.top()}) cs.push_back(c);
        for (Coord a : cs)
            for (Coord b : cs)
                if (a < b) CHECK(materialize(a, e) < materialize(b, e));
    }
}

TEST_CASE("eps substitute bounds") {
    // Largest |eps| is 2, so the substitute must stay below 1/6.
    const Drawing d{ShapeKind::Rect, std::nullopt, {Shape::rect(Coord{0}, Coord{1, 2}, Coord{0}, Coord{1})}};
    RenderConfig cfg;
    cfg.epsNum = 1;
    cfg.epsDen = 6;
    CHECK_THROWS_AS(checked_eps_substitute(d, cfg), std::invalid_argument);
    cfg.epsDen = 7;
    CHECK(checked_eps_substitute(d, cfg) == doctest::Approx(1.0 / 7));
    cfg.epsNum = -1;
    CHECK_THROWS_AS(checked_eps_substitute(d, cfg), std::invalid_argument);
    CHECK(checked_eps_substitute(d, RenderConfig{}) == doctest::Approx(1.0 / 12));
}

TEST_CASE("SVG output") {
    const Drawing d = *paths::decide_lsvr(PathPair::from_permutation({4, 3, 5, 2, 1})).drawing;
    RenderConfig cfg;
    cfg.sightLines = true;
    const std::string svg = render_svg(d, cfg, {"a", "b<", "c", "d", "e"});
    CHECK(svg == render_svg(d, cfg, {"a", "b<", "c", "d", "e"}));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("b&lt;") != std::string::npos);
    const auto count = [&](const std::string& needle) {
        std::size_t k = 0;
        for (std::size_t pos = svg.find(needle); pos != std::string::npos; pos = svg.find(needle, pos + 1)) ++k;
        return k;
    };
    CHECK(count("<polyline") == 5);
    // Four P_V and four P_H edges, one dashed line each.
    CHECK(count(cfg.verticalColor) == 4);
    CHECK(count(cfg.horizontalColor) == 4);
    cfg.sightLines = false;
    CHECK(render_svg(d, cfg).find("stroke-dasharray") == std::string::npos);
}

}  // TEST_SUITE
