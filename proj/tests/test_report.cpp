#include <doctest.h>

#include <algorithm>

#include <hironaka/driver.hpp>
#include <hironaka/expr.hpp>
#include <hironaka/report.hpp>

#include <json.hpp>

using namespace hironaka;

namespace {
const FieldSpec Q = FieldSpec::rationals();

WeierstrassSurface S(const char* text) {
    return WeierstrassSurface::from_poly(parse_poly(text, Q));
}

const char* kTrace19 =
    "initial: Z^3 + X^19*Z + Y^4 - 4*X*Y^3 + 6*X^2*Y^2 - 4*X^3*Y + X^4 (order 3)\n"
    "step 1: quadratic at (1:1:0) -> Z^3 + X^17*Z + X*Y^4 (order 3)\n"
    "step 2: quadratic at (1:0:0) -> Z^3 + X^15*Z + X^2*Y^4 (order 3)\n"
    "step 3: quadratic at (1:0:0) -> Z^3 + X^13*Z + X^3*Y^4 (order 3)\n"
    "step 4: monoidal at (Z,X) -> Z^3 + X^11*Z + Y^4 (order 3)\n"
    "step 5: quadratic at (1:0:0) -> Z^3 + X^9*Z + X*Y^4 (order 3)\n"
    "step 6: quadratic at (1:0:0) -> Z^3 + X^7*Z + X^2*Y^4 (order 3)\n"
    "step 7: quadratic at (1:0:0) -> Z^3 + X^5*Z + X^3*Y^4 (order 3)\n"
    "step 8: monoidal at (Z,X) -> Z^3 + X^3*Z + Y^4 (order 3)\n"
    "step 9: terminal quadratic at (1:0:0) -> Z^3 + X*Z + X*Y^4 (order 2)\n"
    "multiplicity dropped at step 9\n";
} // namespace

TEST_CASE("polygon JSON") {
    auto f = S("Z^3 + X^19*Z + (X-Y)^4");
    CHECK(polygon_to_json(newton_polygon(f)) ==
          R"({"vertices":[["0","4/3"],["4/3","0"]]})");
    CHECK(polygon_to_json(NewtonPolygon()) == R"({"vertices":[]})");
    CHECK(polygon_to_json(newton_polygon(S("Z^2 + X^3"))) ==
          R"({"vertices":[["3/2","0"]]})");
}

TEST_CASE("polygon SVG") {
    auto p = newton_polygon(S("Z^3 + X^19*Z + (X-Y)^4"));
    std::string svg = polygon_to_svg(p);

    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("(0,4/3)") != std::string::npos);
    CHECK(svg.find("(4/3,0)") != std::string::npos);
    CHECK(std::count(svg.begin(), svg.end(), '\n') > 10);

    // Exactly one dot per vertex.
    std::size_t circles = 0;
    for (std::size_t at = svg.find("<circle"); at != std::string::npos;
         at = svg.find("<circle", at + 1)) {
        ++circles;
    }
    CHECK(circles == 2);

    CHECK(polygon_to_svg(p) == svg);
    CHECK(polygon_to_svg(NewtonPolygon()).find("empty polygon") != std::string::npos);
}

TEST_CASE("trace rendering") {
    auto trace = run(S("Z^3 + X^19*Z + (X-Y)^4"), Strategy::automatic());
    CHECK(trace_to_text(trace) == kTrace19);

    auto j = nlohmann::json::parse(trace_to_json(trace));
    CHECK(j["initial"] ==
          "Z^3 + X^19*Z + Y^4 - 4*X*Y^3 + 6*X^2*Y^2 - 4*X^3*Y + X^4");
    CHECK(j["multiplicity"] == 3);
    CHECK(j["drop_step"] == 9);
    REQUIRE(j["steps"].size() == 9);

    CHECK(j["steps"][0]["index"] == 1);
    CHECK(j["steps"][0]["center"]["type"] == "point");
    CHECK(j["steps"][0]["center"]["direction"] == "1:1:0");
    CHECK(j["steps"][0]["center"]["generator"].is_null());
    CHECK(j["steps"][0]["equation"] == "Z^3 + X^17*Z + X*Y^4");
    CHECK(j["steps"][0]["order"] == 3);
    CHECK(j["steps"][0]["polygon"]["vertices"][0][0] == "1/3");

    CHECK(j["steps"][3]["center"]["type"] == "curve");
    CHECK(j["steps"][3]["center"]["generator"] == "X");
    CHECK(j["steps"][3]["center"]["direction"].is_null());

    CHECK(j["steps"][8]["center"]["type"] == "terminal");
    CHECK(j["steps"][8]["polygon"].is_null());
    CHECK(j["steps"][8]["order"] == 2);
}

TEST_CASE("trace rendering without a drop") {
    auto script = parse_script("Q 1:1:0\n", Q);
    auto trace = run(S("Z^3 + X^19*Z + (X-Y)^4"), Strategy::scripted(script));
    std::string text = trace_to_text(trace);
    CHECK(text.find("no multiplicity drop\n") != std::string::npos);

    auto j = nlohmann::json::parse(trace_to_json(trace));
    CHECK(j["drop_step"].is_null());
}

TEST_CASE("counterexample rendering") {
    auto report = counterexample_report({19, 27});
    CHECK(counterexample_to_text(report) ==
          "m=19 drop_step=9 vertices: (0,4/3) (4/3,0)\n"
          "m=27 drop_step=13 vertices: (0,4/3) (4/3,0)\n"
          "polygons match expected: yes\n"
          "counts strictly increasing: yes\n"
          "cycle periodicity (+8 in m -> +4 steps): yes\n");

    auto j = nlohmann::json::parse(counterexample_to_json(report));
    REQUIRE(j["rows"].size() == 2);
    CHECK(j["rows"][0]["m"] == 19);
    CHECK(j["rows"][0]["drop_step"] == 9);
    CHECK(j["rows"][0]["polygon"]["vertices"][1][0] == "4/3");
    CHECK(j["polygons_match_expected"] == true);
    CHECK(j["counts_strictly_increasing"] == true);
    CHECK(j["cycle_periodicity"] == true);
    CHECK(j["all_ok"] == true);
}

TEST_CASE("serialization is byte-stable") {
    auto f = S("Z^3 + X^19*Z + (X-Y)^4");
    auto trace1 = run(f, Strategy::automatic());
    auto trace2 = run(f, Strategy::automatic());
    CHECK(trace_to_json(trace1) == trace_to_json(trace2));
    CHECK(trace_to_text(trace1) == trace_to_text(trace2));
    CHECK(polygon_to_json(newton_polygon(f)) == polygon_to_json(newton_polygon(f)));
}
