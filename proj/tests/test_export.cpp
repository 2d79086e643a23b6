#include <doctest.h>

#include "fixtures.hpp"
#include "knotplate/errors.hpp"
#include "knotplate/export.hpp"

using namespace knotplate;

TEST_SUITE("export") {
  TEST_CASE("presentation JSON round trip") {
    const auto p = analyze(load_fixture("unknot3")).presentation.presentation;
    const Json j = to_json(p);
    CHECK(j.at("relators").size() == 6);
    CHECK(j.at("relators")[0].contains("provenance"));
    const auto back = presentation_from_json(Json::parse(j.dump()));
    CHECK(back.generators == p.generators);
    CHECK(back.relators == p.relators);
    CHECK(back.provenance == p.provenance);
    CHECK_THROWS_AS(presentation_from_json(Json::parse(R"({"generators":["a"],"relators":[{"letters":[[3,1]]}]})")),
                    ParseError);
  }

  TEST_CASE("complex JSON rejects broken boundaries") {
    const Diagram d = load_fixture("trefoil");
    Json j = to_json(build_complex(build_medial(d), d));
    j["polygons"][0]["boundary"][0] = 1000000;
    CHECK_THROWS_AS(complex_from_json(j), ParseError);
    j["polygons"][0]["boundary"][0] = 0;
    CHECK_THROWS_AS(complex_from_json(j), ParseError);
  }

  TEST_CASE("graph exports") {
    const Diagram d = load_fixture("trefoil");
    const auto a = analyze(d);
    const Json m = to_json(a.medial);
    CHECK(m.at("counts").at("cycle_rank") == 6);
    CHECK(m.at("edges").size() == 15);
    CHECK(m.at("edges")[0].at("kind") == "quadrant");
    CHECK(m.at("edges")[12].at("kind") == "arc");
    const Json u = to_json(a.upper);
    CHECK(u.at("graph") == "upper");
    CHECK(u.at("bounded_faces").size() == 3);
    CHECK(u.at("edges")[0].at("medial_path").size() == 2);
    const std::string dot = to_dot(a.medial);
    CHECK(dot.rfind("graph medial {", 0) == 0);
    CHECK(to_dot(a.lower).rfind("graph lower {", 0) == 0);
    CHECK(to_json(a.tree).at("non_tree_edges").size() == 6);
  }

  TEST_CASE("key order is stable") {
    const Json j = to_json(complexity(analyze(load_fixture("trefoil")).presentation.presentation));
    CHECK(j.dump() == R"({"lengths":[3,3,3,3,3,3],"geometric_mean":3.0,"arithmetic_mean":3.0,"zero_length":0})");
  }
}
