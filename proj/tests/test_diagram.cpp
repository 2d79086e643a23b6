#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "knotplate/diagram.hpp"
#include "knotplate/errors.hpp"

using namespace knotplate;

TEST_SUITE("diagram") {
  TEST_CASE("parse_pd reads crossings in file order") {
    const Diagram d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    REQUIRE(d.crossing_count() == 3);
    CHECK(d.crossings()[1].arcs == std::array<int, 4>{3, 6, 4, 1});
    CHECK(d.arc_count() == 6);
    const auto ends = d.arc_endpoints(*d.arc_index(4));
    REQUIRE(ends.size() == 2);
    CHECK(ends[0] == Endpoint{0, 1});
    CHECK(ends[1] == Endpoint{1, 2});
  }

  TEST_CASE("parse_pd accepts comments and loose whitespace") {
    const Diagram d = parse_pd("# hopf\n  X(1,4,2,3)\tX(3,2,4,1)  # trailing\n");
    CHECK(d.crossing_count() == 2);
    CHECK(to_pd(d) == "X(1,4,2,3) X(3,2,4,1)\n");
  }

  TEST_CASE("parse_pd errors carry positions") {
    CHECK_THROWS_AS(parse_pd("X(1,2,3)"), ParseError);
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4,5)"), ParseError);
    CHECK_THROWS_AS(parse_pd("X(1,1,1,2) X(2,3,3,4)"), ParseError);
    CHECK_THROWS_AS(parse_pd("X(1, 2,2,1)"), ParseError);
    CHECK_THROWS_AS(parse_pd("X(0,1,1,0)"), ParseError);
    try {
      parse_pd("X(1,4,2,5) Y(3,6,4,1)");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 11);
    }
  }

  TEST_CASE("labels used other than twice are rejected") {
    CHECK_THROWS_AS(parse_pd("X(1,2,3,4) X(1,2,3,5)"), ParseError);
    CHECK_THROWS_AS(parse_pd("X(1,1,1,2)"), ParseError);
  }

  TEST_CASE("R1 curl is flagged by validate") {
    const Diagram d = parse_pd("X(1,2,2,1)");
    const auto r = validate(d);
    CHECK_FALSE(r.ok);
    CHECK(r.has(IssueKind::self_connected));
    CHECK(to_string(IssueKind::self_connected) == "R1 loop");
    CHECK_THROWS_AS(require_valid(d), InvalidDiagram);
  }

  TEST_CASE("no crossings is invalid") {
    const Diagram d = parse_pd("");
    CHECK(d.crossing_count() == 0);
    const auto r = validate(d);
    CHECK_FALSE(r.ok);
    CHECK(r.has(IssueKind::no_crossings));
  }

  TEST_CASE("split diagrams are rejected") {
    const Diagram d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) X(7,10,8,11) X(9,12,10,7) X(11,8,12,9)");
    const auto r = validate(d);
    CHECK_FALSE(r.ok);
    CHECK(r.has(IssueKind::disconnected));
  }

  TEST_CASE("validate reports C, E, T and components") {
    const auto r = validate(load_fixture("trefoil"));
    CHECK(r.ok);
    CHECK(r.issues.empty());
    CHECK(r.components == 1);
    CHECK(r.crossings == 3);
    CHECK(r.exterior == 3);
    CHECK(r.bigons == 3);

    const auto h = validate(load_fixture("hopf"));
    CHECK(h.ok);
    CHECK(h.components == 2);
    CHECK(h.crossings == 2);
  }

  TEST_CASE("face census") {
    auto sizes = [](const FaceSet& fs) {
      std::vector<std::size_t> s;
      for (const auto& f : fs.faces) s.push_back(f.size());
      std::sort(s.begin(), s.end());
      return s;
    };
    const FaceSet t = faces(load_fixture("trefoil"));
    CHECK(t.size() == 5);
    CHECK(sizes(t) == std::vector<std::size_t>{2, 2, 2, 3, 3});
    CHECK(t.faces[t.outer].size() == 3);

    CHECK(faces(load_fixture("figure-eight")).size() == 6);

    // Every Hopf face is a bigon.
    const FaceSet h = faces(load_fixture("hopf"));
    CHECK(sizes(h) == std::vector<std::size_t>{2, 2, 2, 2});
    CHECK(validate(load_fixture("hopf")).bigons == 3);

    const FaceSet b = faces(load_fixture("borromean"));
    CHECK(sizes(b) == std::vector<std::size_t>(8, 3));
  }

  TEST_CASE("faces cover every corner once and obey Euler") {
    for (const auto& f : testing::catalog()) {
      const Diagram d = load_fixture(f.name);
      const FaceSet fs = faces(d);
      CHECK(fs.size() == d.crossing_count() + 2);
      std::vector<int> seen(4 * d.crossing_count(), 0);
      for (std::size_t i = 0; i < fs.size(); ++i) {
        for (const Corner& c : fs.faces[i]) {
          ++seen[4 * c.crossing + c.quadrant];
          CHECK(fs.face_of(c) == static_cast<int>(i));
        }
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; }));
    }
  }

  TEST_CASE("outer face policy") {
    const Diagram d = load_fixture("trefoil");
    for (std::size_t i = 0; i < 5; ++i) CHECK(faces(d, {i}).outer == i);
    CHECK_THROWS_AS(faces(d, {std::size_t{9}}), InvalidDiagram);
    CHECK(validate(d, {std::size_t{9}}).has(IssueKind::bad_outer_face));
  }

  TEST_CASE("component counts") {
    for (const auto& f : testing::catalog()) CHECK(component_count(load_fixture(f.name)) == f.components);
  }

  TEST_CASE("flip_crossing") {
    const Diagram t = load_fixture("trefoil");
    CHECK(flip_crossing(flip_crossing(t, 1), 1) == t);
    CHECK(to_pd(flip_crossing(t, 0)) == to_pd(load_fixture("unknot3")));
    CHECK(component_count(flip_crossing(t, 2)) == 1);
    CHECK(mirror(mirror(t)) == t);
    CHECK(apply_flips(t, 0b111) == mirror(t));
    CHECK_THROWS_AS(flip_crossing(t, 3), std::out_of_range);
    // Canonical indexing does not move under a flip.
    const Diagram f = flip_crossing(t, 1);
    for (int c = 0; c < 3; ++c)
      for (int s = 0; s < 4; ++s)
        CHECK(t.arc_index_at({c, t.pd_slot(c, s)}) == f.arc_index_at({c, f.pd_slot(c, s)}));
  }

  TEST_CASE("is_alternating") {
    CHECK(is_alternating(load_fixture("trefoil")));
    CHECK(is_alternating(load_fixture("figure-eight")));
    CHECK(is_alternating(load_fixture("borromean")));
    CHECK_FALSE(is_alternating(load_fixture("unknot3")));
    CHECK_FALSE(is_alternating(load_fixture("unknot4")));
    CHECK(is_alternating(mirror(load_fixture("trefoil"))));
  }

  TEST_CASE("orientation follows under-strands") {
    const Diagram d = load_fixture("figure-eight");
    const Orientation o = orient(d);
    for (std::size_t c = 0; c < d.crossing_count(); ++c) {
      const int in = d.arc_index_at({static_cast<int>(c), 0});
      const int out = d.arc_index_at({static_cast<int>(c), 2});
      CHECK(o.head[in] == Endpoint{static_cast<int>(c), 0});
      CHECK(o.tail[out] == Endpoint{static_cast<int>(c), 2});
    }
  }

  TEST_CASE("to_pd round-trips canonical text") {
    for (const auto& f : testing::catalog()) {
      const std::string text = to_pd(load_fixture(f.name));
      CHECK(to_pd(parse_pd(text)) == text);
      CHECK(text.back() == '\n');
    }
  }
}
