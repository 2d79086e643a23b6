#include <doctest.h>

#include <algorithm>
#include <chrono>

#include "fixtures.hpp"
#include "knotplate/errors.hpp"
#include "knotplate/fundgroup.hpp"
#include "knotplate/smith.hpp"
#include "support/oracles.hpp"

using namespace knotplate;

namespace {

std::vector<std::size_t> sorted_lengths(const Presentation& p) {
  std::vector<std::size_t> out;
  for (const auto& r : p.relators) out.push_back(r.size());
  std::sort(out.begin(), out.end());
  return out;
}

Word letters(std::initializer_list<int> signed_gens) {
  Word out;
  for (int g : signed_gens) out.push_back({std::abs(g) - 1, g > 0 ? 1 : -1});
  return out;
}

}  // namespace

TEST_SUITE("fundgroup") {
  TEST_CASE("Smith normal form") {
    IntMatrix<long long> m(2, 2);
    m << 2, 0, 0, 3;
    CHECK(smith_diagonal<long long>(m) == std::vector<long long>{1, 6});
    IntMatrix<long long> z(2, 3);
    z << 2, 4, 4, -6, 6, 12;
    CHECK(smith_diagonal<long long>(z) == std::vector<long long>{2, 6});
    CHECK(smith_diagonal<long long>(IntMatrix<long long>::Zero(3, 3)).empty());
    IntMatrix<long long> big(1, 2);
    big << std::numeric_limits<long long>::max(), 2;
    CHECK_NOTHROW(smith_diagonal<long long>(big));
  }

  TEST_CASE("spanning tree leaves 2C generators") {
    for (const auto& f : testing::catalog()) {
      const Diagram d = load_fixture(f.name);
      const auto m = build_medial(d);
      const auto t = spanning_tree(m);
      CHECK(t.tree_edges == m.graph.vertex_count - 1);
      CHECK(m.graph.edge_count() - t.tree_edges == 2 * d.crossing_count());
      for (int k = 0; k < static_cast<int>(m.circle); ++k) CHECK_FALSE(t.in_tree[m.arc_edge(k)]);
    }
    const auto m = build_medial(load_fixture("trefoil"));
    CHECK(spanning_tree(m).tree_edges == 9);
    CHECK(m.kind[default_tree_root(m)] == VertexKind::star);
  }

  TEST_CASE("trefoil raw presentation") {
    const auto a = analyze(load_fixture("trefoil"));
    const auto& p = a.presentation.presentation;
    CHECK(p.generators.size() == 6);
    CHECK(p.relators.size() == 6);
    CHECK(sorted_lengths(p) == std::vector<std::size_t>(6, 3));
    CHECK(a.presentation.upper_relators == 3);
    CHECK(p.provenance.front() == "upper-face 0");
    CHECK(p.provenance.back() == "lower-face 2");
    for (const auto& r : p.relators) CHECK(r.is_cyclically_reduced());
    const auto c = complexity(p);
    REQUIRE(c.geometric_mean);
    CHECK(*c.geometric_mean == 3.0);
    CHECK(c.arithmetic_mean == 3.0);
  }

  TEST_CASE("trefoil-like unknot raw presentation") {
    const auto a = analyze(load_fixture("unknot3"));
    const auto& p = a.presentation.presentation;
    CHECK(sorted_lengths(p) == std::vector<std::size_t>{1, 1, 2, 2, 6, 6});
    const auto c = complexity(p);
    REQUIRE(c.geometric_mean);
    CHECK(*c.geometric_mean == doctest::Approx(2.289).epsilon(0.0005));
    CHECK(*c.geometric_mean == doctest::Approx(std::cbrt(12.0)));
  }

  TEST_CASE("generator and relator counts are 2C") {
    for (const auto& f : testing::catalog()) {
      const Diagram d = load_fixture(f.name);
      const auto& p = analyze(d).presentation.presentation;
      CHECK(p.generators.size() == 2 * d.crossing_count());
      CHECK(p.relators.size() == 2 * d.crossing_count());
      CHECK(p.well_formed());
    }
  }

  TEST_CASE("Wirtinger presentations") {
    const auto w = wirtinger_presentation(load_fixture("trefoil"));
    CHECK(w.generators.size() == 3);
    CHECK(w.relators.size() == 3);
    for (const auto& r : w.relators) CHECK(r.size() == 4);
    CHECK(w.provenance[1] == "wirtinger-crossing 1");
    const auto h = wirtinger_presentation(load_fixture("hopf"));
    CHECK(h.generators.size() == 2);
    CHECK(abelianization(h).free_rank == 2);
  }

  TEST_CASE("Wirtinger needs every component to pass under") {
    const Diagram d = flip_crossing(load_fixture("hopf"), 0);
    CHECK_THROWS_AS(wirtinger_presentation(d), UnsupportedDiagram);
  }

  TEST_CASE("abelianization is Z^mu for both presentations") {
    for (const auto& f : testing::catalog()) {
      const Diagram d = load_fixture(f.name);
      const AbelianInvariants expect{f.components, {}};
      const auto& t = analyze(d).presentation.presentation;
      const auto w = wirtinger_presentation(d);
      CHECK(abelianization(t) == expect);
      CHECK(abelianization(w) == expect);
      CHECK(testing::rational_free_rank(t) == f.components);
      CHECK(testing::rational_free_rank(w) == f.components);
    }
    CHECK(abelianization(wirtinger_presentation(load_fixture("trefoil"))).to_string() == "Z");
    CHECK(abelianization(wirtinger_presentation(load_fixture("borromean"))).to_string() == "Z^3");
  }

  TEST_CASE("abelianization with torsion") {
    Presentation p;
    p.generators = {"a", "b"};
    p.relators = {letters({1, 1}), letters({2, 2, 2})};
    const auto a = abelianization(p);
    CHECK(a.free_rank == 0);
    CHECK(a.torsion == std::vector<long long>{6});
    CHECK(a.to_string() == "Z/6");
  }

  TEST_CASE("complexity report") {
    Presentation p;
    p.generators = {"a", "b"};
    p.relators = {letters({1, 2}), letters({1, 1, 2, 2}), Word{}};
    const auto c = complexity(p);
    CHECK(c.zero_length == 1);
    REQUIRE(c.geometric_mean);
    CHECK(*c.geometric_mean == doctest::Approx(std::sqrt(8.0)));
    CHECK(c.arithmetic_mean == doctest::Approx(2.0));
    Presentation empty;
    empty.relators = {Word{}};
    CHECK_FALSE(complexity(empty).geometric_mean);
    Presentation same;
    same.generators = {"a"};
    same.relators = {letters({1, 1, 1, 1, 1, 1, 1}), letters({-1, -1, -1, -1, -1, -1, -1})};
    CHECK(*complexity(same).geometric_mean == 7.0);
  }

  TEST_CASE("relators_match") {
    // x y x y' x' y'
    const Word target = letters({1, 2, 1, -2, -1, -2});
    CHECK(relators_match(letters({2, 1, 2, -1, -2, -1}), target));
    CHECK(relators_match(letters({-1, 2, 1, -2, 1, 2}), target));
    CHECK(relators_match(target.inverse(), target));
    CHECK_FALSE(relators_match(letters({1, 2, 1, 2, -1, -2}), target));
    CHECK_FALSE(relators_match(letters({1, 1, 1, -2, -1, -2}), target));
  }

  TEST_CASE("certification") {
    CHECK(certify_unknot(load_fixture("unknot3")).verdict == Verdict::certified);
    CHECK(certify_unknot(load_fixture("unknot4")).verdict == Verdict::certified);
    CHECK(certify_unknot(load_fixture("trefoil")).verdict == Verdict::inconclusive);
    CHECK(certify_unknot(load_fixture("figure-eight")).verdict == Verdict::inconclusive);
    CHECK_THROWS_AS(certify_unknot(load_fixture("hopf")), UnsupportedDiagram);
    for (unsigned i = 0; i < 4; ++i)
      CHECK(certify_unknot(flip_crossing(load_fixture("figure-eight"), i)).verdict == Verdict::certified);
  }

  TEST_CASE("tree root is a policy") {
    const Diagram d = load_fixture("trefoil");
    const auto m = build_medial(d);
    for (int root = 0; root < static_cast<int>(m.graph.vertex_count); ++root) {
      const auto a = analyze(d, {}, {root});
      const auto& p = a.presentation.presentation;
      CHECK(p.generators.size() == 6);
      CHECK(abelianization(p).free_rank == 1);
      CHECK(p.total_length() == 8 * 3 - 2 * 3);
    }
  }
}
