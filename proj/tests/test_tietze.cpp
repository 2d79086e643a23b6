#include <doctest.h>

#include "fixtures.hpp"
#include "knotplate/fundgroup.hpp"

using namespace knotplate;

namespace {

Word letters(std::initializer_list<int> signed_gens) {
  Word out;
  for (int g : signed_gens) out.push_back({std::abs(g) - 1, g > 0 ? 1 : -1});
  return out;
}

Presentation make(std::size_t gens, std::vector<Word> rels) {
  Presentation p;
  for (std::size_t i = 0; i < gens; ++i) p.generators.push_back(generator_name(i));
  p.relators = std::move(rels);
  p.provenance.resize(p.relators.size());
  return p;
}

}  // namespace

TEST_SUITE("tietze") {
  TEST_CASE("single-letter relator kills its generator") {
    const auto r = tietze_simplify(make(1, {letters({1})}));
    CHECK(r.final);
    CHECK(r.presentation.generators.empty());
    CHECK(r.presentation.relators.empty());
  }

  TEST_CASE("two-letter relator substitutes") {
    const auto r = tietze_simplify(make(3, {letters({1, -2}), letters({1, 3, 2, 3})}));
    CHECK(r.presentation.generators.size() == 2);
    REQUIRE(r.presentation.relators.size() == 1);
    CHECK(r.presentation.relators[0].size() == 4);
  }

  TEST_CASE("empty and duplicate relators are dropped") {
    const auto r = tietze_simplify(make(2, {Word{}, letters({1, 2, 1, 2}), letters({-2, -1, -2, -1})}));
    CHECK(r.presentation.relators.size() == 1);
    CHECK(r.presentation.generators.size() == 2);
  }

  TEST_CASE("generator renaming after elimination") {
    const auto r = tietze_simplify(make(3, {letters({2})}));
    CHECK(r.presentation.generators == std::vector<std::string>{"a", "c"});
  }

  TEST_CASE("trefoil simplifies to the braid relation") {
    const auto r = tietze_simplify(analyze(load_fixture("trefoil")).presentation.presentation);
    CHECK(r.final);
    CHECK(r.presentation.generators.size() == 2);
    REQUIRE(r.presentation.relators.size() == 1);
    CHECK(relators_match(r.presentation.relators[0], letters({1, 2, 1, -2, -1, -2})));
  }

  TEST_CASE("Wirtinger trefoil reaches the same final form") {
    const auto r = tietze_simplify(wirtinger_presentation(load_fixture("trefoil")));
    CHECK(r.presentation.generators.size() == 2);
    REQUIRE(r.presentation.relators.size() == 1);
    CHECK(relators_match(r.presentation.relators[0], letters({1, 2, 1, -2, -1, -2})));
  }

  TEST_CASE("unknots simplify to one free generator") {
    for (const char* name : {"unknot3", "unknot4"}) {
      const auto r = tietze_simplify(analyze(load_fixture(name)).presentation.presentation);
      CHECK(r.final);
      CHECK(r.presentation.generators.size() == 1);
      CHECK(r.presentation.relators.empty());
    }
  }

  TEST_CASE("every step preserves the abelianization") {
    for (const auto& f : testing::catalog()) {
      const auto p = analyze(load_fixture(f.name)).presentation.presentation;
      const auto expect = abelianization(p);
      std::size_t calls = 0;
      tietze_simplify(p, {}, [&](const Presentation& q, std::string_view) {
        ++calls;
        CHECK(q.well_formed());
        CHECK(abelianization(q) == expect);
      });
      CHECK(calls > 0);
    }
  }

  TEST_CASE("budgets stop the cascade") {
    const auto p = analyze(load_fixture("figure-eight")).presentation.presentation;
    const auto steps = tietze_simplify(p, {1, 1'000'000});
    CHECK_FALSE(steps.final);
    CHECK(steps.steps == 1);
    CHECK(abelianization(steps.presentation) == abelianization(p));
    const auto length = tietze_simplify(p, {100, 5});
    CHECK_FALSE(length.final);
    CHECK(length.presentation.total_length() <= p.total_length());
  }

  TEST_CASE("deterministic") {
    const auto p = analyze(load_fixture("borromean")).presentation.presentation;
    const auto a = tietze_simplify(p), b = tietze_simplify(p);
    CHECK(to_text(a.presentation) == to_text(b.presentation));
    CHECK(a.steps == b.steps);
  }
}
