#include <doctest.h>

#include "knotplate/errors.hpp"
#include "knotplate/presentation.hpp"
#include "knotplate/word.hpp"

using namespace knotplate;

namespace {
Word w(std::initializer_list<int> signed_gens) {
  Word out;
  for (int g : signed_gens) out.push_back({std::abs(g) - 1, g > 0 ? 1 : -1});
  return out;
}
}  // namespace

TEST_SUITE("word") {
  TEST_CASE("free and cyclic reduction") {
    CHECK(w({1, 2, -2, 3}).freely_reduced() == w({1, 3}));
    CHECK(w({1, 2, -2, -1}).freely_reduced().empty());
    CHECK(w({-1, 2, 3, 1}).cyclically_reduced() == w({2, 3}));
    CHECK(w({1, 2, -1}).cyclically_reduced() == w({2}));
    CHECK(w({1, 2, 1}).is_cyclically_reduced());
    CHECK_FALSE(w({1, 2, -1}).is_cyclically_reduced());
    CHECK_FALSE(w({2, -2}).is_cyclically_reduced());
  }

  TEST_CASE("inverse, rotation and counting") {
    CHECK(w({1, -2, 3}).inverse() == w({-3, 2, -1}));
    CHECK(w({1, 2, 3}).rotated(1) == w({2, 3, 1}));
    CHECK(w({1, -2, 1, 2}).occurrences(0) == 2);
    CHECK(w({1, -2, 1, -2}).exponent_sum(1) == -2);
  }

  TEST_CASE("substitution reduces as it goes") {
    // a := b c  in  a c' b'
    CHECK(w({1, -3, -2}).substitute(0, w({2, 3})).empty());
    CHECK(w({-1, 2}).substitute(0, w({2, 3})) == w({-3}));
    CHECK(w({1, 3}).drop_generator_index(1) == w({1, 2}));
  }

  TEST_CASE("cyclic equivalence includes inversion") {
    CHECK(cyclically_equivalent(w({1, 2, 3}), w({3, 1, 2})));
    CHECK(cyclically_equivalent(w({1, 2, 3}), w({-2, -1, -3})));
    CHECK_FALSE(cyclically_equivalent(w({1, 2, 3}), w({1, 3, 2})));
    CHECK(cyclically_equivalent(Word{}, Word{}));
  }

  TEST_CASE("generator names") {
    CHECK(generator_name(0) == "a");
    CHECK(generator_name(25) == "z");
    CHECK(generator_name(26) == "a1");
    CHECK(generator_name(53) == "b2");
  }

  TEST_CASE("presentation text round trip") {
    Presentation p;
    p.generators = {"a", "b", "c"};
    p.relators = {w({1, 3, -2}), Word{}, w({-1})};
    const std::string text = to_text(p);
    CHECK(text == "gens: a b c\na c b'\n1\na'\n");
    const Presentation q = parse_presentation(text);
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
    CHECK(q.well_formed());
    CHECK(p.total_length() == 4);
    CHECK_THROWS_AS(parse_presentation("a b\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a\nb\n"), ParseError);
  }
}
