#include "knotplate/fixtures.hpp"

#include <array>
#include <string>

#include "knotplate/errors.hpp"

namespace knotplate {

namespace {

constexpr std::array<Fixture, 8> table{{
    {"trefoil", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "trefoil knot, standard 3-crossing alternating diagram",
     "hand-built from the three-lobed shadow; checked by face census and abelianization Z", true},
    {"figure-eight", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)", "figure-eight knot, 4-crossing alternating diagram",
     "standard tabulated PD code; checked by face census and abelianization Z", true},
    {"hopf", "X(1,4,2,3) X(3,2,4,1)", "Hopf link, two components linked once",
     "hand traversal: four bigon faces; two components", true},
    {"borromean", "X(6,4,7,1) X(1,11,2,10) X(8,3,5,2) X(3,12,4,9) X(9,6,10,5) X(11,7,12,8)",
     "Borromean rings, 6-crossing alternating diagram",
     "generated from three overlapping circles with alternating crossings; eight triangular faces", true},
    {"unknot3", "X(4,2,5,1) X(3,6,4,1) X(5,2,6,3)", "trefoil-like unknot: trefoil shadow with crossing 0 switched",
     "trefoil with crossing 0 flipped; non-alternating, certified as the unknot", true},
    {"unknot4", "X(1,4,2,5) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
     "figure-eight-like unknot: figure-eight shadow with crossing 0 switched",
     "figure-eight with crossing 0 flipped; any single switch unknots this shadow", true},
    {"trefoil-shadow", "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)", "alias of trefoil, used as a shadow by scan-assignments",
     "alias", false},
    {"figure-eight-shadow", "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
     "alias of figure-eight, used as a shadow by scan-assignments", "alias", false},
}};

}  // namespace

std::span<const Fixture> fixtures() { return table; }

std::optional<Fixture> find_fixture(std::string_view name) {
  for (const Fixture& f : table)
    if (f.name == name) return f;
  return std::nullopt;
}

Diagram load_fixture(std::string_view name) {
  const auto f = find_fixture(name);
  if (!f) throw UsageError("unknown fixture '" + std::string(name) + "' (see `knotplate catalog`)");
  return parse_pd(f->pd);
}

}  // namespace knotplate
