#pragma once

#include <string_view>
#include <vector>

#include "knotplate/fixtures.hpp"

namespace knotplate::testing {

// Catalog fixtures (aliases excluded) with their component counts.
struct Expected {
  std::string_view name;
  std::size_t crossings;
  std::size_t components;
};

inline const std::vector<Expected>& catalog() {
  static const std::vector<Expected> list{
      {"trefoil", 3, 1}, {"figure-eight", 4, 1}, {"hopf", 2, 2},
      {"borromean", 6, 3}, {"unknot3", 3, 1},    {"unknot4", 4, 1},
  };
  return list;
}

}  // namespace knotplate::testing
