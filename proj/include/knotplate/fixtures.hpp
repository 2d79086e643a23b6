#pragma once

// Built-in example diagrams, all in PD notation.

#include <optional>
#include <span>
#include <string_view>

#include "knotplate/diagram.hpp"

namespace knotplate {

struct Fixture {
  std::string_view name;
  std::string_view pd;
  std::string_view description;
  std::string_view provenance;
  bool in_catalog;  // false for aliases used only by scans
};

std::span<const Fixture> fixtures();
// Catalog entries plus aliases.
std::optional<Fixture> find_fixture(std::string_view name);
Diagram load_fixture(std::string_view name);

}  // namespace knotplate
