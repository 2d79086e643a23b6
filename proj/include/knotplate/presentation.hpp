#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "knotplate/word.hpp"

namespace knotplate {

// Finitely presented group. Letters index into `generators`.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  // Per relator: where it came from ("upper-face 0", "wirtinger-crossing 2", ...).
  std::vector<std::string> provenance;

  std::size_t total_length() const;
  // Letter generators all in range.
  bool well_formed() const;
};

// a, b, ..., z, then a1, b1, ..., z1, a2, ...
std::string generator_name(std::size_t index);

std::string format_word(const Word& w, const std::vector<std::string>& names);

// Text form: "gens: a b c" then one relator per line, letters separated by
// spaces, `'` marking an inverse ("a e b'"); the empty relator is "1".
std::string to_text(const Presentation& p);
// Inverse of to_text (provenance is not part of the text form).
Presentation parse_presentation(std::string_view text);

}  // namespace knotplate
