#pragma once

// Words over signed generator letters.

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace knotplate {

struct Letter {
  int generator = 0;
  int power = 1;  // +1 or -1

  Letter inverse() const { return {generator, -power}; }
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A word is a plain letter sequence; reduction is explicit.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  void push_back(Letter l) { letters_.push_back(l); }
  // Appends with free cancellation against the current tail.
  void append_reducing(Letter l);

  Word inverse() const;
  Word freely_reduced() const;
  // Freely reduced, then conjugated until first and last letters do not cancel.
  Word cyclically_reduced() const;
  bool is_cyclically_reduced() const;
  // Rotation so that letter `i` comes first.
  Word rotated(std::size_t i) const;
  // Every occurrence of `generator` replaced by `replacement` (inverted where
  // the letter is inverted), freely reduced as it goes.
  Word substitute(int generator, const Word& replacement) const;
  // Generators above `generator` shift down by one; `generator` must be absent.
  Word drop_generator_index(int generator) const;

  std::size_t occurrences(int generator) const;
  int exponent_sum(int generator) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Equal up to cyclic rotation and inversion.
bool cyclically_equivalent(const Word& a, const Word& b);

}  // namespace knotplate
