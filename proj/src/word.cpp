#include "knotplate/word.hpp"

#include <algorithm>

namespace knotplate {

void Word::append_reducing(Letter l) {
  if (!letters_.empty() && letters_.back() == l.inverse()) letters_.pop_back();
  else letters_.push_back(l);
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
  return Word(std::move(out));
}

Word Word::freely_reduced() const {
  Word out;
  out.letters_.reserve(letters_.size());
  for (const Letter& l : letters_) out.append_reducing(l);
  return out;
}

Word Word::cyclically_reduced() const {
  Word w = freely_reduced();
  std::size_t lo = 0, hi = w.letters_.size();
  while (hi - lo >= 2 && w.letters_[lo] == w.letters_[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(w.letters_.begin() + lo, w.letters_.begin() + hi));
}

bool Word::is_cyclically_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == letters_[i - 1].inverse()) return false;
  return letters_.size() < 2 || !(letters_.front() == letters_.back().inverse());
}

Word Word::rotated(std::size_t i) const {
  std::vector<Letter> out(letters_.begin() + i, letters_.end());
  out.insert(out.end(), letters_.begin(), letters_.begin() + i);
  return Word(std::move(out));
}

Word Word::substitute(int generator, const Word& replacement) const {
  const Word inv = replacement.inverse();
  Word out;
  for (const Letter& l : letters_) {
    if (l.generator != generator) {
      out.append_reducing(l);
      continue;
    }
    for (const Letter& r : l.power > 0 ? replacement : inv) out.append_reducing(r);
  }
  return out;
}

Word Word::drop_generator_index(int generator) const {
  Word out = *this;
  for (Letter& l : out.letters_)
    if (l.generator > generator) --l.generator;
  return out;
}

std::size_t Word::occurrences(int generator) const {
  return static_cast<std::size_t>(
      std::count_if(letters_.begin(), letters_.end(), [generator](const Letter& l) { return l.generator == generator; }));
}

int Word::exponent_sum(int generator) const {
  int s = 0;
  for (const Letter& l : letters_)
    if (l.generator == generator) s += l.power;
  return s;
}

bool cyclically_equivalent(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const std::size_t n = a.size();
  for (const Word& cand : {b, b.inverse()}) {
    for (std::size_t r = 0; r < n; ++r) {
      bool same = true;
      for (std::size_t i = 0; i < n && same; ++i) same = a[i] == cand[(i + r) % n];
      if (same) return true;
    }
  }
  return false;
}

}  // namespace knotplate
