#include "knotplate/presentation.hpp"

#include <sstream>
#include <unordered_map>

#include "knotplate/errors.hpp"

namespace knotplate {

std::size_t Presentation::total_length() const {
  std::size_t n = 0;
  for (const auto& r : relators) n += r.size();
  return n;
}

bool Presentation::well_formed() const {
  for (const auto& r : relators)
    for (const auto& l : r)
      if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= generators.size() || (l.power != 1 && l.power != -1))
        return false;
  return true;
}

std::string generator_name(std::size_t index) {
  std::string s(1, static_cast<char>('a' + index % 26));
  if (index >= 26) s += std::to_string(index / 26);
  return s;
}

std::string format_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += names.at(w[i].generator);
    if (w[i].power < 0) out += '\'';
  }
  return out;
}

std::string to_text(const Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.generators) out += ' ' + g;
  out += '\n';
  for (const auto& r : p.relators) out += format_word(r, p.generators) + '\n';
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  bool header = false;
  std::unordered_map<std::string, int> index;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream toks(line);
    std::string tok;
    if (!header) {
      toks >> tok;
      if (tok != "gens:") throw ParseError("presentation must start with 'gens:'", line_start);
      while (toks >> tok) {
        if (index.count(tok)) throw ParseError("duplicate generator '" + tok + "'", line_start);
        index.emplace(tok, static_cast<int>(p.generators.size()));
        p.generators.push_back(tok);
      }
      header = true;
      continue;
    }
    Word w;
    while (toks >> tok) {
      if (tok == "1") continue;
      int power = 1;
      if (tok.back() == '\'') {
        power = -1;
        tok.pop_back();
      }
      auto it = index.find(tok);
      if (it == index.end()) throw ParseError("unknown generator '" + tok + "'", line_start);
      w.push_back({it->second, power});
    }
    p.relators.push_back(std::move(w));
    p.provenance.emplace_back();
  }
  if (!header) throw ParseError("presentation must start with 'gens:'", 0);
  return p;
}

}  // namespace knotplate
