#include <algorithm>
#include <limits>
#include <tuple>

#include "knotplate/fundgroup.hpp"

namespace knotplate {

namespace {

// Removes relator `index` and generator `g`, replacing g by `replacement`
// everywhere else. `replacement` must not contain g.
Presentation eliminate(const Presentation& p, std::size_t index, int g, const Word& replacement) {
  Presentation out;
  out.generators = p.generators;
  out.generators.erase(out.generators.begin() + g);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i == index) continue;
    out.relators.push_back(p.relators[i].substitute(g, replacement).cyclically_reduced().drop_generator_index(g));
    out.provenance.push_back(i < p.provenance.size() ? p.provenance[i] : std::string());
  }
  return out;
}

// Cyclic reduction, then removal of empty relators and of relators that
// repeat an earlier one up to rotation and inversion. Returns true on change.
bool tidy(Presentation& p) {
  bool changed = false;
  Presentation out;
  out.generators = p.generators;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Word w = p.relators[i].cyclically_reduced();
    changed |= w.size() != p.relators[i].size();
    const bool keep = !w.empty() && std::none_of(out.relators.begin(), out.relators.end(),
                                                 [&](const Word& r) { return cyclically_equivalent(r, w); });
    if (!keep) {
      changed = true;
      continue;
    }
    out.relators.push_back(std::move(w));
    out.provenance.push_back(i < p.provenance.size() ? p.provenance[i] : std::string());
  }
  p = std::move(out);
  return changed;
}

struct Move {
  std::size_t relator;
  int generator;
  Word replacement;
  const char* rule;
};

// Solves relator r for the single occurrence of g: rotate so g^e leads,
// then g^e w = 1 gives g = w^-1 (e = 1) or g = w (e = -1).
Word solve_for(const Word& r, int g) {
  std::size_t pos = 0;
  while (r[pos].generator != g) ++pos;
  const Word rot = r.rotated(pos);
  Word w(std::vector<Letter>(rot.begin() + 1, rot.end()));
  return rot[0].power > 0 ? w.inverse() : w;
}

std::optional<Move> next_move(const Presentation& p) {
  const auto& rels = p.relators;

  // Length 1: the generator is trivial.
  std::optional<std::pair<int, std::size_t>> kill;
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (rels[i].size() == 1 && (!kill || std::pair{rels[i][0].generator, i} < *kill)) kill = {rels[i][0].generator, i};
  if (kill) return Move{kill->second, kill->first, Word{}, "kill-generator"};

  // Length 2 with distinct generators: one is a power of the other.
  std::optional<std::tuple<int, std::size_t, int>> pair;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (rels[i].size() != 2 || rels[i][0].generator == rels[i][1].generator) continue;
    for (int k = 0; k < 2; ++k) {
      const std::tuple<int, std::size_t, int> cand{rels[i][k].generator, i, k};
      if (!pair || cand < *pair) pair = cand;
    }
  }
  if (pair) {
    const auto [g, i, k] = *pair;
    return Move{i, g, solve_for(rels[i], g), "substitute-pair"};
  }

  // A generator occurring once in a relator: solve and substitute, cheapest
  // growth first.
  std::vector<std::size_t> total(p.generators.size(), 0);
  for (const auto& r : rels)
    for (const Letter& l : r) ++total[l.generator];
  using Key = std::tuple<long long, int, std::size_t, std::size_t>;
  std::optional<Key> best;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    const auto len = static_cast<long long>(rels[i].size());
    for (int g = 0; g < static_cast<int>(p.generators.size()); ++g) {
      if (rels[i].occurrences(g) != 1) continue;
      const auto elsewhere = static_cast<long long>(total[g] - 1);
      const Key cand{(len - 1) * elsewhere - len, g, rels[i].size(), i};
      if (!best || cand < *best) best = cand;
    }
  }
  if (best) {
    const int g = std::get<1>(*best);
    const std::size_t i = std::get<3>(*best);
    return Move{i, g, solve_for(rels[i], g), "eliminate-generator"};
  }
  return std::nullopt;
}

}  // namespace

TietzeResult tietze_simplify(Presentation p, TietzeLimits limits, const TietzeObserver& observer) {
  TietzeResult result;
  if (p.provenance.size() != p.relators.size()) p.provenance.resize(p.relators.size());
  while (true) {
    if (tidy(p) && observer) observer(p, "tidy");
    const auto move = next_move(p);
    if (!move) break;
    if (result.steps >= limits.max_steps) {
      result.final = false;
      break;
    }
    Presentation next = eliminate(p, move->relator, move->generator, move->replacement);
    if (next.total_length() > limits.max_total_length) {
      result.final = false;
      break;
    }
    p = std::move(next);
    ++result.steps;
    if (observer) observer(p, move->rule);
  }
  result.presentation = std::move(p);
  return result;
}

}  // namespace knotplate
