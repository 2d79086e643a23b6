#include "knotplate/fundgroup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "knotplate/errors.hpp"
#include "knotplate/smith.hpp"

namespace knotplate {

int default_tree_root(const MedialGraph& m) {
  const auto& fs = m.faces;
  std::size_t best = fs.size();
  for (std::size_t f = 0; f < fs.size(); ++f) {
    if (f == fs.outer) continue;
    if (best == fs.size() || fs.faces[f].size() > fs.faces[best].size()) best = f;
  }
  return m.star_of_face(best);
}

SpanningTree spanning_tree(const MedialGraph& m, TreePolicy policy) {
  const int root = policy.root ? *policy.root : default_tree_root(m);
  auto t = bfs_spanning_tree(m.graph, root, [&](int e) { return !m.is_arc(e); });
  if (t.reached != m.graph.vertex_count) throw InvalidDiagram("medial graph is not connected");
  return t;
}

TemplatePresentation template_presentation(const MedialGraph& m, const SkeinGraph& upper, const SkeinGraph& lower,
                                           const SpanningTree& tree) {
  TemplatePresentation out;
  auto& p = out.presentation;
  std::vector<int> gen_of_edge(m.graph.edge_count(), -1);
  for (std::size_t e = 0; e < m.graph.edge_count(); ++e) {
    if (tree.in_tree[e]) continue;
    gen_of_edge[e] = static_cast<int>(p.generators.size());
    p.generators.push_back(generator_name(p.generators.size()));
    out.generator_edge.push_back(static_cast<int>(e));
  }

  auto emit = [&](const SkeinGraph& sk) {
    for (std::size_t f = 0; f < sk.bounded_faces.size(); ++f) {
      Word w;
      for (const HalfEdge& h : sk.bounded_faces[f]) {
        const auto& path = sk.medial_path[h.edge];
        auto visit = [&](HalfEdge mh) {
          const int g = gen_of_edge[mh.edge];
          if (g >= 0) w.append_reducing({g, mh.end == 0 ? 1 : -1});
        };
        if (h.end == 0) {
          for (const HalfEdge& mh : path) visit(mh);
        } else {
          for (auto it = path.rbegin(); it != path.rend(); ++it) visit(it->twin());
        }
      }
      w = w.cyclically_reduced();
      if (w.empty()) ++out.empty_relators;
      p.relators.push_back(std::move(w));
      p.provenance.push_back(std::string(to_string(sk.side)) + "-face " + std::to_string(f));
    }
  };
  emit(upper);
  out.upper_relators = p.relators.size();
  emit(lower);
  return out;
}

TemplateAnalysis analyze(const Diagram& d, OuterFacePolicy outer, TreePolicy tree) {
  require_valid(d, outer);
  TemplateAnalysis a{build_medial(d, outer), {}, {}, {}, {}};
  a.upper = skein_graph(a.medial, d, Side::upper);
  a.lower = skein_graph(a.medial, d, Side::lower);
  a.tree = spanning_tree(a.medial, tree);
  a.presentation = template_presentation(a.medial, a.upper, a.lower, a.tree);
  return a;
}

Presentation wirtinger_presentation(const Diagram& d) {
  require_valid(d);
  const Orientation o = orient(d);
  const std::size_t n = d.arc_count();

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const int a = find(d.arc_index_at({static_cast<int>(c), 1}));
    const int b = find(d.arc_index_at({static_cast<int>(c), 3}));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  std::vector<char> passes_under(o.component_count, 0);
  for (std::size_t a = 0; a < n; ++a)
    if (o.head[a].slot == 0) passes_under[o.component[a]] = 1;
  for (std::size_t k = 0; k < o.component_count; ++k) {
    if (!passes_under[k]) {
      throw UnsupportedDiagram("component " + std::to_string(k) +
                               " never passes under a crossing; it has no Wirtinger generator (use the template "
                               "presentation)");
    }
  }

  Presentation p;
  std::vector<int> strand(n, -1);
  std::vector<int> root_strand(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    const int r = find(static_cast<int>(a));
    if (root_strand[r] < 0) {
      root_strand[r] = static_cast<int>(p.generators.size());
      p.generators.push_back(generator_name(p.generators.size()));
    }
    strand[a] = root_strand[r];
  }
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const int ci = static_cast<int>(c);
    const int in = strand[d.arc_index_at({ci, 0})];
    const int out = strand[d.arc_index_at({ci, 2})];
    const int over = strand[d.arc_index_at({ci, 1})];
    const int arc3 = d.arc_index_at({ci, 3});
    // Right-handed when the over-strand enters at slot 3.
    const int e = o.head[arc3] == Endpoint{ci, 3} ? 1 : -1;
    p.relators.push_back(Word{{over, e}, {in, 1}, {over, -e}, {out, -1}});
    p.provenance.push_back("wirtinger-crossing " + std::to_string(c));
  }
  return p;
}

ComplexityReport complexity(const Presentation& p) {
  ComplexityReport r;
  double log_sum = 0.0;
  std::size_t nonzero = 0, total = 0;
  std::optional<std::size_t> common;
  bool all_equal = true;
  for (const auto& w : p.relators) {
    const std::size_t len = w.size();
    r.lengths.push_back(len);
    total += len;
    if (len == 0) {
      ++r.zero_length;
      continue;
    }
    ++nonzero;
    if (!common) common = len;
    else if (*common != len) all_equal = false;
  }
  // Summed in sorted order so permuting relators cannot change the last bit.
  std::vector<std::size_t> sorted = r.lengths;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t len : sorted)
    if (len > 0) log_sum += std::log(static_cast<double>(len));
  if (!p.relators.empty()) r.arithmetic_mean = static_cast<double>(total) / static_cast<double>(p.relators.size());
  if (nonzero > 0) {
    r.geometric_mean = all_equal ? static_cast<double>(*common) : std::exp(log_sum / static_cast<double>(nonzero));
  }
  return r;
}

AbelianInvariants abelianization(const Presentation& p) {
  const auto rows = static_cast<Eigen::Index>(p.relators.size());
  const auto cols = static_cast<Eigen::Index>(p.generators.size());
  IntMatrix<long long> m = IntMatrix<long long>::Zero(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (const Letter& l : p.relators[i]) m(i, l.generator) += l.power;
  const auto diag = smith_diagonal<long long>(std::move(m));
  AbelianInvariants a;
  a.free_rank = p.generators.size() - diag.size();
  for (long long d : diag)
    if (d > 1) a.torsion.push_back(d);
  return a;
}

std::string AbelianInvariants::to_string() const {
  std::string s;
  if (free_rank == 0 && torsion.empty()) return "0";
  if (free_rank == 1) s = "Z";
  else if (free_rank > 1) s = "Z^" + std::to_string(free_rank);
  for (long long t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(t);
  }
  return s;
}

Certification certify_free_rank_one(const Presentation& p, TietzeLimits limits) {
  Certification c;
  c.simplified = tietze_simplify(p, limits);
  const auto& q = c.simplified.presentation;
  c.verdict = q.generators.size() == 1 && q.relators.empty() ? Verdict::certified : Verdict::inconclusive;
  return c;
}

Certification certify_unknot(const Diagram& d, TietzeLimits limits, OuterFacePolicy outer, TreePolicy tree) {
  require_valid(d, outer);
  if (component_count(d) != 1) throw UnsupportedDiagram("unknot certification is defined for knots only");
  return certify_free_rank_one(analyze(d, outer, tree).presentation.presentation, limits);
}

namespace {

// Generators in order of first appearance.
std::vector<int> generators_of(const Word& w) {
  std::vector<int> gens;
  for (const Letter& l : w)
    if (std::find(gens.begin(), gens.end(), l.generator) == gens.end()) gens.push_back(l.generator);
  return gens;
}

}  // namespace

bool relators_match(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  auto ga = generators_of(a);
  const auto gb = generators_of(b);
  if (ga.size() != gb.size()) return false;
  if (ga.size() > 6) throw std::invalid_argument("relators_match supports at most 6 generators");
  std::sort(ga.begin(), ga.end());
  const std::size_t k = ga.size();
  std::vector<int> perm(ga);
  do {
    for (unsigned signs = 0; signs < (1u << k); ++signs) {
      Word mapped;
      for (const Letter& l : a) {
        const std::size_t slot = static_cast<std::size_t>(std::find(ga.begin(), ga.end(), l.generator) - ga.begin());
        const int flip = (signs >> slot & 1u) ? -1 : 1;
        mapped.push_back({perm[slot], l.power * flip});
      }
      // Targets use b's generator ids, so map a's generators onto gb.
      Word renamed;
      for (const Letter& l : mapped) {
        const auto pos = static_cast<std::size_t>(std::find(ga.begin(), ga.end(), l.generator) - ga.begin());
        renamed.push_back({gb[pos], l.power});
      }
      if (cyclically_equivalent(renamed, b)) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace knotplate
