#pragma once

// Fundamental group of the knot complement from the template: the two-sided
// presentation read off the upper and lower lid faces, the Wirtinger
// baseline, Tietze simplification, complexity and abelianization.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotplate/diagram.hpp"
#include "knotplate/graph.hpp"
#include "knotplate/medial.hpp"
#include "knotplate/presentation.hpp"

namespace knotplate {

// Root of the BFS spanning tree. Default: the star of the bounded diagram
// face with the most corners (lowest face index on ties).
struct TreePolicy {
  std::optional<int> root;
};

int default_tree_root(const MedialGraph& m);

// BFS over quadrant edges only; circle arcs are always generators. The tree
// has V-1 edges and leaves exactly 2C non-tree edges.
SpanningTree spanning_tree(const MedialGraph& m, TreePolicy policy = {});

struct TemplatePresentation {
  Presentation presentation;
  std::vector<int> generator_edge;  // medial edge behind each generator
  std::size_t upper_relators = 0;
  std::size_t empty_relators = 0;
};

// One relator per bounded face of the upper graph, then the lower graph,
// each face walked counterclockwise through the medial paths of its edges.
// Tree edges are skipped; relators are freely and cyclically reduced.
TemplatePresentation template_presentation(const MedialGraph& m, const SkeinGraph& upper, const SkeinGraph& lower,
                                           const SpanningTree& tree);

// Everything the template pipeline produces for one diagram.
struct TemplateAnalysis {
  MedialGraph medial;
  SkeinGraph upper;
  SkeinGraph lower;
  SpanningTree tree;
  TemplatePresentation presentation;
};

TemplateAnalysis analyze(const Diagram& d, OuterFacePolicy outer = {}, TreePolicy tree = {});

// Classical presentation: one generator per over-arc, one relator
// x_k^e x_i x_k^-e x_j^-1 per crossing, kept in raw 4-letter form.
// Throws UnsupportedDiagram when a component never passes under.
Presentation wirtinger_presentation(const Diagram& d);

struct ComplexityReport {
  std::vector<std::size_t> lengths;
  // Geometric mean over nonzero lengths; empty if every relator is empty.
  std::optional<double> geometric_mean;
  double arithmetic_mean = 0.0;
  std::size_t zero_length = 0;
};

ComplexityReport complexity(const Presentation& p);

struct TietzeLimits {
  std::size_t max_steps = 100'000;
  std::size_t max_total_length = 1'000'000;
};

struct TietzeResult {
  Presentation presentation;
  bool final = true;  // false when a budget stopped the cascade
  std::size_t steps = 0;
};

// Called after every applied move with the rule that fired.
using TietzeObserver = std::function<void(const Presentation&, std::string_view rule)>;

TietzeResult tietze_simplify(Presentation p, TietzeLimits limits = {}, const TietzeObserver& observer = {});

struct AbelianInvariants {
  std::size_t free_rank = 0;
  std::vector<long long> torsion;  // each divides the next, all > 1

  std::string to_string() const;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

AbelianInvariants abelianization(const Presentation& p);

enum class Verdict { certified, inconclusive };

struct Certification {
  Verdict verdict = Verdict::inconclusive;
  TietzeResult simplified;
};

// Certified iff the cascade ends in a free presentation of rank 1.
Certification certify_free_rank_one(const Presentation& p, TietzeLimits limits = {});
// Throws UnsupportedDiagram for links.
Certification certify_unknot(const Diagram& d, TietzeLimits limits = {}, OuterFacePolicy outer = {},
                             TreePolicy tree = {});

// Single relators equal up to generator renaming, per-generator inversion,
// whole-word inversion and cyclic rotation.
bool relators_match(const Word& a, const Word& b);

}  // namespace knotplate
