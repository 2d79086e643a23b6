#pragma once

// Knot and link diagrams as planar rotation systems with crossing data.
//
// A crossing lists its four arc labels counterclockwise in PD order: slot 0
// is the incoming under-strand, so slots 0/2 carry the under-strand and
// slots 1/3 the over-strand.
//
// Besides PD slots, every crossing has a *canonical origin*: the slot that
// holds its smallest arc label. Canonical slot k is PD slot
// (origin + k) mod 4. Flipping a crossing rotates the PD tuple but keeps the
// canonical numbering fixed, so everything indexed canonically (faces,
// quadrants, medial edge ids) depends only on the shadow of the diagram.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace knotplate {

struct Crossing {
  std::array<int, 4> arcs{};
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A (crossing, PD slot) position.
struct Endpoint {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

// The sector of a crossing between canonical slots q and q+1.
struct Corner {
  int crossing = 0;
  int quadrant = 0;
  friend bool operator==(const Corner&, const Corner&) = default;
};

class Diagram {
 public:
  Diagram() = default;
  // Builds the arc index but does not validate; see validate().
  // Throws InvalidDiagram on non-positive labels.
  explicit Diagram(std::vector<Crossing> crossings);

  std::size_t crossing_count() const noexcept { return crossings_.size(); }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  int arc(int crossing, int slot) const { return crossings_[crossing].arcs[slot & 3]; }

  // Distinct arc labels, ascending. Arc indices refer to this order.
  std::size_t arc_count() const noexcept { return labels_.size(); }
  int arc_label(int arc_index) const { return labels_[arc_index]; }
  std::optional<int> arc_index(int label) const;
  int arc_index_at(Endpoint e) const { return slot_arc_[e.crossing][e.slot & 3]; }
  std::span<const Endpoint> arc_endpoints(int arc_index) const { return ends_[arc_index]; }
  // Other end of the arc leaving `e`. Requires every arc to have two ends.
  Endpoint opposite(Endpoint e) const;

  int origin(int crossing) const { return origin_[crossing]; }
  int pd_slot(int crossing, int canonical) const { return (origin_[crossing] + canonical) & 3; }
  int canonical_slot(int crossing, int pd) const { return (pd - origin_[crossing]) & 3; }
  bool is_under_canonical(int crossing, int canonical) const {
    return pd_slot(crossing, canonical) % 2 == 0;
  }

  friend bool operator==(const Diagram& a, const Diagram& b) { return a.crossings_ == b.crossings_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> labels_;
  std::unordered_map<int, int> index_;
  std::vector<std::vector<Endpoint>> ends_;
  std::vector<std::array<int, 4>> slot_arc_;
  std::vector<int> origin_;
};

// PD text: whitespace-separated X(a,b,c,d) terms, `#` comments to end of line.
// Throws ParseError on syntax errors, wrong slot counts, and arc labels that
// do not occur exactly twice.
Diagram parse_pd(std::string_view text);
// Canonical form: crossings in order, single spaces, trailing newline.
std::string to_pd(const Diagram& d);

// Which face is the unbounded one. Default: the face with the most corners,
// ties to the lowest face index.
struct OuterFacePolicy {
  std::optional<std::size_t> face;
};

// Faces of the diagram as cyclic corner sequences. A face enters a crossing
// at canonical slot s, occupies corner s, and leaves along slot s+1; bounded
// faces are therefore traversed clockwise.
struct FaceSet {
  std::vector<std::vector<Corner>> faces;
  std::size_t outer = 0;
  // Face containing each corner, indexed by 4*crossing + quadrant.
  std::vector<int> corner_face;

  int face_of(Corner c) const { return corner_face[4 * c.crossing + c.quadrant]; }
  std::size_t size() const noexcept { return faces.size(); }
};

// Throws InvalidDiagram when arcs are malformed or the face count is not C+2.
FaceSet faces(const Diagram& d, OuterFacePolicy policy = {});

enum class IssueKind {
  no_crossings,
  duplicate_arc,
  unpaired_arc,
  self_connected,
  disconnected,
  inconsistent_orientation,
  non_planar,
  bad_outer_face,
};

struct Issue {
  IssueKind kind;
  std::string message;
};

struct ValidationReport {
  bool ok = false;
  std::size_t components = 0;
  std::size_t crossings = 0;
  std::size_t exterior = 0;  // E: corners on the outer face
  std::size_t bigons = 0;    // T: bounded faces with two corners
  std::vector<Issue> issues;

  bool has(IssueKind k) const;
};

ValidationReport validate(const Diagram& d, OuterFacePolicy policy = {});
// validate() and throw InvalidDiagram with the first issue if not ok.
void require_valid(const Diagram& d, OuterFacePolicy policy = {});

std::string to_string(IssueKind k);

// Arc orientation induced by the under-strands (slot 0 -> slot 2).
// Components that never pass under are oriented from their lowest arc.
struct Orientation {
  std::vector<Endpoint> tail;  // per arc index: where the arc leaves a crossing
  std::vector<Endpoint> head;  // per arc index: where the arc enters a crossing
  std::vector<int> component;  // per arc index
  std::size_t component_count = 0;
};

// Throws InvalidDiagram if some component passes under against slot order.
Orientation orient(const Diagram& d);

std::size_t component_count(const Diagram& d);
bool is_alternating(const Diagram& d);

// Swaps over/under at crossing i by rotating its slots one step, in the
// direction that keeps slot 0 the incoming under-strand. Involution.
Diagram flip_crossing(const Diagram& d, std::size_t i);
// All crossings flipped.
Diagram mirror(const Diagram& d);
// Flip the crossings whose bit is set in `mask` (bit i = crossing i).
Diagram apply_flips(const Diagram& d, unsigned long long mask);

}  // namespace knotplate
