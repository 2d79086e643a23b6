#include "knotplate/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "knotplate/errors.hpp"

namespace knotplate {

Diagram::Diagram(std::vector<Crossing> crossings) : crossings_(std::move(crossings)) {
  for (const auto& x : crossings_) {
    for (int a : x.arcs) {
      if (a <= 0) throw InvalidDiagram("arc labels must be positive, got " + std::to_string(a));
      labels_.push_back(a);
    }
  }
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], static_cast<int>(i));

  ends_.assign(labels_.size(), {});
  slot_arc_.resize(crossings_.size());
  origin_.resize(crossings_.size());
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& arcs = crossings_[c].arcs;
    for (int s = 0; s < 4; ++s) {
      const int idx = index_.at(arcs[s]);
      slot_arc_[c][s] = idx;
      ends_[idx].push_back({static_cast<int>(c), s});
    }
    origin_[c] = static_cast<int>(std::min_element(arcs.begin(), arcs.end()) - arcs.begin());
  }
}

std::optional<int> Diagram::arc_index(int label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Endpoint Diagram::opposite(Endpoint e) const {
  const auto& ends = ends_[slot_arc_[e.crossing][e.slot & 3]];
  if (ends.size() != 2) throw InvalidDiagram("arc " + std::to_string(arc(e.crossing, e.slot)) + " does not have two ends");
  return ends[0] == e ? ends[1] : ends[0];
}

// ---------------------------------------------------------------------------
// PD text

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        ++pos_;
      } else {
        break;
      }
    }
  }
  bool done() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

  void expect(char ch) {
    if (pos_ >= text_.size() || text_[pos_] != ch) {
      std::string got = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
      throw ParseError(std::string("expected '") + ch + "', got " + got, pos_);
    }
    ++pos_;
  }
  bool peek(char ch) const { return pos_ < text_.size() && text_[pos_] == ch; }

  int integer() {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) throw ParseError("arc label too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a positive integer arc label", start);
    if (v == 0) throw ParseError("arc labels must be positive", start);
    return static_cast<int>(v);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Diagram parse_pd(std::string_view text) {
  PdScanner in(text);
  std::vector<Crossing> crossings;
  // label -> offsets of its occurrences, for position-reported count errors
  std::unordered_map<int, std::vector<std::size_t>> seen;
  std::vector<int> order;

  in.skip_blank();
  while (!in.done()) {
    const std::size_t term_start = in.pos();
    in.expect('X');
    in.expect('(');
    std::vector<int> labels;
    while (true) {
      const std::size_t at = in.pos();
      const int v = in.integer();
      auto& occ = seen[v];
      if (occ.empty()) order.push_back(v);
      occ.push_back(at);
      labels.push_back(v);
      if (in.peek(',')) {
        in.expect(',');
        continue;
      }
      in.expect(')');
      break;
    }
    if (labels.size() != 4) {
      throw ParseError("crossing has " + std::to_string(labels.size()) + " slots, expected 4", term_start);
    }
    crossings.push_back({{labels[0], labels[1], labels[2], labels[3]}});
    if (!in.done() && !std::isspace(static_cast<unsigned char>(text[in.pos()])) && !in.peek('#')) {
      throw ParseError("expected whitespace between crossings", in.pos());
    }
    in.skip_blank();
  }

  for (int label : order) {
    const auto& occ = seen[label];
    if (occ.size() != 2) {
      const std::size_t where = occ.size() > 2 ? occ[2] : occ[0];
      throw ParseError("arc " + std::to_string(label) + " occurs " + std::to_string(occ.size()) +
                           " times, expected 2",
                       where);
    }
  }
  return Diagram(std::move(crossings));
}

std::string to_pd(const Diagram& d) {
  std::string out;
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& a = d.crossings()[i].arcs;
    if (i) out += ' ';
    out += "X(" + std::to_string(a[0]) + ',' + std::to_string(a[1]) + ',' + std::to_string(a[2]) + ',' +
           std::to_string(a[3]) + ')';
  }
  out += '\n';
  return out;
}

// ---------------------------------------------------------------------------
// Structure checks

namespace {

bool arcs_well_formed(const Diagram& d) {
  for (std::size_t a = 0; a < d.arc_count(); ++a)
    if (d.arc_endpoints(static_cast<int>(a)).size() != 2) return false;
  return true;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

std::vector<std::vector<Corner>> trace_faces(const Diagram& d) {
  const std::size_t n = d.crossing_count();
  std::vector<char> seen(4 * n, 0);
  std::vector<std::vector<Corner>> out;
  for (std::size_t c = 0; c < n; ++c) {
    for (int q = 0; q < 4; ++q) {
      if (seen[4 * c + q]) continue;
      std::vector<Corner> face;
      Corner cur{static_cast<int>(c), q};
      while (!seen[4 * cur.crossing + cur.quadrant]) {
        seen[4 * cur.crossing + cur.quadrant] = 1;
        face.push_back(cur);
        const Endpoint leave{cur.crossing, d.pd_slot(cur.crossing, cur.quadrant + 1)};
        const Endpoint arrive = d.opposite(leave);
        cur = {arrive.crossing, d.canonical_slot(arrive.crossing, arrive.slot)};
      }
      out.push_back(std::move(face));
    }
  }
  return out;
}

std::size_t pick_outer(const std::vector<std::vector<Corner>>& fs, const OuterFacePolicy& policy) {
  if (policy.face) {
    if (*policy.face >= fs.size())
      throw InvalidDiagram("outer face index " + std::to_string(*policy.face) + " out of range (" +
                           std::to_string(fs.size()) + " faces)");
    return *policy.face;
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < fs.size(); ++i)
    if (fs[i].size() > fs[best].size()) best = i;
  return best;
}

// Walks one strand component starting on arc `start`, calling
// visit(arc, tail, head) for every arc in travel order.
template <typename Visit>
void walk_component(const Diagram& d, int start, Endpoint head, Visit&& visit) {
  int arc = start;
  Endpoint h = head;
  do {
    const Endpoint t = d.opposite(h);
    visit(arc, t, h);
    const Endpoint exit{h.crossing, (h.slot + 2) & 3};
    arc = d.arc_index_at(exit);
    h = d.opposite(exit);
  } while (arc != start || !(h == head));
}

struct OrientResult {
  Orientation orientation;
  bool consistent = true;
};

OrientResult orient_impl(const Diagram& d) {
  OrientResult r;
  auto& o = r.orientation;
  const std::size_t n = d.arc_count();
  o.tail.resize(n);
  o.head.resize(n);
  o.component.assign(n, -1);
  for (std::size_t a0 = 0; a0 < n; ++a0) {
    if (o.component[a0] != -1) continue;
    const int comp = static_cast<int>(o.component_count++);
    // Collect the component in an arbitrary direction first.
    std::vector<std::pair<int, std::pair<Endpoint, Endpoint>>> seq;
    const int start = static_cast<int>(a0);
    walk_component(d, start, d.arc_endpoints(start)[1],
                   [&](int arc, Endpoint t, Endpoint h) { seq.push_back({arc, {t, h}}); });
    // Direction from the first under-passage: the strand must enter at slot 0.
    int forward = 0;  // 0 unknown, +1 keep, -1 reverse
    for (const auto& [arc, th] : seq) {
      const int s = th.second.slot;
      if (s % 2 == 0) {
        const int want = s == 0 ? 1 : -1;
        if (forward == 0) forward = want;
        else if (forward != want) r.consistent = false;
      }
    }
    const bool keep = forward >= 0;
    for (const auto& [arc, th] : seq) {
      o.component[arc] = comp;
      o.tail[arc] = keep ? th.first : th.second;
      o.head[arc] = keep ? th.second : th.first;
    }
  }
  return r;
}

}  // namespace

FaceSet faces(const Diagram& d, OuterFacePolicy policy) {
  if (!arcs_well_formed(d)) throw InvalidDiagram("diagram has arcs without exactly two ends");
  FaceSet fs;
  fs.faces = trace_faces(d);
  if (fs.faces.size() != d.crossing_count() + 2) {
    throw InvalidDiagram("rotation system is not planar: " + std::to_string(fs.faces.size()) + " faces, expected " +
                         std::to_string(d.crossing_count() + 2));
  }
  fs.outer = pick_outer(fs.faces, policy);
  fs.corner_face.assign(4 * d.crossing_count(), -1);
  for (std::size_t f = 0; f < fs.faces.size(); ++f)
    for (const Corner& c : fs.faces[f]) fs.corner_face[4 * c.crossing + c.quadrant] = static_cast<int>(f);
  return fs;
}

bool ValidationReport::has(IssueKind k) const {
  return std::any_of(issues.begin(), issues.end(), [k](const Issue& i) { return i.kind == k; });
}

std::string to_string(IssueKind k) {
  switch (k) {
    case IssueKind::no_crossings: return "no crossings";
    case IssueKind::duplicate_arc: return "duplicate arc";
    case IssueKind::unpaired_arc: return "unpaired arc";
    case IssueKind::self_connected: return "R1 loop";
    case IssueKind::disconnected: return "disconnected";
    case IssueKind::inconsistent_orientation: return "inconsistent orientation";
    case IssueKind::non_planar: return "non-planar rotation";
    case IssueKind::bad_outer_face: return "bad outer face";
  }
  return "unknown";
}

ValidationReport validate(const Diagram& d, OuterFacePolicy policy) {
  ValidationReport rep;
  rep.crossings = d.crossing_count();
  auto add = [&](IssueKind k, std::string msg) { rep.issues.push_back({k, std::move(msg)}); };

  if (d.crossing_count() == 0) {
    add(IssueKind::no_crossings, "diagram has no crossings");
    return rep;
  }
  for (std::size_t a = 0; a < d.arc_count(); ++a) {
    const auto n = d.arc_endpoints(static_cast<int>(a)).size();
    const std::string label = std::to_string(d.arc_label(static_cast<int>(a)));
    if (n > 2) add(IssueKind::duplicate_arc, "duplicate arc " + label + " (used " + std::to_string(n) + " times)");
    if (n < 2) add(IssueKind::unpaired_arc, "arc " + label + " occurs only once");
  }
  if (!rep.issues.empty()) return rep;

  for (std::size_t a = 0; a < d.arc_count(); ++a) {
    const auto ends = d.arc_endpoints(static_cast<int>(a));
    if (ends[0].crossing == ends[1].crossing) {
      add(IssueKind::self_connected, "R1 loop: arc " + std::to_string(d.arc_label(static_cast<int>(a))) +
                                         " returns to crossing " + std::to_string(ends[0].crossing) +
                                         " (removable by a Reidemeister I move)");
    }
  }

  Dsu dsu(d.crossing_count());
  std::size_t parts = d.crossing_count();
  for (std::size_t a = 0; a < d.arc_count(); ++a) {
    const auto ends = d.arc_endpoints(static_cast<int>(a));
    if (dsu.unite(ends[0].crossing, ends[1].crossing)) --parts;
  }
  if (parts != 1) add(IssueKind::disconnected, "diagram splits into " + std::to_string(parts) + " pieces");

  const auto oriented = orient_impl(d);
  rep.components = oriented.orientation.component_count;
  if (!oriented.consistent)
    add(IssueKind::inconsistent_orientation, "under-strand slots 0/2 disagree with strand direction");

  const auto fs = trace_faces(d);
  if (fs.size() != d.crossing_count() + 2) {
    add(IssueKind::non_planar, "face traversal gives " + std::to_string(fs.size()) + " faces, expected " +
                                   std::to_string(d.crossing_count() + 2));
  } else if (policy.face && *policy.face >= fs.size()) {
    add(IssueKind::bad_outer_face, "outer face index out of range");
  } else {
    const std::size_t outer = pick_outer(fs, policy);
    rep.exterior = fs[outer].size();
    for (std::size_t f = 0; f < fs.size(); ++f)
      if (f != outer && fs[f].size() == 2) ++rep.bigons;
  }
  rep.ok = rep.issues.empty();
  return rep;
}

void require_valid(const Diagram& d, OuterFacePolicy policy) {
  const auto rep = validate(d, policy);
  if (!rep.ok) throw InvalidDiagram(to_string(rep.issues.front().kind) + ": " + rep.issues.front().message);
}

Orientation orient(const Diagram& d) {
  if (!arcs_well_formed(d)) throw InvalidDiagram("diagram has arcs without exactly two ends");
  auto r = orient_impl(d);
  if (!r.consistent) throw InvalidDiagram("under-strand slots 0/2 disagree with strand direction");
  return std::move(r.orientation);
}

std::size_t component_count(const Diagram& d) {
  if (!arcs_well_formed(d)) throw InvalidDiagram("diagram has arcs without exactly two ends");
  return orient_impl(d).orientation.component_count;
}

bool is_alternating(const Diagram& d) {
  for (std::size_t a = 0; a < d.arc_count(); ++a) {
    const auto ends = d.arc_endpoints(static_cast<int>(a));
    if (ends.size() != 2) throw InvalidDiagram("diagram has arcs without exactly two ends");
    if (ends[0].slot % 2 == ends[1].slot % 2) return false;
  }
  return true;
}

namespace {

Crossing flipped(const Diagram& d, const Orientation& o, std::size_t i) {
  const auto& a = d.crossings()[i].arcs;
  const Endpoint slot1{static_cast<int>(i), 1};
  const bool over_enters_at_1 = o.head[d.arc_index_at(slot1)] == slot1;
  if (over_enters_at_1) return {{a[1], a[2], a[3], a[0]}};
  return {{a[3], a[0], a[1], a[2]}};
}

}  // namespace

Diagram flip_crossing(const Diagram& d, std::size_t i) {
  if (i >= d.crossing_count())
    throw std::out_of_range("crossing index " + std::to_string(i) + " out of range");
  const auto o = orient(d);
  auto xs = d.crossings();
  xs[i] = flipped(d, o, i);
  return Diagram(std::move(xs));
}

Diagram apply_flips(const Diagram& d, unsigned long long mask) {
  const auto o = orient(d);
  auto xs = d.crossings();
  for (std::size_t i = 0; i < xs.size() && i < 64; ++i)
    if (mask >> i & 1ULL) xs[i] = flipped(d, o, i);
  return Diagram(std::move(xs));
}

Diagram mirror(const Diagram& d) {
  const auto o = orient(d);
  auto xs = d.crossings();
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = flipped(d, o, i);
  return Diagram(std::move(xs));
}

}  // namespace knotplate
