#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace icosa {

// ---------------------------------------------------------------------------
// Vertices
// ---------------------------------------------------------------------------

// The 12 vertices in the fixed planar naming: a hexagon belt h0..h5 and an
// inner hexagram s0..s5. Ids 0..5 are h0..h5, ids 6..11 are s0..s5.
class VertexId {
 public:
  enum class Kind { hexagon, star };

  constexpr VertexId() = default;
  static constexpr VertexId hexagon(int i) { return VertexId(check_index(i)); }
  static constexpr VertexId star(int i) { return VertexId(check_index(i) + 6); }
  static constexpr VertexId from_id(int id) {
    if (id < 0 || id > 11) throw std::invalid_argument("VertexId: id out of range");
    return VertexId(id);
  }

  static VertexId parse(std::string_view name) {
    if (name.size() == 2 && name[1] >= '0' && name[1] <= '5') {
      if (name[0] == 'h') return hexagon(name[1] - '0');
      if (name[0] == 's') return star(name[1] - '0');
    }
    throw std::invalid_argument("VertexId: bad name '" + std::string(name) + "'");
  }

  constexpr int id() const { return id_; }
  constexpr Kind kind() const { return id_ < 6 ? Kind::hexagon : Kind::star; }
  constexpr int index() const { return id_ % 6; }

  std::string name() const {
    return std::string(1, kind() == Kind::hexagon ? 'h' : 's') + std::to_string(index());
  }

  friend constexpr bool operator==(VertexId, VertexId) = default;
  friend constexpr auto operator<=>(VertexId, VertexId) = default;

 private:
  constexpr explicit VertexId(int id) : id_(id) {}
  static constexpr int check_index(int i) {
    if (i < 0 || i > 5) throw std::invalid_argument("VertexId: index out of range");
    return i;
  }

  int id_ = 0;
};

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

class IcosahedronGraph {
 public:
  static constexpr int kVertices = 12;
  static constexpr int kPairSlots = 6;

  explicit IcosahedronGraph(const std::vector<std::pair<VertexId, VertexId>>& edge_list) {
    for (auto& row : adj_) row.fill(false);
    for (auto [u, v] : edge_list) {
      if (u == v) throw std::invalid_argument("IcosahedronGraph: self-loop");
      if (adj_[usize(u)][usize(v)]) throw std::invalid_argument("IcosahedronGraph: duplicate edge");
      adj_[usize(u)][usize(v)] = adj_[usize(v)][usize(u)] = true;
    }
    for (int a = 0; a < kVertices; ++a)
      for (int b = a + 1; b < kVertices; ++b)
        if (adj_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
          edges_.emplace_back(VertexId::from_id(a), VertexId::from_id(b));
  }

  bool adjacent(VertexId u, VertexId v) const { return adj_[usize(u)][usize(v)]; }

  int degree(VertexId v) const {
    int d = 0;
    for (bool b : adj_[usize(v)]) d += b;
    return d;
  }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (int i = 0; i < kVertices; ++i)
      if (adj_[usize(v)][static_cast<std::size_t>(i)]) out.push_back(VertexId::from_id(i));
    return out;
  }

  // All edges as (lower id, higher id), sorted.
  const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

  // Slot i couples the aligned vertices (h_i, s_i).
  static std::pair<VertexId, VertexId> pair_slot(int i) {
    return {VertexId::hexagon(i), VertexId::star(i)};
  }

  // Planar layout: both rings share angles (start at the top, clockwise),
  // the hexagon at radius 1 and the hexagram at radius 0.55. Math
  // orientation, y up; renderers flip as needed.
  static std::array<double, 2> projection(VertexId v);

 private:
  static std::size_t usize(VertexId v) { return static_cast<std::size_t>(v.id()); }

  std::array<std::array<bool, 12>, 12> adj_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

// The icosahedron in the fixed naming: the hexagon is a 6-cycle, star
// vertices skip one (s_i ~ s_{i+2}), and s_i attaches to the three
// consecutive hexagon vertices h_{i-1}, h_i, h_{i+1}.
inline const IcosahedronGraph& canonical_graph() {
  static const IcosahedronGraph g = [] {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < 6; ++i) {
      edges.emplace_back(VertexId::hexagon(i), VertexId::hexagon((i + 1) % 6));
      edges.emplace_back(VertexId::star(i), VertexId::star((i + 2) % 6));
      for (int d : {-1, 0, 1})
        edges.emplace_back(VertexId::star(i), VertexId::hexagon((i + d + 6) % 6));
    }
    // s_i ~ s_{i+2} enumerates each hexagram edge twice; keep one copy.
    std::vector<std::pair<VertexId, VertexId>> dedup;
    for (auto [u, v] : edges) {
      bool dup = false;
      for (auto [a, b] : dedup)
        if ((a == u && b == v) || (a == v && b == u)) dup = true;
      if (!dup) dedup.emplace_back(u, v);
    }
    return IcosahedronGraph(dedup);
  }();
  return g;
}

inline std::array<double, 2> IcosahedronGraph::projection(VertexId v) {
  // 60 degree steps; cos/sin of (90 - 60i) degrees, exact halves where possible.
  static constexpr double kRoot3Over2 = 0.8660254037844386;
  static constexpr std::array<std::array<double, 2>, 6> unit = {{
      {0.0, 1.0},
      {kRoot3Over2, 0.5},
      {kRoot3Over2, -0.5},
      {0.0, -1.0},
      {-kRoot3Over2, -0.5},
      {-kRoot3Over2, 0.5},
  }};
  const double r = v.kind() == VertexId::Kind::hexagon ? 1.0 : 0.55;
  const auto& u = unit[static_cast<std::size_t>(v.index())];
  return {r * u[0], r * u[1]};
}

// ---------------------------------------------------------------------------
// Structural validation
// ---------------------------------------------------------------------------

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
};

namespace detail {

inline int triangle_count(const IcosahedronGraph& g) {
  int n = 0;
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b)
      for (int c = b + 1; c < 12; ++c) {
        const auto va = VertexId::from_id(a), vb = VertexId::from_id(b), vc = VertexId::from_id(c);
        if (g.adjacent(va, vb) && g.adjacent(vb, vc) && g.adjacent(va, vc)) ++n;
      }
  return n;
}

inline bool connected(const IcosahedronGraph& g) {
  std::array<bool, 12> seen{};
  std::vector<VertexId> stack = {VertexId::from_id(0)};
  seen[0] = true;
  int visited = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w.id())]) {
        seen[static_cast<std::size_t>(w.id())] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == 12;
}

}  // namespace detail

inline bool is_graph_automorphism(const IcosahedronGraph& g, const std::array<int, 12>& map) {
  std::array<bool, 12> hit{};
  for (int i : map) {
    if (i < 0 || i > 11 || hit[static_cast<std::size_t>(i)]) return false;
    hit[static_cast<std::size_t>(i)] = true;
  }
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b) {
      const bool before = g.adjacent(VertexId::from_id(a), VertexId::from_id(b));
      const bool after = g.adjacent(VertexId::from_id(map[static_cast<std::size_t>(a)]),
                                    VertexId::from_id(map[static_cast<std::size_t>(b)]));
      if (before != after) return false;
    }
  return true;
}

inline ValidationReport validate_icosahedron(const IcosahedronGraph& g) {
  ValidationReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const int edge_count = static_cast<int>(g.edges().size());
  add("edge count 30", edge_count == 30, "found " + std::to_string(edge_count));

  bool regular = true;
  for (int i = 0; i < 12; ++i)
    if (g.degree(VertexId::from_id(i)) != 5) regular = false;
  add("5-regular", regular, "");

  add("connected", detail::connected(g), "");

  const int triangles = detail::triangle_count(g);
  add("20 triangles", triangles == 20, "found " + std::to_string(triangles));

  bool edge_triangles = true;
  for (auto [u, v] : g.edges()) {
    int shared = 0;
    for (int w = 0; w < 12; ++w) {
      const auto vw = VertexId::from_id(w);
      if (g.adjacent(u, vw) && g.adjacent(v, vw)) ++shared;
    }
    if (shared != 2) edge_triangles = false;
  }
  add("every edge in exactly 2 triangles", edge_triangles, "");

  bool pairs_are_edges = true;
  for (int i = 0; i < 6; ++i) {
    auto [h, s] = IcosahedronGraph::pair_slot(i);
    if (!g.adjacent(h, s)) pairs_are_edges = false;
  }
  add("pair slots are edges", pairs_are_edges, "");

  std::array<int, 12> rot{};
  for (int i = 0; i < 6; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 2) % 6;
    rot[static_cast<std::size_t>(i + 6)] = 6 + (i + 2) % 6;
  }
  add("threefold rotation is an automorphism", is_graph_automorphism(g, rot), "");

  return report;
}

// ---------------------------------------------------------------------------
// Automorphisms
// ---------------------------------------------------------------------------

// All adjacency-preserving vertex bijections of the canonical graph,
// found by straight backtracking. There are 120 of them.
inline const std::vector<std::array<int, 12>>& graph_automorphisms() {
  static const std::vector<std::array<int, 12>> autos = [] {
    const IcosahedronGraph& g = canonical_graph();
    std::vector<std::array<int, 12>> out;
    std::array<int, 12> map;
    map.fill(-1);
    std::array<bool, 12> used{};
    auto consistent = [&](int v, int image) {
      for (int u = 0; u < v; ++u) {
        const bool adj = g.adjacent(VertexId::from_id(u), VertexId::from_id(v));
        const bool adj_img = g.adjacent(VertexId::from_id(map[static_cast<std::size_t>(u)]),
                                        VertexId::from_id(image));
        if (adj != adj_img) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, int v) -> void {
      if (v == 12) {
        out.push_back(map);
        return;
      }
      for (int image = 0; image < 12; ++image) {
        if (used[static_cast<std::size_t>(image)] || !consistent(v, image)) continue;
        map[static_cast<std::size_t>(v)] = image;
        used[static_cast<std::size_t>(image)] = true;
        self(self, v + 1);
        used[static_cast<std::size_t>(image)] = false;
        map[static_cast<std::size_t>(v)] = -1;
      }
    };
    rec(rec, 0);
    return out;
  }();
  return autos;
}

// ---------------------------------------------------------------------------
// Swap masks
// ---------------------------------------------------------------------------

// A subset of the six pair slots; bit i selects the swap h_i <-> s_i.
class InterMask {
 public:
  constexpr InterMask() = default;
  constexpr explicit InterMask(unsigned bits) : bits_(bits) {
    if (bits > 63) throw std::invalid_argument("InterMask: bits out of range");
  }
  static InterMask of(std::initializer_list<int> slots) {
    unsigned bits = 0;
    for (int s : slots) {
      if (s < 0 || s > 5) throw std::invalid_argument("InterMask: slot out of range");
      bits |= 1u << s;
    }
    return InterMask(bits);
  }
  static constexpr InterMask full() { return InterMask(63); }

  constexpr unsigned bits() const { return bits_; }
  constexpr bool has(int slot) const { return (bits_ >> slot) & 1u; }
  constexpr int count() const {
    int n = 0;
    for (int s = 0; s < 6; ++s) n += has(s);
    return n;
  }
  std::vector<int> slots() const {
    std::vector<int> out;
    for (int s = 0; s < 6; ++s)
      if (has(s)) out.push_back(s);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 6; ++i) {
      if (!has(i)) continue;
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend constexpr bool operator==(InterMask, InterMask) = default;
  friend constexpr auto operator<=>(InterMask, InterMask) = default;

 private:
  unsigned bits_ = 0;
};

struct MaskClass {
  InterMask canonical;  // least bit pattern in the orbit
  int orbit_size;
};

// Masks are classified up to the dihedral symmetry of the slot hexagon
// (6 rotations, 6 reflections).
inline MaskClass mask_symmetry_class(InterMask m) {
  auto apply = [](unsigned bits, auto&& slot_map) {
    unsigned out = 0;
    for (int s = 0; s < 6; ++s)
      if ((bits >> s) & 1u) out |= 1u << slot_map(s);
    return out;
  };
  std::vector<unsigned> orbit;
  for (int r = 0; r < 6; ++r) {
    const unsigned rotated = apply(m.bits(), [r](int s) { return (s + r) % 6; });
    const unsigned reflected = apply(m.bits(), [r](int s) { return ((r - s) % 6 + 6) % 6; });
    for (unsigned b : {rotated, reflected})
      if (std::find(orbit.begin(), orbit.end(), b) == orbit.end()) orbit.push_back(b);
  }
  unsigned least = m.bits();
  for (unsigned b : orbit)
    if (b < least) least = b;
  return {InterMask(least), static_cast<int>(orbit.size())};
}

}  // namespace icosa
