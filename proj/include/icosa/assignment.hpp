#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "icosa/icosahedron.hpp"
#include "icosa/tones.hpp"

namespace icosa {

// ---------------------------------------------------------------------------
// Assignments
// ---------------------------------------------------------------------------

// A bijection between the 12 vertices of the canonical graph and the 12
// pitch classes. The label is descriptive metadata; equality ignores it.
class MusicalIcosahedron {
 public:
  MusicalIcosahedron(std::array<PitchClass, 12> tone_by_vertex, std::string label = "")
      : tones_(tone_by_vertex), label_(std::move(label)) {
    vertex_of_.fill(-1);
    for (int v = 0; v < 12; ++v) {
      const int t = tones_[static_cast<std::size_t>(v)].value();
      if (vertex_of_[static_cast<std::size_t>(t)] != -1)
        throw std::invalid_argument("assignment: tone " + std::string(PitchClass(t).name()) +
                                    " appears twice");
      vertex_of_[static_cast<std::size_t>(t)] = v;
    }
  }

  PitchClass tone_at(VertexId v) const { return tones_[static_cast<std::size_t>(v.id())]; }
  VertexId vertex_of(PitchClass t) const {
    return VertexId::from_id(vertex_of_[static_cast<std::size_t>(t.value())]);
  }

  const std::array<PitchClass, 12>& tones() const { return tones_; }
  const std::string& label() const { return label_; }
  MusicalIcosahedron with_label(std::string label) const {
    MusicalIcosahedron copy = *this;
    copy.label_ = std::move(label);
    return copy;
  }

  const IcosahedronGraph& graph() const { return canonical_graph(); }

  friend bool operator==(const MusicalIcosahedron& a, const MusicalIcosahedron& b) {
    return a.tones_ == b.tones_;
  }

 private:
  std::array<PitchClass, 12> tones_;
  std::array<int, 12> vertex_of_;
  std::string label_;
};

// Reads tones along the interleaved walk h0,s0,h1,s1,...,h5,s5.
inline Scale induced_chain_scale(const MusicalIcosahedron& x) {
  std::vector<PitchClass> tones;
  tones.reserve(12);
  for (int i = 0; i < 6; ++i) {
    tones.push_back(x.tone_at(VertexId::hexagon(i)));
    tones.push_back(x.tone_at(VertexId::star(i)));
  }
  return Scale(std::move(tones));
}

inline Scale induced_hexagon_scale(const MusicalIcosahedron& x) {
  std::vector<PitchClass> tones;
  for (int i = 0; i < 6; ++i) tones.push_back(x.tone_at(VertexId::hexagon(i)));
  return Scale(std::move(tones));
}

inline Scale induced_star_scale(const MusicalIcosahedron& x) {
  std::vector<PitchClass> tones;
  for (int i = 0; i < 6; ++i) tones.push_back(x.tone_at(VertexId::star(i)));
  return Scale(std::move(tones));
}

// Inverse of induced_chain_scale: lays a 12-tone scale along the walk.
inline MusicalIcosahedron assignment_from_chain(const Scale& chain, std::string label = "") {
  if (chain.size() != 12) throw std::invalid_argument("assignment_from_chain: need 12 tones");
  std::array<PitchClass, 12> tones{};
  for (int i = 0; i < 6; ++i) {
    tones[static_cast<std::size_t>(VertexId::hexagon(i).id())] =
        chain.tones()[static_cast<std::size_t>(2 * i)];
    tones[static_cast<std::size_t>(VertexId::star(i).id())] =
        chain.tones()[static_cast<std::size_t>(2 * i + 1)];
  }
  return MusicalIcosahedron(tones, std::move(label));
}

// ---------------------------------------------------------------------------
// Pair swaps
// ---------------------------------------------------------------------------

// Exchanges the tones of the coupled vertices (h_i, s_i) for every slot in
// the mask. Involutive; the label is carried through.
inline MusicalIcosahedron apply_inter(const MusicalIcosahedron& x, InterMask mask) {
  std::array<PitchClass, 12> tones = x.tones();
  for (int i = 0; i < 6; ++i) {
    if (!mask.has(i)) continue;
    std::swap(tones[static_cast<std::size_t>(VertexId::hexagon(i).id())],
              tones[static_cast<std::size_t>(VertexId::star(i).id())]);
  }
  return MusicalIcosahedron(tones, x.label());
}

// ---------------------------------------------------------------------------
// Star-tone permutations
// ---------------------------------------------------------------------------

// A permutation of the 12 pitch classes intended to move only the star tones
// of some base assignment; apply_intra enforces that the hexagon stays put.
class IntraPermutation {
 public:
  static IntraPermutation identity() { return IntraPermutation(); }

  static IntraPermutation from_swaps(
      const std::vector<std::pair<PitchClass, PitchClass>>& swaps) {
    IntraPermutation p;
    std::array<bool, 12> touched{};
    for (auto [a, b] : swaps) {
      if (a == b || touched[static_cast<std::size_t>(a.value())] ||
          touched[static_cast<std::size_t>(b.value())])
        throw std::invalid_argument("IntraPermutation: swaps must be disjoint transpositions");
      touched[static_cast<std::size_t>(a.value())] = true;
      touched[static_cast<std::size_t>(b.value())] = true;
      p.image_[static_cast<std::size_t>(a.value())] = b;
      p.image_[static_cast<std::size_t>(b.value())] = a;
    }
    return p;
  }

  static IntraPermutation from_images(const std::array<PitchClass, 12>& image) {
    IntraPermutation p;
    std::array<bool, 12> hit{};
    for (int t = 0; t < 12; ++t) {
      const int img = image[static_cast<std::size_t>(t)].value();
      if (hit[static_cast<std::size_t>(img)])
        throw std::invalid_argument("IntraPermutation: not a bijection");
      hit[static_cast<std::size_t>(img)] = true;
    }
    p.image_ = image;
    return p;
  }

  // Sends the base's tone at s_i to arrangement[i].
  static IntraPermutation star_arrangement(const MusicalIcosahedron& base,
                                           const std::array<PitchClass, 6>& arrangement) {
    std::array<PitchClass, 12> image;
    for (int t = 0; t < 12; ++t) image[static_cast<std::size_t>(t)] = PitchClass(t);
    for (int i = 0; i < 6; ++i) {
      const PitchClass from = base.tone_at(VertexId::star(i));
      image[static_cast<std::size_t>(from.value())] = arrangement[static_cast<std::size_t>(i)];
    }
    return from_images(image);
  }

  // Shifts every star tone of the base by 2*step semitones. Requires the
  // star tone set to be closed under that shift.
  static IntraPermutation star_shift(const MusicalIcosahedron& base, int step) {
    std::array<PitchClass, 12> image;
    for (int t = 0; t < 12; ++t) image[static_cast<std::size_t>(t)] = PitchClass(t);
    std::array<bool, 12> is_star{};
    for (int i = 0; i < 6; ++i)
      is_star[static_cast<std::size_t>(base.tone_at(VertexId::star(i)).value())] = true;
    for (int t = 0; t < 12; ++t) {
      if (!is_star[static_cast<std::size_t>(t)]) continue;
      const PitchClass img = PitchClass(t).shifted(2 * step);
      if (!is_star[static_cast<std::size_t>(img.value())])
        throw std::invalid_argument("star_shift: star tones not closed under shift");
      image[static_cast<std::size_t>(t)] = img;
    }
    return from_images(image);
  }

  PitchClass operator()(PitchClass t) const { return image_[static_cast<std::size_t>(t.value())]; }

  bool is_identity() const {
    for (int t = 0; t < 12; ++t)
      if (image_[static_cast<std::size_t>(t)].value() != t) return false;
    return true;
  }

  std::vector<PitchClass> moved_tones() const {
    std::vector<PitchClass> out;
    for (int t = 0; t < 12; ++t)
      if (image_[static_cast<std::size_t>(t)].value() != t) out.push_back(PitchClass(t));
    return out;
  }

 private:
  IntraPermutation() {
    for (int t = 0; t < 12; ++t) image_[static_cast<std::size_t>(t)] = PitchClass(t);
  }

  std::array<PitchClass, 12> image_;
};

// Rewrites the tone at every star vertex through p; hexagon tones must be
// fixed by p or the permutation is not intra for this base.
inline MusicalIcosahedron apply_intra(const MusicalIcosahedron& x, const IntraPermutation& p) {
  for (int i = 0; i < 6; ++i) {
    const PitchClass t = x.tone_at(VertexId::hexagon(i));
    if (p(t) != t)
      throw std::domain_error("apply_intra: permutation moves hexagon tone " +
                              std::string(t.name()));
  }
  std::array<PitchClass, 12> tones = x.tones();
  for (int i = 0; i < 6; ++i) {
    const auto v = static_cast<std::size_t>(VertexId::star(i).id());
    tones[v] = p(tones[v]);
  }
  return MusicalIcosahedron(tones, x.label());
}

// ---------------------------------------------------------------------------
// Named assignments
// ---------------------------------------------------------------------------

struct UnsupportedTypeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Whole tone scale on the belt, the other whole tone scale interleaved on
// the hexagram so that every coupled pair is a semitone.
inline MusicalIcosahedron type1() {
  static const MusicalIcosahedron x = [] {
    std::array<PitchClass, 12> tones{};
    const Scale& hex = catalog("W1");
    const Scale& star = catalog("W2");
    for (int i = 0; i < 6; ++i) {
      tones[static_cast<std::size_t>(VertexId::hexagon(i).id())] =
          hex.tones()[static_cast<std::size_t>(i)];
      tones[static_cast<std::size_t>(VertexId::star(i).id())] =
          star.tones()[static_cast<std::size_t>(i)];
    }
    return MusicalIcosahedron(tones, "type1");
  }();
  return x;
}

inline const std::vector<std::string>& named_type_keys() {
  static const std::vector<std::string> keys = {"type1", "type1'", "type3", "type3'",
                                                "RA",    "RB",     "RC",    "RD"};
  return keys;
}

inline MusicalIcosahedron named_type(std::string_view name) {
  auto tritone = [](const MusicalIcosahedron& base) {
    return IntraPermutation::star_shift(base, 3);
  };
  if (name == "type1") return type1();
  if (name == "type1'" || name == "type1_prime")
    return apply_intra(type1(), tritone(type1())).with_label("type1'");
  if (name == "type3") return apply_inter(type1(), InterMask::full()).with_label("type3");
  if (name == "type3'" || name == "type3_prime")
    return apply_inter(named_type("type1'"), InterMask::full()).with_label("type3'");
  if (name == "RA") return assignment_from_chain(catalog("chromatic_A"), "RA");
  if (name == "RB") return assignment_from_chain(catalog("chromatic_B"), "RB");
  if (name == "RC") return assignment_from_chain(catalog("chromatic_C"), "RC");
  if (name == "RD") return assignment_from_chain(catalog("chromatic_D"), "RD");
  throw UnsupportedTypeError("unsupported assignment type: " + std::string(name));
}

}  // namespace icosa
