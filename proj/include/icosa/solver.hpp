#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "icosa/assignment.hpp"
#include "icosa/icosahedron.hpp"
#include "icosa/tones.hpp"

namespace icosa {

// ---------------------------------------------------------------------------
// Constraint search over assignments
// ---------------------------------------------------------------------------

struct AssignmentConstraint {
  Scale scale;
  int required;  // exact neighboring number the solution must have
};

struct GaugePlacement {
  VertexId vertex;
  PitchClass tone;
};

// Backtracking over tone placements. Tones are placed in order of first
// appearance across the constraint scales, so every placement immediately
// decides the adjacency of the pairs it completes; a branch dies as soon as
// a constraint can no longer reach its required count exactly.
//
// An over-large requirement yields no solutions; a malformed gauge (vertex
// or tone pinned twice) is an input error. With canonicalize set, only the
// lexicographically least member of each automorphism orbit is kept.
inline std::vector<MusicalIcosahedron> search_assignments(
    const std::vector<AssignmentConstraint>& constraints,
    const std::vector<GaugePlacement>& gauge = {}, bool canonicalize = false) {
  if (constraints.empty())
    throw std::invalid_argument("search_assignments: need at least one constraint");
  for (const auto& c : constraints)
    if (c.required < 0) throw std::invalid_argument("search_assignments: negative requirement");

  const std::size_t nc = constraints.size();
  struct PairRef {
    int constraint;
    int other;  // tone value of the pair's other end
  };
  std::array<std::vector<PairRef>, 12> refs;
  std::vector<int> pair_total(nc), required(nc);
  for (std::size_t ci = 0; ci < nc; ++ci) {
    const auto pairs = constraints[ci].scale.neighbor_pairs();
    pair_total[ci] = static_cast<int>(pairs.size());
    required[ci] = constraints[ci].required;
    if (required[ci] > pair_total[ci]) return {};
    for (auto [a, b] : pairs) {
      refs[static_cast<std::size_t>(a.value())].push_back({static_cast<int>(ci), b.value()});
      refs[static_cast<std::size_t>(b.value())].push_back({static_cast<int>(ci), a.value()});
    }
  }

  const IcosahedronGraph& g = canonical_graph();
  std::array<int, 12> vertex_of_tone;
  std::array<int, 12> tone_at_vertex;
  vertex_of_tone.fill(-1);
  tone_at_vertex.fill(-1);
  std::vector<int> decided(nc, 0), adjacent(nc, 0);

  // Returns false when the placement kills some constraint.
  auto place = [&](int tone, int vertex) {
    vertex_of_tone[static_cast<std::size_t>(tone)] = vertex;
    tone_at_vertex[static_cast<std::size_t>(vertex)] = tone;
    bool ok = true;
    for (const auto& ref : refs[static_cast<std::size_t>(tone)]) {
      const int other_vertex = vertex_of_tone[static_cast<std::size_t>(ref.other)];
      if (other_vertex == -1) continue;
      const auto ci = static_cast<std::size_t>(ref.constraint);
      ++decided[ci];
      adjacent[ci] +=
          g.adjacent(VertexId::from_id(vertex), VertexId::from_id(other_vertex)) ? 1 : 0;
      if (adjacent[ci] > required[ci] ||
          adjacent[ci] + (pair_total[ci] - decided[ci]) < required[ci])
        ok = false;
    }
    return ok;
  };
  auto unplace = [&](int tone) {
    const int vertex = vertex_of_tone[static_cast<std::size_t>(tone)];
    for (const auto& ref : refs[static_cast<std::size_t>(tone)]) {
      const int other_vertex = vertex_of_tone[static_cast<std::size_t>(ref.other)];
      if (other_vertex == -1 || ref.other == tone) continue;
      const auto ci = static_cast<std::size_t>(ref.constraint);
      --decided[ci];
      adjacent[ci] -=
          g.adjacent(VertexId::from_id(vertex), VertexId::from_id(other_vertex)) ? 1 : 0;
    }
    vertex_of_tone[static_cast<std::size_t>(tone)] = -1;
    tone_at_vertex[static_cast<std::size_t>(vertex)] = -1;
  };

  bool gauge_viable = true;
  for (const auto& p : gauge) {
    if (tone_at_vertex[static_cast<std::size_t>(p.vertex.id())] != -1 ||
        vertex_of_tone[static_cast<std::size_t>(p.tone.value())] != -1)
      throw std::invalid_argument("search_assignments: contradictory gauge");
    if (!place(p.tone.value(), p.vertex.id())) gauge_viable = false;
  }
  if (!gauge_viable) return {};

  std::vector<int> order;
  std::array<bool, 12> queued{};
  auto enqueue = [&](int tone) {
    if (!queued[static_cast<std::size_t>(tone)] &&
        vertex_of_tone[static_cast<std::size_t>(tone)] == -1) {
      queued[static_cast<std::size_t>(tone)] = true;
      order.push_back(tone);
    }
  };
  for (const auto& c : constraints)
    for (PitchClass t : c.scale.tones()) enqueue(t.value());
  for (int t = 0; t < 12; ++t) enqueue(t);

  std::vector<MusicalIcosahedron> solutions;
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == order.size()) {
      std::array<PitchClass, 12> tones{};
      for (int v = 0; v < 12; ++v)
        tones[static_cast<std::size_t>(v)] = PitchClass(tone_at_vertex[static_cast<std::size_t>(v)]);
      solutions.emplace_back(tones);
      return;
    }
    const int tone = order[depth];
    for (int v = 0; v < 12; ++v) {
      if (tone_at_vertex[static_cast<std::size_t>(v)] != -1) continue;
      if (place(tone, v)) self(self, depth + 1);
      unplace(tone);
    }
  };
  rec(rec, 0);

  if (canonicalize) {
    std::vector<MusicalIcosahedron> reps;
    for (const auto& x : solutions) {
      bool least = true;
      for (const auto& sigma : graph_automorphisms()) {
        std::array<PitchClass, 12> image{};
        for (int v = 0; v < 12; ++v)
          image[static_cast<std::size_t>(sigma[static_cast<std::size_t>(v)])] =
              x.tones()[static_cast<std::size_t>(v)];
        if (image < x.tones()) {
          least = false;
          break;
        }
      }
      if (least) reps.push_back(x);
    }
    solutions = std::move(reps);
  }

  std::sort(solutions.begin(), solutions.end(),
            [](const MusicalIcosahedron& a, const MusicalIcosahedron& b) {
              return a.tones() < b.tones();
            });
  return solutions;
}

}  // namespace icosa
