#pragma once

#include <vector>

#include "icosa/assignment.hpp"
#include "icosa/rational.hpp"
#include "icosa/tones.hpp"

namespace icosa {

// Number of neighboring pairs of the scale on the assignment: consecutive
// scale tones (cyclically) whose vertices share an edge.
inline int neighboring_number(const Scale& scale, const MusicalIcosahedron& x) {
  int n = 0;
  for (auto [a, b] : scale.neighbor_pairs())
    if (x.graph().adjacent(x.vertex_of(a), x.vertex_of(b))) ++n;
  return n;
}

inline Rational musical_invariant(const InvariantSpec& spec, const MusicalIcosahedron& x) {
  Rational total = 0;
  for (const auto& term : spec.terms())
    total += term.weight * Rational(neighboring_number(term.scale, x));
  return total;
}

// The conserved combination for the pair-swap family of a base assignment:
// its chain scale with weight 1 plus both ring scales with weight 1/2.
inline InvariantSpec family_invariant_spec(const MusicalIcosahedron& base) {
  return InvariantSpec({{induced_chain_scale(base), Rational(1)},
                        {induced_hexagon_scale(base), Rational(1, 2)},
                        {induced_star_scale(base), Rational(1, 2)}});
}

inline Rational family_invariant(const MusicalIcosahedron& base, const MusicalIcosahedron& x) {
  return musical_invariant(family_invariant_spec(base), x);
}

}  // namespace icosa
