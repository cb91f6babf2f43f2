#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "icosa/assignment.hpp"
#include "icosa/diagrams.hpp"
#include "icosa/extension.hpp"
#include "icosa/invariants.hpp"
#include "icosa/permutations.hpp"
#include "icosa/solver.hpp"
#include "icosa/tones.hpp"

namespace icosa {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct CheckReport {
  std::string title;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  void add(std::string name, bool passed, std::string detail = "") {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

namespace detail {

inline std::string triple_str(const std::array<int, 3>& t) {
  return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]) +
         ")";
}

inline std::array<int, 3> base_triple(const MusicalIcosahedron& x) {
  return {neighboring_number(catalog("chromatic"), x), neighboring_number(catalog("W1"), x),
          neighboring_number(catalog("W2"), x)};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// 1. Canonical assignment ground truth
// ---------------------------------------------------------------------------

inline CheckReport ground_truth_checks(const MusicalIcosahedron& base = type1()) {
  CheckReport report{"ground truth", {}, {}};
  report.add("graph structure valid", validate_icosahedron(canonical_graph()).all_passed());
  const auto t = detail::base_triple(base);
  report.add("N(chromatic) = 12", t[0] == 12, "got " + std::to_string(t[0]));
  report.add("N(W1) = 6", t[1] == 6, "got " + std::to_string(t[1]));
  report.add("N(W2) = 0", t[2] == 0, "got " + std::to_string(t[2]));
  const Rational inv = musical_invariant(
      InvariantSpec({{catalog("chromatic"), Rational(1)},
                     {catalog("W1"), Rational(1, 2)},
                     {catalog("W2"), Rational(1, 2)}}),
      base);
  report.add("weighted invariant = 15", inv == Rational(15), "got " + inv.to_string());
  return report;
}

// ---------------------------------------------------------------------------
// 2. Pair-swap family invariant
// ---------------------------------------------------------------------------

inline CheckReport inter_invariant_checks(const MusicalIcosahedron& base = type1()) {
  CheckReport report{"pair-swap family invariant", {}, {}};
  const InvariantSpec spec = family_invariant_spec(base);
  bool all15 = true;
  std::string bad;
  int intermediates = 0;
  for (const auto& member : inter_family(base)) {
    const Rational v = musical_invariant(spec, member.assignment);
    if (v != Rational(15)) {
      all15 = false;
      bad = "mask " + member.mask.to_string() + " gives " + v.to_string();
    }
    intermediates += member.intermediate ? 1 : 0;
  }
  report.add("invariant = 15 on all 64 members", all15, bad);
  report.add("62 intermediate members", intermediates == 62, "got " + std::to_string(intermediates));
  return report;
}

// ---------------------------------------------------------------------------
// 3. Pair-swap classification
// ---------------------------------------------------------------------------

inline CheckReport inter_classification_checks(const MusicalIcosahedron& base = type1()) {
  CheckReport report{"pair-swap classification", {}, {}};
  const InterFamilyTable table = classify_inter_family(base);
  report.notes = table.notices;

  report.add("row identities hold for all 64 members", table.violations.empty(),
             table.violations.empty() ? "" : table.violations.front());

  const std::vector<std::vector<int>> expected_sizes = {{1}, {6}, {3, 6, 6}, {2, 6, 12},
                                                        {3, 6, 6}, {6}, {1}};
  bool sizes_ok = table.rows.size() == 7;
  for (std::size_t k = 0; sizes_ok && k < table.rows.size(); ++k) {
    std::vector<int> sizes;
    for (const auto& c : table.rows[k].classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    sizes_ok = sizes == expected_sizes[k];
  }
  report.add("class orbit sizes per swap count are 1/6/(3,6,6)/(2,6,12)/(3,6,6)/6/1", sizes_ok);

  bool binomial_ok = true;
  const std::array<int, 7> choose = {1, 6, 15, 20, 15, 6, 1};
  for (std::size_t k = 0; k < table.rows.size() && k < 7; ++k) {
    int total = 0;
    for (const auto& c : table.rows[k].classes) total += c.size();
    if (total != choose[k]) binomial_ok = false;
  }
  report.add("class sizes per row sum to C(6,k)", binomial_ok);

  // Pinned neighboring-number triples for the canonical family, identified by
  // canonical mask.
  const std::map<unsigned, std::array<int, 3>> pinned = {
      {InterMask::of({}).bits(), {12, 6, 0}},
      {InterMask::of({0}).bits(), {11, 6, 2}},
      {InterMask::of({0, 1}).bits(), {11, 5, 3}},
      {InterMask::of({0, 2}).bits(), {10, 6, 4}},
      {InterMask::of({0, 3}).bits(), {10, 6, 4}},
      {InterMask::of({0, 1, 2}).bits(), {11, 4, 4}},
      {InterMask::of({0, 1, 3}).bits(), {10, 5, 5}},
      {InterMask::of({0, 2, 4}).bits(), {9, 6, 6}},
  };
  bool triples_ok = true;
  std::string bad;
  for (const auto& row : table.rows)
    for (const auto& c : row.classes) {
      auto it = pinned.find(c.canonical.bits());
      if (it != pinned.end() && c.counts != it->second) {
        triples_ok = false;
        bad = "class " + c.canonical.to_string() + " gives " + detail::triple_str(c.counts);
      }
    }
  report.add("pinned class triples match", triples_ok, bad);

  report.add("13 classes in total", table.total_classes() == 13,
             "got " + std::to_string(table.total_classes()));
  report.add("11 intermediate classes", table.intermediate_classes() == 11);

  bool notice_found = false;
  for (const auto& n : table.notices)
    if (n.find("(9,6,6)") != std::string::npos) notice_found = true;
  report.add("discrepancy notice for the alternating three-swap class", notice_found);
  return report;
}

// ---------------------------------------------------------------------------
// 4. Star-rearrangement classification
// ---------------------------------------------------------------------------

inline CheckReport intra_classification_checks(const MusicalIcosahedron& base = type1()) {
  CheckReport report{"star-rearrangement classification", {}, {}};

  const auto family = intra_family(base);
  report.add("720 members", family.size() == 720, "got " + std::to_string(family.size()));
  int intermediates = 0;
  for (const auto& m : family) intermediates += m.intermediate ? 1 : 0;
  report.add("718 intermediate members", intermediates == 718,
             "got " + std::to_string(intermediates));

  const IntraFamilyTable table = classify_intra_family(base);
  report.add("level identities hold for all members", table.violations.empty(),
             table.violations.empty() ? "" : table.violations.front());

  const std::vector<int> expected_kinds = {1, 2, 4, 8, 6, 8, 20, 8, 6, 8, 4, 2, 1};
  const std::vector<int> kinds = table.kind_counts();
  report.add("kind counts by level are 1,2,4,8,6,8,20,8,6,8,4,2,1", kinds == expected_kinds);

  bool levels_complete = table.rows.size() == 13;
  for (std::size_t i = 0; levels_complete && i < table.rows.size(); ++i)
    levels_complete = table.rows[i].n_chain == 12 - static_cast<int>(i) &&
                      table.rows[i].n_dual == static_cast<int>(i);
  report.add("levels run (12,0) down to (0,12)", levels_complete);

  int members_total = 0;
  for (const auto& r : table.rows) members_total += r.member_total;
  report.add("level populations sum to 718", members_total == 718,
             "got " + std::to_string(members_total));

  auto signature_set = [&](int n_chain) {
    std::set<ShiftSignature> sigs;
    if (const IntraLevelRow* row = table.level(n_chain))
      for (const auto& c : row->classes) sigs.insert(c.signature);
    return sigs;
  };
  report.add("level (11,1) kinds are (1,5) and (4,5,5,5,5)",
             signature_set(11) == std::set<ShiftSignature>{{1, 5}, {4, 5, 5, 5, 5}});
  report.add("level (12,0) kind is (5,5,5,5,5,5)",
             signature_set(12) == std::set<ShiftSignature>{{5, 5, 5, 5, 5, 5}});
  report.add("level (0,12) kind is (2,2,2,2,2,2)",
             signature_set(0) == std::set<ShiftSignature>{{2, 2, 2, 2, 2, 2}});
  return report;
}

// ---------------------------------------------------------------------------
// 5. Relabeled assignments
// ---------------------------------------------------------------------------

inline CheckReport relabeled_type_checks() {
  CheckReport report{"relabeled assignments", {}, {}};
  const std::map<char, ShiftSignature> expected_sig = {{'A', {3, 5, 5, 5}},
                                                       {'B', {3, 4, 5}},
                                                       {'C', {1, 3, 5, 5, 5, 5}},
                                                       {'D', {1, 3, 4, 5, 5}}};
  for (char f : {'A', 'B', 'C', 'D'}) {
    const std::string label = std::string("R") + f;
    const MusicalIcosahedron rn = named_type(label);

    report.add(label + " chain scale is chromatic " + f,
               induced_chain_scale(rn) == catalog(std::string("chromatic_") + f));
    report.add(label + " hexagon ring is W1", induced_hexagon_scale(rn) == catalog("W1"));
    report.add(label + " star ring is whole tone " + f + "2",
               induced_star_scale(rn) == catalog(std::string("wholetone_") + f + "2"));

    std::array<PitchClass, 6> arr{};
    for (int i = 0; i < 6; ++i) arr[static_cast<std::size_t>(i)] = rn.tone_at(VertexId::star(i));
    const IntraPermutation p = IntraPermutation::star_arrangement(type1(), arr);
    report.add(label + " reachable from the canonical assignment by a star rearrangement",
               apply_intra(type1(), p) == rn);
    const ShiftSignature sig = intra_signature(p);
    report.add(label + " signature is " + signature_to_string(expected_sig.at(f)),
               sig == expected_sig.at(f), "got " + signature_to_string(sig));

    bool all15 = true;
    for (const auto& member : inter_family(rn))
      if (family_invariant(rn, member.assignment) != Rational(15)) all15 = false;
    report.add(label + " family invariant is 15 on all 64 members", all15);
  }
  return report;
}

// ---------------------------------------------------------------------------
// 6. Scale-family coverage
// ---------------------------------------------------------------------------

inline CheckReport melakarta_coverage_checks() {
  CheckReport report{"extension coverage of the 72-scale catalog", {}, {}};
  const MelakartaTheoremReport r = verify_melakarta();

  bool each32 = r.per_base_count.size() == 4;
  for (const auto& [label, n] : r.per_base_count)
    if (n != 32) each32 = false;
  report.add("each base yields 32 scale sets", each32);
  report.add("union equals the 72-scale catalog", r.sets_match(),
             "missing " + std::to_string(r.missing.size()) + ", unexpected " +
                 std::to_string(r.unexpected.size()));
  report.add("every produced set is well-shaped", r.structural_ok);
  report.add("all witnesses reproduce their scale", r.witnesses_roundtrip);

  bool all_witnessed = true;
  for (const auto& row : r.ragas)
    if (row.witnesses.empty()) all_witnessed = false;
  report.add("every catalog scale has a witness", all_witnessed);
  return report;
}

// ---------------------------------------------------------------------------
// 7. Constraint solver
// ---------------------------------------------------------------------------

inline CheckReport solver_checks() {
  CheckReport report{"constraint solver", {}, {}};
  const std::vector<AssignmentConstraint> canonical_constraints = {
      {catalog("chromatic"), 12}, {catalog("W1"), 6}, {catalog("W2"), 0}};

  const std::vector<GaugePlacement> gauge = {{VertexId::hexagon(0), pitch_class("C")},
                                             {VertexId::hexagon(1), pitch_class("D")},
                                             {VertexId::star(0), pitch_class("C#")}};
  const auto gauged = search_assignments(canonical_constraints, gauge);
  report.add("gauged search finds the canonical assignment",
             std::find(gauged.begin(), gauged.end(), type1()) != gauged.end(),
             std::to_string(gauged.size()) + " solutions");

  bool sound = true;
  for (const auto& x : gauged)
    for (const auto& c : canonical_constraints)
      if (neighboring_number(c.scale, x) != c.required) sound = false;
  report.add("every gauged solution satisfies the constraints exactly", sound);

  const auto free = search_assignments(canonical_constraints);
  std::set<std::array<PitchClass, 12>> found;
  for (const auto& x : free) found.insert(x.tones());

  const auto orbit_of = [](const MusicalIcosahedron& x) {
    std::set<std::array<PitchClass, 12>> orbit;
    for (const auto& sigma : graph_automorphisms()) {
      std::array<PitchClass, 12> image{};
      for (int v = 0; v < 12; ++v)
        image[static_cast<std::size_t>(sigma[static_cast<std::size_t>(v)])] =
            x.tones()[static_cast<std::size_t>(v)];
      orbit.insert(image);
    }
    return orbit;
  };
  std::array<PitchClass, 12> inverted_tones{};
  for (int v = 0; v < 12; ++v)
    inverted_tones[static_cast<std::size_t>(v)] =
        PitchClass(-type1().tones()[static_cast<std::size_t>(v)].value());
  const MusicalIcosahedron inverted(inverted_tones);

  const auto orbit = orbit_of(type1());
  const auto mirror_orbit = orbit_of(inverted);
  std::set<std::array<PitchClass, 12>> both = orbit;
  both.insert(mirror_orbit.begin(), mirror_orbit.end());
  report.add("ungauged solutions = the two 120-element symmetry orbits",
             found == both && found.size() == 240 && orbit.size() == 120 &&
                 mirror_orbit.size() == 120,
             std::to_string(found.size()) + " solutions, orbits " + std::to_string(orbit.size()) +
                 " + " + std::to_string(mirror_orbit.size()));
  report.add("tone inversion of the canonical assignment is not symmetry-equivalent to it",
             orbit.count(inverted.tones()) == 0);
  report.notes.push_back(
      "the canonical constraints pin the assignment only up to graph symmetry together with "
      "tone inversion: the inverted assignment satisfies them but lies outside the canonical "
      "orbit, so the full solution set has 240 members, not 120");

  report.add("overconstrained search is empty",
             search_assignments({{catalog("chromatic"), 13}}).empty());

  const auto pyth = search_assignments({{catalog("pythagorean"), 12}, {catalog("W1"), 6}},
                                       {{VertexId::hexagon(0), pitch_class("C")},
                                        {VertexId::hexagon(1), pitch_class("D")}});
  report.add("Pythagorean search finds the shifted assignment",
             std::find(pyth.begin(), pyth.end(), named_type("type1'")) != pyth.end(),
             std::to_string(pyth.size()) + " solutions");

  bool throws = false;
  try {
    search_assignments(canonical_constraints, {{VertexId::hexagon(0), pitch_class("C")},
                                               {VertexId::hexagon(0), pitch_class("D")}});
  } catch (const std::invalid_argument&) {
    throws = true;
  }
  report.add("contradictory gauge is rejected", throws);
  return report;
}

// ---------------------------------------------------------------------------
// 8. Spot values
// ---------------------------------------------------------------------------

inline CheckReport spot_value_checks() {
  CheckReport report{"pinned spot values", {}, {}};
  const MusicalIcosahedron base = type1();
  const Scale& chromatic = catalog("chromatic");
  const Scale& pythagorean = catalog("pythagorean");

  const auto single = detail::base_triple(apply_inter(base, InterMask::of({0})));
  report.add("single pair swap gives (11,6,2)", single == std::array<int, 3>{11, 6, 2},
             detail::triple_str(single));

  auto level = [&](const IntraPermutation& p) {
    const MusicalIcosahedron x = apply_intra(base, p);
    return std::pair<int, int>{neighboring_number(chromatic, x),
                               neighboring_number(pythagorean, x)};
  };
  auto swap2 = [](const char* a, const char* b) {
    return IntraPermutation::from_swaps({{pitch_class(a), pitch_class(b)}});
  };

  const IntraPermutation semitone_swap = swap2("C#", "Eb");
  report.add("C#/Eb swap has signature (1,5)", intra_signature(semitone_swap) == ShiftSignature{1, 5});
  report.add("C#/Eb swap sits at level (11,1)", level(semitone_swap) == std::pair<int, int>{11, 1});

  const IntraPermutation opposite_swap = swap2("C#", "G");
  report.add("C#/G swap has signature (3,3)", intra_signature(opposite_swap) == ShiftSignature{3, 3});
  report.add("C#/G swap sits at level (8,4)", level(opposite_swap) == std::pair<int, int>{8, 4});

  const IntraPermutation double_swap = IntraPermutation::from_swaps(
      {{pitch_class("C#"), pitch_class("G")}, {pitch_class("Eb"), pitch_class("A")}});
  report.add("double opposite swap has signature (3,3,3,3)",
             intra_signature(double_swap) == ShiftSignature{3, 3, 3, 3});
  report.add("double opposite swap sits at level (4,8)",
             level(double_swap) == std::pair<int, int>{4, 8});

  const IntraPermutation shift = IntraPermutation::star_shift(base, 2);
  report.add("uniform shift has signature (2,2,2,2,2,2)",
             intra_signature(shift) == ShiftSignature{2, 2, 2, 2, 2, 2});
  report.add("uniform shift sits at level (0,12)", level(shift) == std::pair<int, int>{0, 12});
  return report;
}

// ---------------------------------------------------------------------------
// 9. Counting diagrams
// ---------------------------------------------------------------------------

inline CheckReport diagram_checks() {
  CheckReport report{"counting diagrams", {}, {}};
  bool counts_match = true;
  std::string bad;
  for (char f : {'A', 'B', 'C', 'D'}) {
    const MusicalIcosahedron base = named_type(std::string("R") + f);
    for (const auto& member : inter_family(base)) {
      const CircleDiagram d = permutation_circle_svg(f, member.assignment);
      const Rational inv = family_invariant(base, member.assignment);
      if (d.circle_count != inv || d.circle_count != Rational(15)) {
        counts_match = false;
        bad = std::string("R") + f + " mask " + member.mask.to_string() + ": circles " +
              d.circle_count.to_string() + ", invariant " + inv.to_string();
      }
    }
  }
  report.add("circle count equals the family invariant (15) on all 256 members", counts_match,
             bad);

  const CircleDiagram ra = permutation_circle_svg('A', named_type("RA"));
  report.add("base diagram colors all 12 full circles", ra.colored_full == 12,
             std::to_string(ra.colored_full) + " full circles");

  report.add("projection rendering is deterministic",
             projection_svg(type1(), true) == projection_svg(type1(), true));
  report.add("circle rendering is deterministic",
             permutation_circle_svg('B', named_type("RB")).svg ==
                 permutation_circle_svg('B', named_type("RB")).svg);
  return report;
}

// ---------------------------------------------------------------------------

inline std::vector<CheckReport> verify_all(const MusicalIcosahedron& base = type1()) {
  return {ground_truth_checks(base),
          inter_invariant_checks(base),
          inter_classification_checks(base),
          intra_classification_checks(base),
          relabeled_type_checks(),
          melakarta_coverage_checks(),
          solver_checks(),
          spot_value_checks(),
          diagram_checks()};
}

}  // namespace icosa
