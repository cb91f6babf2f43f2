#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <vector>

#include "icosa/invariants.hpp"
#include "icosa/solver.hpp"

using namespace icosa;

namespace {

std::vector<AssignmentConstraint> canonical_constraints() {
  return {{catalog("chromatic"), 12}, {catalog("W1"), 6}, {catalog("W2"), 0}};
}

std::set<std::array<PitchClass, 12>> orbit_of(const MusicalIcosahedron& x) {
  std::set<std::array<PitchClass, 12>> orbit;
  for (const auto& sigma : graph_automorphisms()) {
    std::array<PitchClass, 12> image{};
    for (int v = 0; v < 12; ++v)
      image[static_cast<std::size_t>(sigma[static_cast<std::size_t>(v)])] =
          x.tones()[static_cast<std::size_t>(v)];
    orbit.insert(image);
  }
  return orbit;
}

GaugePlacement pin(const char* vertex, const char* tone) {
  return {VertexId::parse(vertex), pitch_class(tone)};
}

// Tone inversion t -> -t fixes the chromatic, W1, and W2 neighboring numbers
// but is not induced by any graph automorphism, so the canonical constraints
// admit a second orbit besides type1's.
MusicalIcosahedron inverted_type1() {
  std::array<PitchClass, 12> tones{};
  for (int v = 0; v < 12; ++v)
    tones[static_cast<std::size_t>(v)] =
        PitchClass(-type1().tones()[static_cast<std::size_t>(v)].value());
  return MusicalIcosahedron(tones);
}

}  // namespace

TEST_CASE("input validation", "[solver]") {
  CHECK_THROWS_AS(search_assignments({}), std::invalid_argument);
  CHECK_THROWS_AS(search_assignments({{catalog("W1"), -1}}), std::invalid_argument);
  CHECK_THROWS_AS(
      search_assignments(canonical_constraints(), {pin("h0", "C"), pin("h0", "D")}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      search_assignments(canonical_constraints(), {pin("h0", "C"), pin("h1", "C")}),
      std::invalid_argument);
}

TEST_CASE("unreachable requirements yield no solutions", "[solver]") {
  CHECK(search_assignments({{catalog("chromatic"), 13}}).empty());
  CHECK(search_assignments({{catalog("c_major"), 8}, {catalog("chromatic"), 12}}).empty());

  // C pinned away from its chromatic neighbors kills the 12-count.
  const auto blocked =
      search_assignments(canonical_constraints(), {pin("h0", "C"), pin("s3", "C#")});
  CHECK(blocked.empty());
}

TEST_CASE("three pins cut the solutions to the two enantiomers", "[solver]") {
  const auto solutions = search_assignments(
      canonical_constraints(), {pin("h0", "C"), pin("h1", "D"), pin("s0", "C#")});
  REQUIRE(solutions.size() == 2);
  CHECK(std::count(solutions.begin(), solutions.end(), type1()) == 1);
  const auto mirror = orbit_of(inverted_type1());
  const auto& other = solutions.front() == type1() ? solutions.back() : solutions.front();
  CHECK(mirror.count(other.tones()) == 1);
}

TEST_CASE("ungauged solutions form exactly two relabeling orbits", "[solver]") {
  const auto solutions = search_assignments(canonical_constraints());
  CHECK(solutions.size() == 240);

  std::set<std::array<PitchClass, 12>> found;
  for (const auto& x : solutions) {
    found.insert(x.tones());
    CHECK(neighboring_number(catalog("chromatic"), x) == 12);
    CHECK(neighboring_number(catalog("W1"), x) == 6);
    CHECK(neighboring_number(catalog("W2"), x) == 0);
  }
  CHECK(found.size() == 240);

  const auto orbit = orbit_of(type1());
  const auto mirror = orbit_of(inverted_type1());
  CHECK(orbit.size() == 120);
  CHECK(mirror.size() == 120);
  CHECK(orbit.count(inverted_type1().tones()) == 0);
  std::set<std::array<PitchClass, 12>> both = orbit;
  both.insert(mirror.begin(), mirror.end());
  REQUIRE(both.size() == 240);
  CHECK(found == both);

  CHECK(std::is_sorted(solutions.begin(), solutions.end(),
                       [](const MusicalIcosahedron& a, const MusicalIcosahedron& b) {
                         return a.tones() < b.tones();
                       }));
}

TEST_CASE("canonicalize keeps one representative per orbit", "[solver]") {
  const auto reps = search_assignments(canonical_constraints(), {}, true);
  REQUIRE(reps.size() == 2);
  const auto orbit = orbit_of(type1());
  const auto mirror = orbit_of(inverted_type1());
  const bool first_is_canonical = orbit.count(reps.front().tones()) == 1;
  const auto& canonical_rep = first_is_canonical ? reps.front() : reps.back();
  const auto& mirror_rep = first_is_canonical ? reps.back() : reps.front();
  CHECK(canonical_rep.tones() == *orbit.begin());
  CHECK(mirror_rep.tones() == *mirror.begin());
}

TEST_CASE("fifth-chain constraints find the shifted assignment", "[solver]") {
  const std::vector<AssignmentConstraint> constraints = {{catalog("pythagorean"), 12},
                                                         {catalog("W1"), 6}};
  const auto solutions =
      search_assignments(constraints, {pin("h0", "C"), pin("h1", "D")});
  REQUIRE_FALSE(solutions.empty());

  bool found = false;
  for (const auto& x : solutions) {
    CHECK(neighboring_number(catalog("pythagorean"), x) == 12);
    CHECK(neighboring_number(catalog("W1"), x) == 6);
    if (x == named_type("type1'")) found = true;
  }
  CHECK(found);
}

TEST_CASE("solver agrees with brute force under a full hexagon gauge", "[solver]") {
  std::vector<GaugePlacement> gauge;
  const Scale& w1 = catalog("W1");
  for (int i = 0; i < 6; ++i)
    gauge.push_back({VertexId::hexagon(i), w1.tones()[static_cast<std::size_t>(i)]});

  const auto solutions = search_assignments(canonical_constraints(), gauge);

  std::set<std::array<PitchClass, 12>> brute;
  std::array<PitchClass, 6> star = {pitch_class("C#"), pitch_class("Eb"), pitch_class("F"),
                                    pitch_class("G"),  pitch_class("A"),  pitch_class("B")};
  std::sort(star.begin(), star.end());
  do {
    std::array<PitchClass, 12> tones{};
    for (int i = 0; i < 6; ++i) {
      tones[static_cast<std::size_t>(VertexId::hexagon(i).id())] =
          w1.tones()[static_cast<std::size_t>(i)];
      tones[static_cast<std::size_t>(VertexId::star(i).id())] = star[static_cast<std::size_t>(i)];
    }
    const MusicalIcosahedron candidate(tones);
    if (neighboring_number(catalog("chromatic"), candidate) == 12 &&
        neighboring_number(catalog("W1"), candidate) == 6 &&
        neighboring_number(catalog("W2"), candidate) == 0)
      brute.insert(tones);
  } while (std::next_permutation(star.begin(), star.end()));

  std::set<std::array<PitchClass, 12>> found;
  for (const auto& x : solutions) found.insert(x.tones());
  CHECK(found == brute);
  CHECK(found.count(type1().tones()) == 1);
}

TEST_CASE("requirements below the maximum also solve exactly", "[solver]") {
  // Demand one broken chromatic adjacency under a rigid gauge.
  std::vector<GaugePlacement> gauge;
  const Scale& w1 = catalog("W1");
  for (int i = 0; i < 6; ++i)
    gauge.push_back({VertexId::hexagon(i), w1.tones()[static_cast<std::size_t>(i)]});

  const std::vector<AssignmentConstraint> constraints = {{catalog("chromatic"), 10},
                                                         {catalog("W1"), 6}};
  const auto solutions = search_assignments(constraints, gauge);
  for (const auto& x : solutions) {
    CHECK(neighboring_number(catalog("chromatic"), x) == 10);
    CHECK(neighboring_number(catalog("W1"), x) == 6);
  }

  std::set<std::array<PitchClass, 12>> brute;
  std::array<PitchClass, 6> star = {pitch_class("C#"), pitch_class("Eb"), pitch_class("F"),
                                    pitch_class("G"),  pitch_class("A"),  pitch_class("B")};
  std::sort(star.begin(), star.end());
  do {
    std::array<PitchClass, 12> tones{};
    for (int i = 0; i < 6; ++i) {
      tones[static_cast<std::size_t>(VertexId::hexagon(i).id())] =
          w1.tones()[static_cast<std::size_t>(i)];
      tones[static_cast<std::size_t>(VertexId::star(i).id())] = star[static_cast<std::size_t>(i)];
    }
    const MusicalIcosahedron candidate(tones);
    if (neighboring_number(catalog("chromatic"), candidate) == 10 &&
        neighboring_number(catalog("W1"), candidate) == 6)
      brute.insert(tones);
  } while (std::next_permutation(star.begin(), star.end()));

  std::set<std::array<PitchClass, 12>> found;
  for (const auto& x : solutions) found.insert(x.tones());
  CHECK(found == brute);
}
