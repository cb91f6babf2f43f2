#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "icosa/assignment.hpp"
#include "icosa/tones.hpp"

namespace icosa {

// ---------------------------------------------------------------------------
// Permutation extension of a scale
// ---------------------------------------------------------------------------

struct ExtensionWitness {
  std::string base_label;
  InterMask mask;  // minimal: acts only on slots with exactly one colored endpoint

  friend bool operator==(const ExtensionWitness&, const ExtensionWitness&) = default;
};

struct ExtensionEntry {
  std::vector<PitchClass> tones;  // ascending
  std::vector<ExtensionWitness> witnesses;
};

class ExtensionResult {
 public:
  // Entries keyed by tone-set bitmask, so iteration is deterministic.
  const std::map<unsigned, ExtensionEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  bool contains(const std::vector<PitchClass>& tones) const {
    return entries_.count(set_key(tones)) != 0;
  }
  const ExtensionEntry* find(const std::vector<PitchClass>& tones) const {
    auto it = entries_.find(set_key(tones));
    return it == entries_.end() ? nullptr : &it->second;
  }

  void add(const std::vector<PitchClass>& tones, ExtensionWitness witness) {
    auto& entry = entries_[set_key(tones)];
    if (entry.tones.empty()) {
      entry.tones = tones;
      std::sort(entry.tones.begin(), entry.tones.end());
    }
    if (std::find(entry.witnesses.begin(), entry.witnesses.end(), witness) ==
        entry.witnesses.end())
      entry.witnesses.push_back(std::move(witness));
  }

  void merge(const ExtensionResult& other) {
    for (const auto& [key, entry] : other.entries_)
      for (const auto& w : entry.witnesses) add(entry.tones, w);
  }

  static unsigned set_key(const std::vector<PitchClass>& tones) {
    unsigned key = 0;
    for (PitchClass t : tones) key |= 1u << t.value();
    return key;
  }

 private:
  std::map<unsigned, ExtensionEntry> entries_;
};

// Colors the scale's vertices on the assignment and collects the tone sets
// read there under all 64 pair swaps. A slot whose endpoints are both
// colored, or neither, cannot change the set; witness masks have those
// bits cleared, which also makes them unique per produced set.
inline ExtensionResult extend(const Scale& scale, const MusicalIcosahedron& x) {
  std::vector<VertexId> colored;
  colored.reserve(scale.size());
  for (PitchClass t : scale.tones()) colored.push_back(x.vertex_of(t));

  unsigned branching = 0;
  for (int slot = 0; slot < 6; ++slot) {
    auto [h, s] = IcosahedronGraph::pair_slot(slot);
    const bool ch = std::find(colored.begin(), colored.end(), h) != colored.end();
    const bool cs = std::find(colored.begin(), colored.end(), s) != colored.end();
    if (ch != cs) branching |= 1u << slot;
  }

  ExtensionResult result;
  for (unsigned bits = 0; bits < 64; ++bits) {
    const MusicalIcosahedron image = apply_inter(x, InterMask(bits));
    std::vector<PitchClass> tones;
    tones.reserve(colored.size());
    for (VertexId v : colored) tones.push_back(image.tone_at(v));
    std::sort(tones.begin(), tones.end());
    result.add(tones, {x.label(), InterMask(bits & branching)});
  }
  return result;
}

inline ExtensionResult extend_union(const Scale& scale,
                                    const std::vector<MusicalIcosahedron>& bases) {
  ExtensionResult out;
  for (const auto& x : bases) out.merge(extend(scale, x));
  return out;
}

// ---------------------------------------------------------------------------
// Melakarta coverage
// ---------------------------------------------------------------------------

struct RagaWitnessRow {
  int index;
  std::string name;
  std::vector<PitchClass> tones;
  std::vector<ExtensionWitness> witnesses;
};

struct MelakartaTheoremReport {
  std::map<std::string, std::size_t> per_base_count;  // expected: 32 each
  std::vector<int> missing;                           // catalog indices never produced
  std::vector<std::vector<PitchClass>> unexpected;    // produced, not in the catalog
  bool witnesses_roundtrip = false;
  bool structural_ok = false;
  std::vector<RagaWitnessRow> ragas;

  bool sets_match() const { return missing.empty() && unexpected.empty(); }
  bool passed() const {
    if (!sets_match() || !witnesses_roundtrip || !structural_ok) return false;
    for (const auto& [label, n] : per_base_count)
      if (n != 32) return false;
    return per_base_count.size() == 4;
  }
};

// Every produced 7-tone set must keep the anchor tones C and G, pick one
// fourth degree from {F, F#}, and take two tones from each tetrachord band.
inline bool melakarta_shaped(const std::vector<PitchClass>& tones) {
  if (tones.size() != 7) return false;
  const unsigned key = ExtensionResult::set_key(tones);
  auto bit = [&](int v) { return (key >> v) & 1u; };
  auto popcount_range = [&](int lo, int hi) {
    int n = 0;
    for (int v = lo; v <= hi; ++v) n += static_cast<int>(bit(v));
    return n;
  };
  return bit(0) && bit(7) && bit(5) + bit(6) == 1 && popcount_range(1, 4) == 2 &&
         popcount_range(8, 11) == 2;
}

// Extends the major scale over the four relabeled assignments and checks the
// produced family against the bundled 72-scale catalog.
inline MelakartaTheoremReport verify_melakarta() {
  const Scale& major = catalog("c_major");
  const std::vector<std::string> labels = {"RA", "RB", "RC", "RD"};

  MelakartaTheoremReport report;
  ExtensionResult all;
  for (const auto& label : labels) {
    const ExtensionResult one = extend(major, named_type(label));
    report.per_base_count[label] = one.size();
    all.merge(one);
  }

  std::map<unsigned, const MelakartaEntry*> catalog_by_set;
  for (const auto& e : melakarta_catalog())
    catalog_by_set.emplace(ExtensionResult::set_key(e.scale.tones()), &e);

  for (const auto& [key, entry] : all.entries())
    if (!catalog_by_set.count(key)) report.unexpected.push_back(entry.tones);
  for (const auto& [key, e] : catalog_by_set)
    if (!all.entries().count(key)) report.missing.push_back(e->index);

  report.structural_ok = true;
  report.witnesses_roundtrip = true;
  for (const auto& [key, entry] : all.entries()) {
    if (!melakarta_shaped(entry.tones)) report.structural_ok = false;
    for (const auto& w : entry.witnesses) {
      const MusicalIcosahedron base = named_type(w.base_label);
      const MusicalIcosahedron image = apply_inter(base, w.mask);
      std::vector<PitchClass> read;
      for (PitchClass t : major.tones()) read.push_back(image.tone_at(base.vertex_of(t)));
      std::sort(read.begin(), read.end());
      if (read != entry.tones) report.witnesses_roundtrip = false;
    }
  }

  for (const auto& e : melakarta_catalog()) {
    const ExtensionEntry* found = all.find(e.scale.tones());
    RagaWitnessRow row{e.index, e.name, e.scale.tones(), {}};
    if (found) row.witnesses = found->witnesses;
    report.ragas.push_back(std::move(row));
  }
  return report;
}

}  // namespace icosa
