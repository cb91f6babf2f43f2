#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "icosa/assignment.hpp"
#include "icosa/invariants.hpp"

namespace icosa {

// ---------------------------------------------------------------------------
// Shift signatures
// ---------------------------------------------------------------------------

// Sorted multiset of whole-tone shift amounts (1..5), one entry per moved
// star tone: ((incoming - outgoing) / 2) mod 6. Identity is empty.
using ShiftSignature = std::vector<int>;

inline std::string signature_to_string(const ShiftSignature& sig) {
  std::string s = "(";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(sig[i]);
  }
  return s + ")";
}

inline ShiftSignature intra_signature(const IntraPermutation& p) {
  ShiftSignature sig;
  for (PitchClass b : p.moved_tones()) {
    const int delta = (p(b).value() - b.value() + 12) % 12;
    if (delta % 2 != 0)
      throw std::domain_error("intra_signature: tone " + std::string(b.name()) +
                              " moves by an odd interval");
    sig.push_back(delta / 2);
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

// ---------------------------------------------------------------------------
// Families
// ---------------------------------------------------------------------------

struct InterFamilyMember {
  MusicalIcosahedron assignment;
  InterMask mask;
  bool intermediate;  // neither identity nor the full swap
};

// All 64 pair-swap images of the base, in mask order.
inline std::vector<InterFamilyMember> inter_family(const MusicalIcosahedron& base) {
  std::vector<InterFamilyMember> out;
  out.reserve(64);
  for (unsigned bits = 0; bits < 64; ++bits) {
    const InterMask mask(bits);
    out.push_back({apply_inter(base, mask), mask, bits != 0 && bits != 63});
  }
  return out;
}

struct IntraFamilyMember {
  MusicalIcosahedron assignment;
  IntraPermutation perm;
  // Absent when some tone moves by an odd interval (never for bases whose
  // star tones share a whole-tone class).
  std::optional<ShiftSignature> signature;
  bool intermediate;  // neither identity nor the uniform tritone shift
};

// All 720 star rearrangements of the base, lexicographic by the resulting
// tone tuple at (s0..s5).
inline std::vector<IntraFamilyMember> intra_family(const MusicalIcosahedron& base) {
  std::array<PitchClass, 6> arr;
  for (int i = 0; i < 6; ++i) arr[static_cast<std::size_t>(i)] = base.tone_at(VertexId::star(i));
  std::sort(arr.begin(), arr.end());

  static const ShiftSignature kTritone = {3, 3, 3, 3, 3, 3};
  std::vector<IntraFamilyMember> out;
  out.reserve(720);
  do {
    IntraPermutation p = IntraPermutation::star_arrangement(base, arr);
    std::optional<ShiftSignature> sig;
    try {
      sig = intra_signature(p);
    } catch (const std::domain_error&) {
    }
    const bool endpoint = p.is_identity() || (sig && *sig == kTritone);
    out.push_back({apply_intra(base, p), p, std::move(sig), !endpoint});
  } while (std::next_permutation(arr.begin(), arr.end()));
  return out;
}

// ---------------------------------------------------------------------------
// Classification tables
// ---------------------------------------------------------------------------

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace detail

struct InterClassEntry {
  InterMask canonical;
  std::vector<InterMask> members;
  std::array<int, 3> counts;  // chain, hexagon ring, star ring
  int size() const { return static_cast<int>(members.size()); }
};

struct InterKRow {
  int swap_count;
  std::vector<InterClassEntry> classes;
};

struct InterFamilyTable {
  std::vector<InterKRow> rows;          // k = 0..6
  std::vector<std::string> violations;  // identity or class-consistency failures
  std::vector<std::string> notices;     // documented data discrepancies

  int total_classes() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.classes.size());
    return n;
  }
  // Classes strictly between the identity and the full swap.
  int intermediate_classes() const { return total_classes() - 2; }

  std::string to_csv() const {
    std::string csv = "key,class,size,n_chain,n_hex,n_star\n";
    for (const auto& row : rows)
      for (const auto& c : row.classes)
        csv += "k=" + std::to_string(row.swap_count) + "," +
               detail::csv_field(c.canonical.to_string()) + "," + std::to_string(c.size()) + "," +
               std::to_string(c.counts[0]) + "," + std::to_string(c.counts[1]) + "," +
               std::to_string(c.counts[2]) + "\n";
    return csv;
  }
};

// Groups the 64 pair-swap images by dihedral slot symmetry and tabulates the
// neighboring numbers of the base's chain and both rings. Verifies the row
// identities 2(3-k) = N(hex) - N(star) and 2*N(chain) + N(hex) + N(star) = 30
// for every member, and that classes are invariant-consistent.
inline InterFamilyTable classify_inter_family(const MusicalIcosahedron& base) {
  const Scale chain = induced_chain_scale(base);
  const Scale hex = induced_hexagon_scale(base);
  const Scale star = induced_star_scale(base);

  InterFamilyTable table;
  std::map<unsigned, InterClassEntry> classes;  // by canonical mask bits
  for (unsigned bits = 0; bits < 64; ++bits) {
    const InterMask mask(bits);
    const MusicalIcosahedron x = apply_inter(base, mask);
    const std::array<int, 3> counts = {neighboring_number(chain, x), neighboring_number(hex, x),
                                       neighboring_number(star, x)};

    const int k = mask.count();
    if (counts[1] - counts[2] != 2 * (3 - k))
      table.violations.push_back("mask " + mask.to_string() + ": 2(3-k) = N(hex) - N(star) fails");
    if (2 * counts[0] + counts[1] + counts[2] != 30)
      table.violations.push_back("mask " + mask.to_string() +
                                 ": 2*N(chain) + N(hex) + N(star) = 30 fails");

    const MaskClass mc = mask_symmetry_class(mask);
    auto [it, inserted] = classes.try_emplace(mc.canonical.bits());
    if (inserted) {
      it->second.canonical = mc.canonical;
      it->second.counts = counts;
    } else if (it->second.counts != counts) {
      table.violations.push_back("class " + mc.canonical.to_string() +
                                 ": members disagree on neighboring numbers");
    }
    it->second.members.push_back(mask);
  }

  for (int k = 0; k <= 6; ++k) table.rows.push_back({k, {}});
  for (auto& [bits, entry] : classes) {
    if (entry.canonical.count() == 3 && entry.size() == 2 &&
        entry.counts == std::array<int, 3>{9, 6, 6}) {
      table.notices.push_back(
          "alternating three-swap class " + entry.canonical.to_string() +
          " evaluates to (9,6,6); the sometimes-quoted (10,6,6) would break "
          "2*N(chain) + N(hex) + N(star) = 30");
    }
    table.rows[static_cast<std::size_t>(entry.canonical.count())].classes.push_back(
        std::move(entry));
  }
  return table;
}

struct IntraClassEntry {
  ShiftSignature signature;
  int member_count;
};

struct IntraLevelRow {
  int n_chain;
  int n_dual;
  std::vector<IntraClassEntry> classes;
  int member_total;
  int kind_count() const { return static_cast<int>(classes.size()); }
};

struct IntraFamilyTable {
  std::vector<IntraLevelRow> rows;  // descending n_chain
  std::vector<std::string> violations;

  const IntraLevelRow* level(int n_chain) const {
    for (const auto& r : rows)
      if (r.n_chain == n_chain) return &r;
    return nullptr;
  }

  std::vector<int> kind_counts() const {  // indexed by n_chain 12..0
    std::vector<int> out;
    for (const auto& r : rows) out.push_back(r.kind_count());
    return out;
  }

  std::string to_csv() const {
    std::string csv = "key,class,size,n_chain,n_hex,n_dual\n";
    for (const auto& row : rows)
      for (const auto& c : row.classes)
        csv += detail::csv_field("(" + std::to_string(row.n_chain) + "," +
                                 std::to_string(row.n_dual) + ")") +
               "," + detail::csv_field(signature_to_string(c.signature)) + "," +
               std::to_string(c.member_count) + "," + std::to_string(row.n_chain) + ",6," +
               std::to_string(row.n_dual) + "\n";
    return csv;
  }
};

// Tabulates the 718 proper star rearrangements by the level
// (N(chain), N(dual chain)), where the dual chain is the chain of the
// tritone-shifted base; for the canonical assignment these are the chromatic
// and Pythagorean counts. The two endpoints are left out of the table: the
// identity and the uniform tritone shift sit alone at the extreme levels.
// Verifies N(hex) = 6 everywhere, N(chain) + N(dual) = 12, and that equal
// signatures never land on different levels.
inline IntraFamilyTable classify_intra_family(const MusicalIcosahedron& base) {
  const Scale chain = induced_chain_scale(base);
  const Scale hex = induced_hexagon_scale(base);
  const Scale dual =
      induced_chain_scale(apply_intra(base, IntraPermutation::star_shift(base, 3)));

  IntraFamilyTable table;
  std::map<std::pair<int, int>, std::map<ShiftSignature, int>> levels;
  std::map<ShiftSignature, std::pair<int, int>> level_of;
  for (const auto& member : intra_family(base)) {
    const int nc = neighboring_number(chain, member.assignment);
    const int nd = neighboring_number(dual, member.assignment);
    if (neighboring_number(hex, member.assignment) != 6)
      table.violations.push_back("hexagon ring count differs from 6");
    if (nc + nd != 12)
      table.violations.push_back("N(chain) + N(dual) = 12 fails at level (" + std::to_string(nc) +
                                 "," + std::to_string(nd) + ")");
    if (!member.signature) {
      table.violations.push_back("signature undefined for a family member");
      continue;
    }
    if (!member.intermediate) continue;
    const std::pair<int, int> level = {nc, nd};
    auto [it, inserted] = level_of.try_emplace(*member.signature, level);
    if (!inserted && it->second != level)
      table.violations.push_back("signature " + signature_to_string(*member.signature) +
                                 " appears on two levels");
    ++levels[level][*member.signature];
  }

  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    IntraLevelRow row{it->first.first, it->first.second, {}, 0};
    for (const auto& [sig, count] : it->second) {
      row.classes.push_back({sig, count});
      row.member_total += count;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace icosa
