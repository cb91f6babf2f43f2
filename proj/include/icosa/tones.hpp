#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "icosa/rational.hpp"

namespace icosa {

// ---------------------------------------------------------------------------
// Pitch classes
// ---------------------------------------------------------------------------

inline constexpr std::array<std::string_view, 12> kToneNames = {
    "C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B"};

// A pitch class modulo octave, C = 0 .. B = 11. Fixed spellings as above.
class PitchClass {
 public:
  constexpr PitchClass() = default;
  constexpr explicit PitchClass(int value) : value_(((value % 12) + 12) % 12) {}

  constexpr int value() const { return value_; }
  constexpr std::string_view name() const { return kToneNames[static_cast<std::size_t>(value_)]; }
  constexpr PitchClass shifted(int semitones) const { return PitchClass(value_ + semitones); }

  friend constexpr bool operator==(PitchClass, PitchClass) = default;
  friend constexpr auto operator<=>(PitchClass, PitchClass) = default;

 private:
  int value_ = 0;
};

inline PitchClass pitch_class(std::string_view name) {
  for (int i = 0; i < 12; ++i) {
    if (kToneNames[static_cast<std::size_t>(i)] == name) return PitchClass(i);
  }
  throw std::invalid_argument("unknown tone name: " + std::string(name));
}

inline std::string_view name_of(PitchClass pc) { return pc.name(); }

// ---------------------------------------------------------------------------
// Scales
// ---------------------------------------------------------------------------

// An ordered cyclic sequence of distinct pitch classes. Order matters: the
// neighbor pairs of a scale are its consecutive tones, wrapping around.
class Scale {
 public:
  explicit Scale(std::vector<PitchClass> tones) : tones_(std::move(tones)) {
    if (tones_.empty() || tones_.size() > 12)
      throw std::invalid_argument("Scale: length must be 1..12");
    std::array<bool, 12> seen{};
    for (PitchClass t : tones_) {
      if (seen[static_cast<std::size_t>(t.value())])
        throw std::invalid_argument("Scale: duplicate tone " + std::string(t.name()));
      seen[static_cast<std::size_t>(t.value())] = true;
    }
  }

  static Scale parse(std::string_view comma_list) {
    std::vector<PitchClass> tones;
    std::size_t pos = 0;
    while (pos <= comma_list.size()) {
      std::size_t end = comma_list.find(',', pos);
      if (end == std::string_view::npos) end = comma_list.size();
      tones.push_back(pitch_class(comma_list.substr(pos, end - pos)));
      pos = end + 1;
      if (end == comma_list.size()) break;
    }
    return Scale(std::move(tones));
  }

  const std::vector<PitchClass>& tones() const { return tones_; }
  std::size_t size() const { return tones_.size(); }

  bool contains(PitchClass pc) const {
    return std::find(tones_.begin(), tones_.end(), pc) != tones_.end();
  }

  // Cyclic neighbor pairs: n pairs for length n >= 2 (wrap included), none
  // for a single tone. A 2-tone scale yields its pair twice, once per
  // direction, which is what the counting conventions downstream expect.
  std::vector<std::pair<PitchClass, PitchClass>> neighbor_pairs() const {
    std::vector<std::pair<PitchClass, PitchClass>> out;
    const std::size_t n = tones_.size();
    if (n < 2) return out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(tones_[i], tones_[(i + 1) % n]);
    return out;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < tones_.size(); ++i) {
      if (i) s += ",";
      s += tones_[i].name();
    }
    return s;
  }

  friend bool operator==(const Scale&, const Scale&) = default;

 private:
  std::vector<PitchClass> tones_;
};

// Sorts a tone set ascending by value; C, when present, lands first.
inline Scale ascending_from_c(std::vector<PitchClass> tones) {
  std::sort(tones.begin(), tones.end());
  return Scale(std::move(tones));
}

// ---------------------------------------------------------------------------
// Zigzag scales
// ---------------------------------------------------------------------------

// Starting from C, alternately steps +up and -down semitones. The pair must
// visit all 12 pitch classes without repetition.
inline Scale zigzag_scale(int up, int down) {
  if (up < 1 || up > 11 || down < 1 || down > 11)
    throw std::invalid_argument("zigzag_scale: steps must be 1..11 semitones");
  std::vector<PitchClass> tones;
  tones.reserve(12);
  std::array<bool, 12> seen{};
  PitchClass t(0);
  for (int i = 0; i < 12; ++i) {
    if (seen[static_cast<std::size_t>(t.value())])
      throw std::invalid_argument("zigzag_scale(" + std::to_string(up) + "," +
                                  std::to_string(down) + "): revisits " + std::string(t.name()));
    seen[static_cast<std::size_t>(t.value())] = true;
    tones.push_back(t);
    t = t.shifted(i % 2 == 0 ? up : -down);
  }
  return Scale(std::move(tones));
}

// ---------------------------------------------------------------------------
// Named scale catalog
// ---------------------------------------------------------------------------

inline const std::map<std::string, Scale, std::less<>>& scale_catalog() {
  static const std::map<std::string, Scale, std::less<>> catalog = [] {
    std::map<std::string, Scale, std::less<>> m;
    m.emplace("chromatic", zigzag_scale(1, 11));
    m.emplace("W1", Scale::parse("C,D,E,F#,G#,Bb"));
    m.emplace("W2", Scale::parse("C#,Eb,F,G,A,B"));
    m.emplace("pythagorean", zigzag_scale(7, 5));
    m.emplace("c_major", Scale::parse("C,D,E,F,G,A,B"));
    m.emplace("chromatic_A", Scale::parse("C,G,D,C#,E,Eb,F#,F,G#,A,Bb,B"));
    m.emplace("chromatic_B", Scale::parse("C,G,D,Eb,E,C#,F#,F,G#,A,Bb,B"));
    m.emplace("chromatic_C", Scale::parse("C,G,D,C#,E,Eb,F#,F,G#,B,Bb,A"));
    m.emplace("chromatic_D", Scale::parse("C,G,D,Eb,E,C#,F#,F,G#,B,Bb,A"));
    m.emplace("wholetone_A2", Scale::parse("G,C#,Eb,F,A,B"));
    m.emplace("wholetone_B2", Scale::parse("G,Eb,C#,F,A,B"));
    m.emplace("wholetone_C2", Scale::parse("G,C#,Eb,F,B,A"));
    m.emplace("wholetone_D2", Scale::parse("G,Eb,C#,F,B,A"));
    return m;
  }();
  return catalog;
}

inline const Scale& catalog(std::string_view key) {
  const auto& m = scale_catalog();
  auto it = m.find(key);
  if (it == m.end()) throw std::invalid_argument("unknown catalog scale: " + std::string(key));
  return it->second;
}

// The zigzag family that replaces the ordinary chromatic reading: (+1,-11)
// plus the five deformations. Keys index the step pairs.
inline const std::vector<std::pair<int, int>>& zigzag_family_steps() {
  static const std::vector<std::pair<int, int>> steps = {
      {1, 11}, {3, 1}, {5, 3}, {7, 5}, {9, 7}, {11, 9}};
  return steps;
}

// ---------------------------------------------------------------------------
// Melakarta catalog
// ---------------------------------------------------------------------------

struct MelakartaEntry {
  int index;  // 1..72
  std::string name;
  Scale scale;  // 7 tones, ascending from C
};

namespace detail {

inline constexpr std::array<const char*, 72> kMelakartaNames = {
    "Kanakangi",       "Ratnangi",       "Ganamurti",      "Vanaspati",
    "Manavati",        "Tanarupi",       "Senavati",       "Hanumatodi",
    "Dhenuka",         "Natakapriya",    "Kokilapriya",    "Rupavati",
    "Gayakapriya",     "Vakulabharanam", "Mayamalavagowla", "Chakravakam",
    "Suryakantam",     "Hatakambari",    "Jhankaradhwani", "Natabhairavi",
    "Keeravani",       "Kharaharapriya", "Gourimanohari",  "Varunapriya",
    "Mararanjani",     "Charukesi",      "Sarasangi",      "Harikambhoji",
    "Dheerasankarabaranam", "Naganandini", "Yagapriya",     "Ragavardhini",
    "Gangeyabhushani", "Vagadheeswari",  "Shulini",        "Chalanata",
    "Salagam",         "Jalarnavam",     "Jhalavarali",    "Navaneetam",
    "Pavani",          "Raghupriya",     "Gavambhodi",     "Bhavapriya",
    "Shubhapantuvarali", "Shadvidamargini", "Suvarnangi",   "Divyamani",
    "Dhavalambari",    "Namanarayani",   "Kamavardhini",   "Ramapriya",
    "Gamanashrama",    "Vishwambari",    "Shamalangi",     "Shanmukhapriya",
    "Simhendramadhyamam", "Hemavati",    "Dharmavati",     "Neetimati",
    "Kantamani",       "Rishabhapriya",  "Latangi",        "Vachaspati",
    "Mechakalyani",    "Chitrambari",    "Sucharitra",     "Jyoti swarupini",
    "Dhatuvardani",    "Nasikabhushani", "Kosalam",        "Rasikapriya"};

// Lower tetrachord pairs (between C and the madhyama) and upper pairs
// (between G and the octave), in catalog order.
inline constexpr std::array<std::pair<int, int>, 6> kLowerPairs = {
    {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
inline constexpr std::array<std::pair<int, int>, 6> kUpperPairs = {
    {{8, 9}, {8, 10}, {8, 11}, {9, 10}, {9, 11}, {10, 11}}};

}  // namespace detail

inline const std::vector<MelakartaEntry>& melakarta_catalog() {
  static const std::vector<MelakartaEntry> entries = [] {
    std::vector<MelakartaEntry> out;
    out.reserve(72);
    for (int i = 1; i <= 72; ++i) {
      const auto lower = detail::kLowerPairs[static_cast<std::size_t>(((i - 1) % 36) / 6)];
      const auto upper = detail::kUpperPairs[static_cast<std::size_t>((i - 1) % 6)];
      const int madhyama = i <= 36 ? 5 : 6;  // F for 1..36, F# for 37..72
      std::vector<PitchClass> tones = {PitchClass(0),           PitchClass(lower.first),
                                       PitchClass(lower.second), PitchClass(madhyama),
                                       PitchClass(7),           PitchClass(upper.first),
                                       PitchClass(upper.second)};
      out.push_back({i, detail::kMelakartaNames[static_cast<std::size_t>(i - 1)],
                     Scale(std::move(tones))});
    }
    return out;
  }();
  return entries;
}

inline const MelakartaEntry& melakarta(int index) {
  if (index < 1 || index > 72)
    throw std::invalid_argument("melakarta index out of range: " + std::to_string(index));
  return melakarta_catalog()[static_cast<std::size_t>(index - 1)];
}

// Looks up a 7-tone set in the catalog. A well-formed set that is not a
// melakarta scale is a miss (null), anything else is an input error.
inline const MelakartaEntry* melakarta_index(const std::vector<PitchClass>& tones) {
  if (tones.size() != 7) throw std::invalid_argument("melakarta_index: need exactly 7 tones");
  unsigned key = 0;
  for (PitchClass t : tones) {
    const unsigned bit = 1u << t.value();
    if (key & bit)
      throw std::invalid_argument("melakarta_index: duplicate tone " + std::string(t.name()));
    key |= bit;
  }
  static const std::map<unsigned, const MelakartaEntry*> by_set = [] {
    std::map<unsigned, const MelakartaEntry*> m;
    for (const auto& e : melakarta_catalog()) {
      unsigned k = 0;
      for (PitchClass t : e.scale.tones()) k |= 1u << t.value();
      m.emplace(k, &e);
    }
    return m;
  }();
  auto it = by_set.find(key);
  return it == by_set.end() ? nullptr : it->second;
}

// ---------------------------------------------------------------------------
// Weighted scale lists
// ---------------------------------------------------------------------------

struct InvariantTerm {
  Scale scale;
  Rational weight;
};

// A weighted list of scales defining one conserved quantity.
class InvariantSpec {
 public:
  explicit InvariantSpec(std::vector<InvariantTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw std::invalid_argument("InvariantSpec: no terms");
    for (const auto& t : terms_)
      if (t.weight == Rational(0)) throw std::invalid_argument("InvariantSpec: zero weight");
  }

  const std::vector<InvariantTerm>& terms() const { return terms_; }

 private:
  std::vector<InvariantTerm> terms_;
};

}  // namespace icosa
