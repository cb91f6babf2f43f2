#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "icosa/assignment.hpp"
#include "icosa/extension.hpp"
#include "icosa/invariants.hpp"
#include "icosa/rational.hpp"
#include "icosa/tones.hpp"

namespace icosa {

// ---------------------------------------------------------------------------
// Shared drawing helpers
// ---------------------------------------------------------------------------

namespace svg {

// Fixed two-decimal formatting through integer math; keeps every byte of the
// output independent of locale and libm.
inline std::string num(double v) {
  long long scaled = static_cast<long long>(v * 100.0 + (v >= 0 ? 0.5 : -0.5));
  const bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s = std::to_string(scaled / 100);
  const long long frac = scaled % 100;
  s += ".";
  s += static_cast<char>('0' + frac / 10);
  s += static_cast<char>('0' + frac % 10);
  return neg && (scaled != 0) ? "-" + s : s;
}

struct Point {
  double x, y;
};

// sin/cos of 30*k degrees; clock positions measured clockwise from the top.
inline constexpr double kR3_2 = 0.8660254037844386;
inline constexpr std::array<double, 12> kSin30 = {0,     0.5,   kR3_2, 1,  kR3_2, 0.5,
                                                  0,     -0.5,  -kR3_2, -1, -kR3_2, -0.5};
inline constexpr std::array<double, 12> kCos30 = {1,     kR3_2, 0.5,   0,  -0.5,  -kR3_2,
                                                  -1,    -kR3_2, -0.5, 0,  0.5,   kR3_2};

inline Point clock_point(Point center, double radius, int step /* of 12 */) {
  const auto k = static_cast<std::size_t>(((step % 12) + 12) % 12);
  return {center.x + radius * kSin30[k], center.y - radius * kCos30[k]};
}

inline std::string line(Point a, Point b, const std::string& attrs) {
  return "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" +
         num(b.y) + "\" " + attrs + "/>\n";
}

inline std::string circle(Point c, double r, const std::string& attrs) {
  return "<circle cx=\"" + num(c.x) + "\" cy=\"" + num(c.y) + "\" r=\"" + num(r) + "\" " + attrs +
         "/>\n";
}

inline std::string text(Point p, const std::string& content, const std::string& attrs) {
  return "<text x=\"" + num(p.x) + "\" y=\"" + num(p.y) + "\" " + attrs + ">" + content +
         "</text>\n";
}

inline std::string document(int width, int height, const std::string& body) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\">\n" + body + "</svg>\n";
}

inline constexpr const char* kFont = "font-family=\"sans-serif\" text-anchor=\"middle\"";

}  // namespace svg

// Trace colors for the four relabeled assignments, in family order.
inline const std::array<std::pair<char, const char*>, 4>& family_colors() {
  static const std::array<std::pair<char, const char*>, 4> colors = {{
      {'A', "#87CEEB"},  // sky blue
      {'B', "#800080"},  // purple
      {'C', "#9ACD32"},  // yellow green
      {'D', "#FFA500"},  // orange
  }};
  return colors;
}

inline const char* family_color(char family) {
  for (auto [f, c] : family_colors())
    if (f == family) return c;
  throw std::invalid_argument(std::string("unknown family: ") + family);
}

// ---------------------------------------------------------------------------
// Planar projection
// ---------------------------------------------------------------------------

// The hexagon/hexagram layout with all 30 edges; pair slots can be marked
// with enclosing ellipses.
inline std::string projection_svg(const MusicalIcosahedron& x, bool highlight_pairs = false) {
  const svg::Point center{210, 210};
  const double scale = 150;
  auto at = [&](VertexId v) -> svg::Point {
    const auto p = IcosahedronGraph::projection(v);
    return {center.x + scale * p[0], center.y - scale * p[1]};
  };

  std::string body;
  for (auto [u, v] : canonical_graph().edges())
    body += svg::line(at(u), at(v), "stroke=\"#888888\" stroke-width=\"1\"");

  if (highlight_pairs) {
    for (int i = 0; i < 6; ++i) {
      const double mid = scale * (1.0 + 0.55) / 2.0;
      const double rx = scale * (1.0 - 0.55) / 2.0 + 16.0;
      const svg::Point c = svg::clock_point(center, mid, 2 * i);
      body += "<ellipse cx=\"0\" cy=\"0\" rx=\"" + svg::num(rx) +
              "\" ry=\"15.00\" fill=\"none\" stroke=\"#2E8B57\" stroke-width=\"1.5\" " +
              "transform=\"translate(" + svg::num(c.x) + "," + svg::num(c.y) + ") rotate(" +
              std::to_string(60 * i - 90) + ")\"/>\n";
    }
  }

  for (int id = 0; id < 12; ++id) {
    const VertexId v = VertexId::from_id(id);
    const svg::Point p = at(v);
    body += svg::circle(p, 4, "fill=\"#222222\"");
    const double label_r = v.kind() == VertexId::Kind::hexagon ? scale * 1.0 + 22 : scale * 0.55 - 24;
    const svg::Point lp = svg::clock_point(center, label_r, 2 * v.index());
    body += svg::text({lp.x, lp.y + 5}, std::string(x.tone_at(v).name()),
                      std::string(svg::kFont) + " font-size=\"16\"");
  }
  return svg::document(420, 420, body);
}

// ---------------------------------------------------------------------------
// Chord diagram on the natural dodecagon
// ---------------------------------------------------------------------------

// Twelve tones in chromatic order around a dodecagon; one chord per
// neighboring pair of the given scale on the given assignment.
inline std::string dodecagon_svg(const MusicalIcosahedron& x, const Scale& scale) {
  const svg::Point center{210, 210};
  const double radius = 160;
  auto at = [&](PitchClass t) { return svg::clock_point(center, radius, t.value()); };

  std::string body;
  for (int t = 0; t < 12; ++t)
    body += svg::line(at(PitchClass(t)), at(PitchClass(t + 1)),
                      "stroke=\"#DDDDDD\" stroke-width=\"1\"");
  for (auto [a, b] : scale.neighbor_pairs())
    if (x.graph().adjacent(x.vertex_of(a), x.vertex_of(b)))
      body += svg::line(at(a), at(b), "class=\"chord\" stroke=\"#1E6FB4\" stroke-width=\"1.5\"");
  for (int t = 0; t < 12; ++t) {
    body += svg::circle(at(PitchClass(t)), 3.5, "fill=\"#222222\"");
    const svg::Point lp = svg::clock_point(center, radius + 22, t);
    body += svg::text({lp.x, lp.y + 5}, std::string(PitchClass(t).name()),
                      std::string(svg::kFont) + " font-size=\"15\"");
  }
  return svg::document(420, 420, body);
}

// ---------------------------------------------------------------------------
// Circle-of-circles counting diagram
// ---------------------------------------------------------------------------

struct CircleDiagram {
  std::string svg;
  Rational circle_count;
  int colored_full = 0;
  int colored_half = 0;
  int colored_quarter = 0;
};

// Lays the family's chain scale around a ring: twelve full circles over the
// chain pairs, half arcs over the distance-2 pairs (the two induced rings),
// and the star ring's wrap pair split into two quarter arcs around the top.
// Colored elements mark pairs adjacent on the assignment; the weighted count
// of colored circles reproduces the family invariant.
inline CircleDiagram permutation_circle_svg(char family, const MusicalIcosahedron& x) {
  const MusicalIcosahedron base = named_type(std::string("R") + family);
  bool in_family = false;
  for (unsigned bits = 0; bits < 64 && !in_family; ++bits)
    if (apply_inter(base, InterMask(bits)) == x) in_family = true;
  if (!in_family)
    throw std::domain_error(std::string("assignment is not in the R") + family + " family");

  const Scale& chain = catalog(std::string("chromatic_") + family);
  const auto& tones = chain.tones();
  const char* color = family_color(family);
  const std::string colored_attr =
      std::string("fill=\"none\" stroke=\"") + color + "\" stroke-width=\"2.5\"";
  const std::string plain_attr = "fill=\"none\" stroke=\"#C8C8C8\" stroke-width=\"1.5\"";

  const svg::Point center{320, 320};
  const double radius = 210;
  auto pos = [&](int k) { return svg::clock_point(center, radius, k); };
  auto adjacent = [&](PitchClass a, PitchClass b) {
    return x.graph().adjacent(x.vertex_of(a), x.vertex_of(b));
  };

  CircleDiagram out;
  std::string body;

  for (int k = 0; k < 12; ++k) {
    const svg::Point a = pos(k), b = pos(k + 1);
    const svg::Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double r = radius * 0.2588190451025208;  // sin(15 deg): half chord length
    (void)dx;
    (void)dy;
    const bool on = adjacent(tones[static_cast<std::size_t>(k)],
                             tones[static_cast<std::size_t>((k + 1) % 12)]);
    if (on) ++out.colored_full;
    body += svg::circle(mid, r, (on ? colored_attr : plain_attr) + " class=\"full\"");
  }

  auto arc = [&](svg::Point a, svg::Point b, double r, int sweep, bool on,
                 const char* cls) {
    std::string d = "M " + svg::num(a.x) + " " + svg::num(a.y) + " A " + svg::num(r) + " " +
                    svg::num(r) + " 0 0 " + std::to_string(sweep) + " " + svg::num(b.x) + " " +
                    svg::num(b.y);
    body += "<path d=\"" + d + "\" " + (on ? colored_attr : plain_attr) + " class=\"" + cls +
            "\"/>\n";
  };

  for (int k = 0; k < 12; ++k) {
    const PitchClass ta = tones[static_cast<std::size_t>(k)];
    const PitchClass tb = tones[static_cast<std::size_t>((k + 2) % 12)];
    const bool on = adjacent(ta, tb);
    const svg::Point a = pos(k), b = pos(k + 2);
    const double half_chord = radius * 0.5;  // sin(30 deg)
    if (k == 11) {
      // The star ring's wrap pair; its arc would cross the chain start, so it
      // is drawn as two quarter circles meeting between the endpoints.
      const svg::Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
      const double cx = center.x - mid.x, cy = center.y - mid.y;
      const double len = radius * svg::kR3_2;  // |center - mid|
      const svg::Point apex{mid.x + half_chord * cx / len, mid.y + half_chord * cy / len};
      if (on) out.colored_quarter += 2;
      arc(a, apex, half_chord, 0, on, "quarter");
      arc(apex, b, half_chord, 0, on, "quarter");
    } else {
      if (on) ++out.colored_half;
      // Hexagon-ring pairs (even positions) bow outward, star-ring pairs inward.
      arc(a, b, half_chord, k % 2 == 0 ? 1 : 0, on, "half");
    }
  }

  for (int k = 0; k < 12; ++k) {
    body += svg::circle(pos(k), 3.5, "fill=\"#222222\"");
    const svg::Point lp = svg::clock_point(center, radius + 70, k);
    body += svg::text({lp.x, lp.y + 6}, std::string(tones[static_cast<std::size_t>(k)].name()),
                      std::string(svg::kFont) + " font-size=\"17\"");
  }

  out.circle_count = Rational(out.colored_full) + Rational(out.colored_half, 2) +
                     Rational(out.colored_quarter, 4);
  body += svg::text({center.x, 625}, "count " + out.circle_count.to_string(),
                    std::string(svg::kFont) + " font-size=\"16\"");
  out.svg = svg::document(640, 640, body);
  return out;
}

// ---------------------------------------------------------------------------
// Raga gallery
// ---------------------------------------------------------------------------

// One dodecagon per raga: scale tones emphasized, one heptagon trace per
// witnessing family (outermost RA, then RB, RC, RD), witness masks listed.
inline std::string raga_svg(const RagaWitnessRow& row) {
  const svg::Point center{210, 220};
  const double radius = 150;
  auto at = [&](PitchClass t, double r) { return svg::clock_point(center, r, t.value()); };

  std::string body;
  body += svg::text({210, 28}, std::to_string(row.index) + " " + row.name,
                    std::string(svg::kFont) + " font-size=\"18\"");
  for (int t = 0; t < 12; ++t)
    body += svg::line(at(PitchClass(t), radius), at(PitchClass(t + 1), radius),
                      "stroke=\"#DDDDDD\" stroke-width=\"1\"");

  std::vector<char> families;
  for (const auto& w : row.witnesses) {
    const char f = w.base_label.back();
    bool seen = false;
    for (char g : families) seen = seen || g == f;
    if (!seen) families.push_back(f);
  }
  for (std::size_t fi = 0; fi < families.size(); ++fi) {
    const double r = radius - 8 - 8 * static_cast<double>(fi);
    std::string points;
    for (PitchClass t : row.tones) {
      const svg::Point p = at(t, r);
      points += svg::num(p.x) + "," + svg::num(p.y) + " ";
    }
    body += std::string("<polygon points=\"") + points + "\" fill=\"none\" stroke=\"" +
            family_color(families[fi]) + "\" stroke-width=\"2\"/>\n";
  }

  for (int t = 0; t < 12; ++t) {
    const PitchClass pc(t);
    bool member = false;
    for (PitchClass m : row.tones) member = member || m == pc;
    body += svg::circle(at(pc, radius), member ? 5.0 : 3.0,
                        member ? "fill=\"#222222\"" : "fill=\"#AAAAAA\"");
    const svg::Point lp = at(pc, radius + 20);
    body += svg::text({lp.x, lp.y + 5}, std::string(pc.name()),
                      std::string(svg::kFont) + " font-size=\"14\"" +
                          (member ? " font-weight=\"bold\"" : ""));
  }

  double y = 415;
  for (const auto& w : row.witnesses) {
    body += svg::text({210, y},
                      w.base_label + " " + w.mask.to_string(),
                      std::string("font-family=\"sans-serif\" text-anchor=\"middle\" "
                                  "font-size=\"13\" fill=\"") +
                          family_color(w.base_label.back()) + "\"");
    y += 16;
  }
  const int height = 420 + 16 * static_cast<int>(row.witnesses.size()) + 10;
  return svg::document(420, height, body);
}

inline std::string raga_file_name(const RagaWitnessRow& row) {
  std::string name = row.name;
  for (char& c : name)
    if (c == ' ') c = '_';
  return "raga_" + std::to_string(row.index) + "_" + name + ".svg";
}

// Renders all 72 diagrams into the directory; returns the file names written.
inline std::vector<std::string> write_raga_gallery(const std::filesystem::path& outdir) {
  std::filesystem::create_directories(outdir);
  const MelakartaTheoremReport report = verify_melakarta();
  std::vector<std::string> names;
  for (const auto& row : report.ragas) {
    const std::string name = raga_file_name(row);
    std::ofstream out(outdir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (outdir / name).string());
    out << raga_svg(row);
    names.push_back(name);
  }
  return names;
}

}  // namespace icosa
