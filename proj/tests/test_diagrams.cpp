#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include "icosa/diagrams.hpp"

using namespace icosa;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = haystack.find(needle); pos != std::string::npos;
       pos = haystack.find(needle, pos + needle.size()))
    ++n;
  return n;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("projection rendering", "[diagrams]") {
  const std::string svg = projection_svg(type1());
  CHECK(svg == projection_svg(type1()));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(count_of(svg, "<line") == 30);
  CHECK(count_of(svg, "<circle") == 12);
  CHECK(count_of(svg, "<text") == 12);
  CHECK(count_of(svg, "<ellipse") == 0);
  for (const char* name : {">C<", ">C#<", ">F#<", ">Bb<"})
    CHECK(svg.find(name) != std::string::npos);

  const std::string pairs = projection_svg(type1(), true);
  CHECK(count_of(pairs, "<ellipse") == 6);
  CHECK(pairs.find("#2E8B57") != std::string::npos);
  CHECK(svg.find("#2E8B57") == std::string::npos);
}

TEST_CASE("dodecagon rendering counts adjacencies as chords", "[diagrams]") {
  const std::string chromatic = dodecagon_svg(type1(), catalog("chromatic"));
  CHECK(count_of(chromatic, "class=\"chord\"") == 12);

  const std::string after_swap =
      dodecagon_svg(apply_inter(type1(), InterMask::of({0})), catalog("chromatic"));
  CHECK(count_of(after_swap, "class=\"chord\"") == 11);

  CHECK(count_of(dodecagon_svg(named_type("type1'"), catalog("chromatic")), "class=\"chord\"") ==
        0);
  CHECK(count_of(dodecagon_svg(named_type("type1'"), catalog("pythagorean")),
                 "class=\"chord\"") == 12);
  CHECK(count_of(dodecagon_svg(type1(), catalog("W1")), "class=\"chord\"") == 6);

  CHECK(dodecagon_svg(type1(), catalog("chromatic")) ==
        dodecagon_svg(type1(), catalog("chromatic")));
}

TEST_CASE("counting circles for family members", "[diagrams]") {
  const CircleDiagram base = permutation_circle_svg('A', named_type("RA"));
  CHECK(base.circle_count == Rational(15));
  CHECK(base.colored_full == 12);
  CHECK(base.colored_half == 6);
  CHECK(base.colored_quarter == 0);
  CHECK(base.svg.find("count 15") != std::string::npos);
  CHECK(count_of(base.svg, "class=\"full\"") == 12);
  CHECK(count_of(base.svg, "class=\"half\"") == 11);
  CHECK(count_of(base.svg, "class=\"quarter\"") == 2);
  CHECK(base.svg.find("#87CEEB") != std::string::npos);

  // Swapping slot 0 moves G next to B: the wrap pair turns on as quarters.
  const CircleDiagram swapped =
      permutation_circle_svg('A', apply_inter(named_type("RA"), InterMask::of({0})));
  CHECK(swapped.colored_quarter == 2);
  CHECK(swapped.circle_count == Rational(15));

  CHECK(base.svg == permutation_circle_svg('A', named_type("RA")).svg);
}

TEST_CASE("counting circles conserve 15 across every family", "[diagrams]") {
  for (char family : {'A', 'B', 'C', 'D'}) {
    const MusicalIcosahedron base = named_type(std::string("R") + family);
    for (unsigned bits = 0; bits < 64; ++bits) {
      const CircleDiagram d = permutation_circle_svg(family, apply_inter(base, InterMask(bits)));
      CHECK(d.circle_count == Rational(15));
      CHECK(2 * d.colored_full + d.colored_half + d.colored_quarter / 2 == 30);
    }
  }
}

TEST_CASE("assignments outside the family are rejected", "[diagrams]") {
  CHECK_THROWS_AS(permutation_circle_svg('A', type1()), std::domain_error);
  CHECK_THROWS_AS(permutation_circle_svg('B', named_type("RA")), std::domain_error);
  CHECK_THROWS_AS(permutation_circle_svg('E', named_type("RA")), std::invalid_argument);
}

TEST_CASE("family colors", "[diagrams]") {
  CHECK(std::string(family_color('A')) == "#87CEEB");
  CHECK(std::string(family_color('B')) == "#800080");
  CHECK(std::string(family_color('C')) == "#9ACD32");
  CHECK(std::string(family_color('D')) == "#FFA500");
  CHECK(family_colors().size() == 4);
  CHECK_THROWS_AS(family_color('x'), std::invalid_argument);
}

TEST_CASE("raga diagrams", "[diagrams]") {
  const MelakartaTheoremReport report = verify_melakarta();
  const RagaWitnessRow& kanakangi = report.ragas.front();

  const std::string svg = raga_svg(kanakangi);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("1 Kanakangi") != std::string::npos);
  CHECK(count_of(svg, "<polygon") >= 1);
  CHECK(svg == raga_svg(kanakangi));

  CHECK(raga_file_name(kanakangi) == "raga_1_Kanakangi.svg");
  CHECK(raga_file_name(report.ragas[67]) == "raga_68_Jyoti_swarupini.svg");
}

TEST_CASE("raga gallery is written to disk", "[diagrams]") {
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "icosa_gallery_test";
  std::filesystem::remove_all(dir);

  const auto names = write_raga_gallery(dir);
  REQUIRE(names.size() == 72);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == 72);
  CHECK(names.front() == "raga_1_Kanakangi.svg");

  const MelakartaTheoremReport report = verify_melakarta();
  for (std::size_t i = 0; i < 72; i += 17)
    CHECK(slurp(dir / names[i]) == raga_svg(report.ragas[i]));

  std::filesystem::remove_all(dir);
}

TEST_CASE("rendering matches the checked-in golden files", "[diagrams]") {
  const std::filesystem::path golden = std::filesystem::path(ICOSA_SOURCE_DIR) / "tests/golden";
  CHECK(projection_svg(type1()) == slurp(golden / "projection_type1.svg"));
  CHECK(projection_svg(type1(), true) == slurp(golden / "projection_type1_pairs.svg"));
  CHECK(dodecagon_svg(type1(), catalog("chromatic")) == slurp(golden / "dodecagon_type1.svg"));
  CHECK(permutation_circle_svg('A', named_type("RA")).svg == slurp(golden / "circles_RA.svg"));
  CHECK(raga_svg(verify_melakarta().ragas.front()) == slurp(golden / "raga_1_Kanakangi.svg"));
}
