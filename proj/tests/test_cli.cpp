#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "icosa/io.hpp"

using namespace icosa;

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string out;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / "icosa_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

RunResult run(const std::string& args) {
  static int counter = 0;
  const fs::path out = work_dir() / ("stdout_" + std::to_string(counter++) + ".txt");
  const std::string cmd =
      std::string("\"") + ICOSA_CLI_PATH + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return {WEXITSTATUS(status), slurp(out)};
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s)
    if (c == '\n') ++n;
  return n;
}

fs::path write_file(const std::string& name, const std::string& content) {
  const fs::path path = work_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("verify subcommand", "[cli]") {
  const RunResult all = run("verify all");
  CHECK(all.exit_code == 0);
  CHECK(all.out.find("[PASS]") != std::string::npos);
  CHECK(all.out.find("[FAIL]") == std::string::npos);

  const RunResult intra = run("verify intra");
  CHECK(intra.exit_code == 0);

  const RunResult raga = run("--json verify raga");
  CHECK(raga.exit_code == 0);
  const json parsed = json::parse(raga.out);
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 2);
  for (const auto& report : parsed) CHECK(report["passed"] == true);
}

TEST_CASE("verify rejects corrupted assignments", "[cli]") {
  json good = assignment_to_json(type1());
  std::swap(good["tones"]["h0"], good["tones"]["h1"]);
  const fs::path corrupted = write_file("corrupted.json", good.dump());
  const RunResult bad = run("verify inter --assignment \"" + corrupted.string() + "\"");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("[FAIL]") != std::string::npos);

  const fs::path malformed = write_file("malformed.json", "{broken");
  CHECK(run("verify inter --assignment \"" + malformed.string() + "\"").exit_code == 2);
}

TEST_CASE("enumerate subcommand", "[cli]") {
  const RunResult csv = run("enumerate inter --csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("key,class,size,n_chain,n_hex,n_star\n", 0) == 0);
  CHECK(csv.out.find("k=3,\"{0,2,4}\",2,9,6,6\n") != std::string::npos);
  CHECK(line_count(csv.out) == 14);

  const RunResult table = run("enumerate intra --table");
  CHECK(table.exit_code == 0);
  CHECK(table.out.find("level (12,0)  kinds 1") != std::string::npos);
  CHECK(table.out.find("kinds 20") != std::string::npos);

  const RunResult family = run("--json enumerate inter");
  CHECK(family.exit_code == 0);
  const json parsed = json::parse(family.out);
  CHECK(parsed.size() == 64);

  const RunResult intra_family_listing = run("--json enumerate intra");
  CHECK(intra_family_listing.exit_code == 0);
  CHECK(json::parse(intra_family_listing.out).size() == 720);
}

TEST_CASE("enumerate accepts an assignment file as base", "[cli]") {
  const fs::path base = work_dir() / "rb.json";
  save_assignment(named_type("RB"), base.string());
  const RunResult csv = run("enumerate inter --base \"" + base.string() + "\" --csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("k=0,{},1,12,6,0\n") != std::string::npos);

  CHECK(run("enumerate inter --base no_such_type").exit_code == 2);
}

TEST_CASE("extend subcommand", "[cli]") {
  const RunResult all = run("--json extend");
  CHECK(all.exit_code == 0);
  const json parsed = json::parse(all.out);
  REQUIRE(parsed.size() == 72);
  for (const auto& rec : parsed) {
    CHECK(rec.contains("raga_index"));
    CHECK_FALSE(rec["witnesses"].empty());
  }

  const RunResult ring = run("extend --scale W1 --types RA");
  CHECK(ring.exit_code == 0);
  CHECK(ring.out.find("64 scale sets") != std::string::npos);

  CHECK(run("extend --scale no_such_scale").exit_code == 2);
}

TEST_CASE("solve subcommand", "[cli]") {
  write_file("constraints.json", R"([
    {"scale": "chromatic", "required": 12},
    {"scale": "W1", "required": 6},
    {"scale": "W2", "required": 0}
  ])");
  write_file("gauge.json", R"({"h0": "C", "h1": "D", "s0": "C#"})");

  const RunResult solved =
      run("--json solve --constraints \"" + (work_dir() / "constraints.json").string() +
          "\" --gauge \"" + (work_dir() / "gauge.json").string() + "\"");
  CHECK(solved.exit_code == 0);
  const json parsed = json::parse(solved.out);
  REQUIRE(parsed.size() == 2);
  bool has_type1 = false;
  for (const auto& rec : parsed)
    if (assignment_from_json(rec) == type1()) has_type1 = true;
  CHECK(has_type1);

  const RunResult canonical =
      run("--json solve --constraints \"" + (work_dir() / "constraints.json").string() +
          "\" --canonical");
  CHECK(canonical.exit_code == 0);
  CHECK(json::parse(canonical.out).size() == 2);

  CHECK(run("solve --constraints /nonexistent/c.json").exit_code == 2);
  CHECK(run("solve").exit_code == 2);
}

TEST_CASE("diagram subcommand", "[cli]") {
  const fs::path proj = work_dir() / "projection.svg";
  CHECK(run("diagram projection --out \"" + proj.string() + "\" --pairs").exit_code == 0);
  const std::string svg = slurp(proj);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<ellipse") != std::string::npos);

  const fs::path dodeca = work_dir() / "dodecagon.svg";
  CHECK(run("diagram dodecagon --base RB --scale chromatic_B --out \"" + dodeca.string() +
            "\"").exit_code == 0);
  CHECK(slurp(dodeca).rfind("<svg", 0) == 0);

  const fs::path circles = work_dir() / "circles.svg";
  const RunResult c = run("diagram circles --family B --mask 0,2 --out \"" +
                          circles.string() + "\"");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("circle count 15") != std::string::npos);
  CHECK(slurp(circles).find("#800080") != std::string::npos);

  CHECK(run("diagram circles --family E --out \"" + circles.string() + "\"").exit_code == 2);
  CHECK(run("diagram circles --family A --mask 7 --out \"" + circles.string() + "\"")
            .exit_code == 2);

  const fs::path gallery = work_dir() / "gallery";
  const RunResult g = run("diagram raga-gallery --out \"" + gallery.string() + "\"");
  CHECK(g.exit_code == 0);
  CHECK(g.out.find("72 files") != std::string::npos);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(gallery)) {
    CHECK(entry.path().extension() == ".svg");
    ++files;
  }
  CHECK(files == 72);
}

TEST_CASE("catalog subcommand", "[cli]") {
  const RunResult mela = run("catalog melakarta");
  CHECK(mela.exit_code == 0);
  CHECK(line_count(mela.out) == 72);
  CHECK(mela.out.find("29\tDheerasankarabaranam\tC,D,E,F,G,A,B") != std::string::npos);

  const RunResult scales = run("catalog scales");
  CHECK(scales.exit_code == 0);
  CHECK(line_count(scales.out) == 13);
  CHECK(scales.out.find("W1\tC,D,E,F#,G#,Bb") != std::string::npos);

  const RunResult graph = run("--json catalog graph");
  CHECK(graph.exit_code == 0);
  const json parsed = json::parse(graph.out);
  CHECK(parsed["edges"].size() == 30);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(run("").exit_code == 2);
  CHECK(run("enumerate").exit_code == 2);
  CHECK(run("enumerate sideways").exit_code == 2);
  CHECK(run("diagram projection").exit_code == 2);
  CHECK(run("catalog nope").exit_code == 2);
  CHECK(run("--frobnicate verify").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
  CHECK(run("verify --help").exit_code == 0);
}
