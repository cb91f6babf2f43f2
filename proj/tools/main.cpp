#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "icosa/diagrams.hpp"
#include "icosa/io.hpp"
#include "icosa/verify.hpp"

namespace {

icosa::MusicalIcosahedron resolve_base(const std::string& spec) {
  try {
    return icosa::named_type(spec);
  } catch (const icosa::UnsupportedTypeError&) {
    if (std::filesystem::exists(spec)) return icosa::load_assignment(spec);
    throw;
  }
}

icosa::InterMask parse_mask(const std::string& spec) {
  if (spec.empty()) return icosa::InterMask();
  unsigned bits = 0;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    const std::string item = spec.substr(pos, end - pos);
    if (item.size() != 1 || item[0] < '0' || item[0] > '5')
      throw std::invalid_argument("mask slots must be 0..5, got '" + item + "'");
    bits |= 1u << (item[0] - '0');
    pos = end + 1;
  }
  return icosa::InterMask(bits);
}

std::vector<std::string> split_list(const std::string& spec) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    if (end > pos) out.push_back(spec.substr(pos, end - pos));
    pos = end + 1;
    if (end == spec.size()) break;
  }
  return out;
}

void print_reports(const std::vector<icosa::CheckReport>& reports) {
  for (const auto& report : reports) {
    std::cout << (report.all_passed() ? "[PASS] " : "[FAIL] ") << report.title << "\n";
    for (const auto& check : report.checks) {
      std::cout << "  " << (check.passed ? "ok   " : "FAIL ") << check.name;
      if (!check.passed && !check.detail.empty()) std::cout << " (" << check.detail << ")";
      std::cout << "\n";
    }
    for (const auto& note : report.notes) std::cout << "  note: " << note << "\n";
  }
}

int run_verify(const std::string& what, const std::string& assignment_file, bool as_json) {
  const icosa::MusicalIcosahedron base =
      assignment_file.empty() ? icosa::type1() : icosa::load_assignment(assignment_file);

  std::vector<icosa::CheckReport> reports;
  if (what == "inter") {
    reports = {icosa::ground_truth_checks(base), icosa::inter_invariant_checks(base),
               icosa::inter_classification_checks(base)};
  } else if (what == "intra") {
    reports = {icosa::intra_classification_checks(base), icosa::spot_value_checks()};
  } else if (what == "raga") {
    reports = {icosa::relabeled_type_checks(), icosa::melakarta_coverage_checks()};
  } else {
    reports = icosa::verify_all(base);
  }

  bool passed = true;
  for (const auto& r : reports) passed = passed && r.all_passed();
  if (as_json)
    std::cout << icosa::check_reports_to_json(reports).dump(2) << "\n";
  else
    print_reports(reports);
  return passed ? 0 : 1;
}

int run_enumerate(const std::string& what, const std::string& base_spec, bool as_json,
                  bool as_table, bool as_csv) {
  const icosa::MusicalIcosahedron base = resolve_base(base_spec);
  if (what == "inter") {
    if (as_table || as_csv) {
      const icosa::InterFamilyTable table = icosa::classify_inter_family(base);
      if (as_csv)
        std::cout << table.to_csv();
      else if (as_json)
        std::cout << icosa::inter_table_to_json(table).dump(2) << "\n";
      else {
        for (const auto& row : table.rows)
          for (const auto& c : row.classes)
            std::cout << "k=" << row.swap_count << "  class " << c.canonical.to_string()
                      << "  size " << c.size() << "  N=(" << c.counts[0] << "," << c.counts[1]
                      << "," << c.counts[2] << ")\n";
        for (const auto& n : table.notices) std::cout << "note: " << n << "\n";
      }
      return 0;
    }
    const auto family = icosa::inter_family(base);
    if (as_json) {
      std::cout << icosa::inter_family_to_json(family).dump(2) << "\n";
    } else {
      const icosa::Scale chain = icosa::induced_chain_scale(base);
      const icosa::Scale hex = icosa::induced_hexagon_scale(base);
      const icosa::Scale star = icosa::induced_star_scale(base);
      for (const auto& m : family)
        std::cout << "mask " << m.mask.to_string() << (m.intermediate ? "  intermediate" : "  endpoint")
                  << "  N=(" << icosa::neighboring_number(chain, m.assignment) << ","
                  << icosa::neighboring_number(hex, m.assignment) << ","
                  << icosa::neighboring_number(star, m.assignment) << ")\n";
    }
    return 0;
  }

  if (as_table || as_csv) {
    const icosa::IntraFamilyTable table = icosa::classify_intra_family(base);
    if (as_csv)
      std::cout << table.to_csv();
    else if (as_json)
      std::cout << icosa::intra_table_to_json(table).dump(2) << "\n";
    else
      for (const auto& row : table.rows) {
        std::cout << "level (" << row.n_chain << "," << row.n_dual << ")  kinds "
                  << row.kind_count() << "  members " << row.member_total << " ";
        for (const auto& c : row.classes)
          std::cout << " " << icosa::signature_to_string(c.signature) << "x" << c.member_count;
        std::cout << "\n";
      }
    return 0;
  }
  const auto family = icosa::intra_family(base);
  if (as_json) {
    std::cout << icosa::intra_family_to_json(family).dump(2) << "\n";
  } else {
    for (const auto& m : family)
      std::cout << (m.signature ? icosa::signature_to_string(*m.signature)
                                : std::string("(undefined)"))
                << (m.intermediate ? "  intermediate" : "  endpoint") << "  star "
                << icosa::induced_star_scale(m.assignment).to_string() << "\n";
  }
  return 0;
}

int run_extend(const std::string& scale_name, const std::string& types, bool as_json) {
  const icosa::Scale& scale = icosa::catalog(scale_name);
  std::vector<icosa::MusicalIcosahedron> bases;
  for (const auto& t : split_list(types)) bases.push_back(resolve_base(t));
  if (bases.empty()) throw std::invalid_argument("extend: no base types given");
  const icosa::ExtensionResult result = icosa::extend_union(scale, bases);

  if (as_json) {
    std::cout << icosa::extension_to_json(result).dump(2) << "\n";
    return 0;
  }
  for (const auto& [key, entry] : result.entries()) {
    std::string tones;
    for (const icosa::PitchClass t : entry.tones) {
      if (!tones.empty()) tones += ",";
      tones += t.name();
    }
    std::cout << tones;
    if (entry.tones.size() == 7)
      if (const icosa::MelakartaEntry* e = icosa::melakarta_index(entry.tones))
        std::cout << "  [" << e->index << " " << e->name << "]";
    std::cout << "  via";
    for (const auto& w : entry.witnesses)
      std::cout << " " << w.base_label << w.mask.to_string();
    std::cout << "\n";
  }
  std::cout << result.size() << " scale sets\n";
  return 0;
}

int run_solve(const std::string& constraints_file, const std::string& gauge_file, bool canonical,
              bool as_json) {
  const auto constraints = icosa::load_constraints(constraints_file);
  std::vector<icosa::GaugePlacement> gauge;
  if (!gauge_file.empty()) gauge = icosa::load_gauge(gauge_file);
  const auto solutions = icosa::search_assignments(constraints, gauge, canonical);

  if (as_json) {
    std::cout << icosa::solutions_to_json(solutions).dump(2) << "\n";
    return 0;
  }
  for (const auto& x : solutions) {
    for (int id = 0; id < 12; ++id) {
      const icosa::VertexId v = icosa::VertexId::from_id(id);
      std::cout << (id ? " " : "") << v.name() << "=" << x.tone_at(v).name();
    }
    std::cout << "\n";
  }
  std::cout << solutions.size() << " solutions\n";
  return 0;
}

int run_diagram(const std::string& kind, const std::string& out, const std::string& base_spec,
                const std::string& mask_spec, const std::string& scale_name,
                const std::string& family, bool pairs) {
  if (kind == "raga-gallery") {
    const auto names = icosa::write_raga_gallery(out);
    std::cout << names.size() << " files in " << out << "\n";
    return 0;
  }
  if (kind == "circles") {
    if (family.size() != 1 || family[0] < 'A' || family[0] > 'D')
      throw std::invalid_argument("--family must be one of A,B,C,D");
    const icosa::MusicalIcosahedron base = icosa::named_type("R" + family);
    const icosa::MusicalIcosahedron member = icosa::apply_inter(base, parse_mask(mask_spec));
    const icosa::CircleDiagram d = icosa::permutation_circle_svg(family[0], member);
    icosa::save_text(out, d.svg);
    std::cout << out << "  circle count " << d.circle_count.to_string() << "\n";
    return 0;
  }
  const icosa::MusicalIcosahedron base = resolve_base(base_spec);
  const icosa::MusicalIcosahedron member = icosa::apply_inter(base, parse_mask(mask_spec));
  if (kind == "projection") {
    icosa::save_text(out, icosa::projection_svg(member, pairs));
  } else {  // dodecagon
    icosa::save_text(out, icosa::dodecagon_svg(member, icosa::catalog(scale_name)));
  }
  std::cout << out << "\n";
  return 0;
}

int run_catalog(const std::string& what, bool as_json) {
  if (what == "melakarta") {
    if (as_json) {
      std::cout << icosa::melakarta_to_json().dump(2) << "\n";
    } else {
      for (const auto& e : icosa::melakarta_catalog())
        std::cout << e.index << "\t" << e.name << "\t" << e.scale.to_string() << "\n";
    }
    return 0;
  }
  if (what == "graph") {
    std::cout << icosa::graph_to_json(icosa::canonical_graph()).dump(2) << "\n";
    return 0;
  }
  if (as_json) {
    icosa::json out = icosa::json::object();
    for (const auto& [key, scale] : icosa::scale_catalog()) out[key] = icosa::scale_to_json(scale);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& [key, scale] : icosa::scale_catalog())
      std::cout << key << "\t" << scale.to_string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorics of 12-tone assignments on the icosahedron"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output")->configurable(false);

  auto* verify = app.add_subcommand("verify", "run the built-in verification checks");
  std::string verify_what = "all";
  std::string verify_assignment;
  verify->add_option("what", verify_what, "check group")
      ->check(CLI::IsMember({"all", "inter", "intra", "raga"}));
  verify->add_option("--assignment", verify_assignment, "assignment JSON to verify instead of the built-in one");

  auto* enumerate = app.add_subcommand("enumerate", "list a swap or rearrangement family");
  std::string enum_what;
  std::string enum_base = "type1";
  bool enum_table = false, enum_csv = false;
  enumerate->add_option("what", enum_what, "family kind")
      ->required()
      ->check(CLI::IsMember({"inter", "intra"}));
  enumerate->add_option("--base", enum_base, "named type or assignment JSON file");
  enumerate->add_flag("--table", enum_table, "print the classification table");
  enumerate->add_flag("--csv", enum_csv, "print the classification table as CSV");

  auto* extend = app.add_subcommand("extend", "extend a scale across base assignments");
  std::string extend_scale = "c_major";
  std::string extend_types = "RA,RB,RC,RD";
  extend->add_option("--scale", extend_scale, "catalog scale to color");
  extend->add_option("--types", extend_types, "comma list of base types");

  auto* solve = app.add_subcommand("solve", "search assignments matching neighboring counts");
  std::string solve_constraints, solve_gauge;
  bool solve_canonical = false;
  solve->add_option("--constraints", solve_constraints, "constraints JSON file")->required();
  solve->add_option("--gauge", solve_gauge, "vertex-to-tone pin file");
  solve->add_flag("--canonical", solve_canonical, "one representative per symmetry orbit");

  auto* diagram = app.add_subcommand("diagram", "render an SVG diagram");
  std::string diagram_kind, diagram_out, diagram_base = "type1", diagram_mask,
                            diagram_scale = "chromatic", diagram_family = "A";
  bool diagram_pairs = false;
  diagram->add_option("kind", diagram_kind, "diagram kind")
      ->required()
      ->check(CLI::IsMember({"projection", "dodecagon", "circles", "raga-gallery"}));
  diagram->add_option("--out", diagram_out, "output file (directory for raga-gallery)")
      ->required();
  diagram->add_option("--base", diagram_base, "named type or assignment JSON file");
  diagram->add_option("--mask", diagram_mask, "comma list of swap slots applied to the base");
  diagram->add_option("--scale", diagram_scale, "chord scale for the dodecagon");
  diagram->add_option("--family", diagram_family, "family for the circles diagram (A..D)");
  diagram->add_flag("--pairs", diagram_pairs, "mark coupled pairs on the projection");

  auto* cat = app.add_subcommand("catalog", "print bundled data");
  std::string catalog_what;
  cat->add_option("what", catalog_what, "data set")
      ->required()
      ->check(CLI::IsMember({"melakarta", "scales", "graph"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) return run_verify(verify_what, verify_assignment, as_json);
    if (app.got_subcommand(enumerate))
      return run_enumerate(enum_what, enum_base, as_json, enum_table, enum_csv);
    if (app.got_subcommand(extend)) return run_extend(extend_scale, extend_types, as_json);
    if (app.got_subcommand(solve))
      return run_solve(solve_constraints, solve_gauge, solve_canonical, as_json);
    if (app.got_subcommand(diagram))
      return run_diagram(diagram_kind, diagram_out, diagram_base, diagram_mask, diagram_scale,
                         diagram_family, diagram_pairs);
    if (app.got_subcommand(cat)) return run_catalog(catalog_what, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
