// Command-line surface for the star-free commuting graph toolkit.
//
// Exit codes: 0 success (including PASS-with-warnings), 1 classification
// mismatch against the published lists, 2 invalid arguments or input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "starfree/catalog.hpp"
#include "starfree/class_equation.hpp"
#include "starfree/classify.hpp"
#include "starfree/commuting_graph.hpp"
#include "starfree/group.hpp"
#include "starfree/json_io.hpp"

namespace {

using starfree::Catalog;
using starfree::FiniteGroup;

void write_output(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw starfree::DataError("cannot write to " + output_path);
  out << text;
}

// Group source: a catalog name or "file:<path>" pointing at a group
// input document.
FiniteGroup resolve_group(const std::string& source, const Catalog& catalog) {
  if (source.rfind("file:", 0) == 0) {
    return starfree::group_from_json_file(source.substr(5));
  }
  return catalog.build(source);
}

std::vector<int> parse_sizes(const std::string& csv) {
  std::vector<int> sizes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw starfree::InvalidSizesError("malformed size list: '" + csv + "'");
    }
    if (pos != item.size() || value < 1) {
      throw starfree::InvalidSizesError("malformed size list: '" + csv + "'");
    }
    sizes.push_back(value);
  }
  if (sizes.empty()) throw starfree::InvalidSizesError("empty size list");
  return sizes;
}

int run_analyze(const std::string& source, const std::string& format,
                const std::string& output, bool stretch) {
  const Catalog catalog = Catalog::load_default(stretch);
  const FiniteGroup g = resolve_group(source, catalog);
  const starfree::StarReport report = starfree::star_report(g);
  const starfree::CentralizerProfile profile = g.centralizer_profile();

  if (format == "json") {
    nlohmann::json doc = starfree::star_report_to_json(report);
    doc["profile"] = starfree::profile_to_json(profile);
    write_output(doc.dump(2) + "\n", output);
    return 0;
  }

  std::ostringstream os;
  os << "group: " << g.label() << "\n"
     << "order: " << report.order << "\n"
     << "center order: " << report.center_order << "\n"
     << "profile:";
  for (const auto& e : profile.entries) {
    os << " (" << e.centralizer_size << ", " << e.class_count << ")";
  }
  os << "\n"
     << "vertices: " << report.vertex_count << "\n"
     << "max degree: " << report.max_degree << "\n"
     << "strong star number: " << report.strong_star_number << "\n"
     << "induced star number: " << report.induced_star_number << "\n"
     << "components (vertices, edges):";
  for (const auto& [v, e] : report.components) os << " (" << v << ", " << e << ")";
  os << "\n";
  write_output(os.str(), output);
  return 0;
}

int run_classify(int k, bool stretch, const std::string& format, const std::string& output) {
  const Catalog catalog = Catalog::load_default(stretch);
  const starfree::ClassificationReport report =
      starfree::has_published_list(k) ? starfree::verify_against_published(catalog, k)
                                      : starfree::strong_k_star_free_groups(catalog, k);
  if (format == "json") {
    write_output(starfree::classification_report_to_json(report).dump(2) + "\n", output);
  } else {
    write_output(starfree::render_report_text(report), output);
  }
  return report.has_published_list && !report.pass ? 1 : 0;
}

int run_solve(const std::string& sizes_csv, int center, const std::string& format,
              const std::string& output) {
  const auto sizes = parse_sizes(sizes_csv);
  const auto solutions = starfree::solve_class_equation(sizes, center);
  if (format == "json") {
    write_output(starfree::solutions_to_json(solutions).dump(2) + "\n", output);
    return 0;
  }
  std::ostringstream os;
  if (solutions.empty()) os << "no solutions\n";
  for (const auto& s : solutions) {
    os << "n=" << s.order << " z=" << s.center << " m=(";
    for (size_t i = 0; i < s.multiplicities.size(); ++i) {
      os << (i ? "," : "") << s.multiplicities[i];
    }
    os << ")\n";
  }
  write_output(os.str(), output);
  return 0;
}

int run_enumerate(int k, const std::string& format, const std::string& output) {
  const starfree::CandidateSet set = starfree::enumerate_candidates(k);
  if (format == "json") {
    write_output(starfree::candidate_set_to_json(set).dump(2) + "\n", output);
    return 0;
  }
  std::ostringstream os;
  os << "k=" << set.k << " tuples=" << set.tuples.size() << "\n";
  for (const auto& tuple : set.tuples) {
    os << "z=" << tuple.center << " sizes {";
    for (size_t i = 0; i < tuple.sizes.size(); ++i) os << (i ? "," : "") << tuple.sizes[i];
    os << "}:";
    for (const auto& s : tuple.solutions) {
      os << " n=" << s.order << " m=(";
      for (size_t i = 0; i < s.multiplicities.size(); ++i) {
        os << (i ? "," : "") << s.multiplicities[i];
      }
      os << ")";
    }
    os << "\n";
  }
  os << "candidate orders:";
  for (long long n : set.candidate_orders()) os << " " << n;
  os << "\n";
  write_output(os.str(), output);
  return 0;
}

int run_dihedral(int n, bool verify, const std::string& output) {
  std::ostringstream os;
  const int closed = starfree::dihedral_star_number(n);
  os << "S(D" << 2 * n << ") = " << closed << "\n";
  const auto eq = starfree::dihedral_class_equation(n);
  os << "class equation: order=" << eq.order << " z=" << eq.center << " sizes {";
  for (size_t i = 0; i < eq.sizes.size(); ++i) os << (i ? "," : "") << eq.sizes[i];
  os << "} m=(";
  for (size_t i = 0; i < eq.multiplicities.size(); ++i) {
    os << (i ? "," : "") << eq.multiplicities[i];
  }
  os << ")\n";
  if (verify) {
    os << "computed: " << starfree::dihedral_star_number_computed(n) << "\n";
    starfree::dihedral_class_equation_computed(n);
    os << "verification: OK\n";
  }
  write_output(os.str(), output);
  return 0;
}

int run_export(const std::string& source, const std::string& output, bool stretch) {
  const Catalog catalog = Catalog::load_default(stretch);
  const FiniteGroup g = resolve_group(source, catalog);
  write_output(starfree::CommutingGraph(g).to_dot(), output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"star-free commuting graph toolkit"};
  app.require_subcommand(1);

  std::string group_source, format = "text", output, sizes_csv;
  int k = 0, center = 1, n = 0;
  bool stretch = false, verify = false;

  auto* analyze = app.add_subcommand("analyze", "centralizer profile and star report");
  analyze->add_option("--group", group_source, "catalog name or file:<path>")->required();
  analyze->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--output", output);
  analyze->add_flag("--stretch", stretch, "include orders 25..32 in the catalog");

  auto* classify = app.add_subcommand("classify", "classify strong k-star-free groups");
  classify->add_option("--k", k, "star parameter (2..6)")->required();
  classify->add_flag("--stretch", stretch);
  classify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  classify->add_option("--output", output);

  auto* solve = app.add_subcommand("solve", "solve the class equation");
  solve->add_option("--sizes", sizes_csv, "comma-separated centralizer sizes")->required();
  solve->add_option("--center", center, "center order (default 1)");
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--output", output);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate class-equation candidates");
  enumerate->add_option("--k", k)->required();
  enumerate->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  enumerate->add_option("--output", output);

  auto* dihedral = app.add_subcommand("dihedral", "dihedral star numbers");
  dihedral->add_option("--n", n, "D_{2n} parameter, n >= 3")->required();
  dihedral->add_flag("--verify", verify, "recompute from the constructed group");
  dihedral->add_option("--output", output);

  auto* export_cmd = app.add_subcommand("export", "DOT export of the commuting graph");
  export_cmd->add_option("--group", group_source)->required();
  export_cmd->add_option("--format", format)->check(CLI::IsMember({"dot"}));
  export_cmd->add_option("--output", output);
  export_cmd->add_flag("--stretch", stretch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(analyze)) return run_analyze(group_source, format, output, stretch);
    if (app.got_subcommand(classify)) {
      if (k < 2 || k > 6) {
        std::cerr << "error: classify requires 2 <= k <= 6\n";
        return 2;
      }
      return run_classify(k, stretch, format, output);
    }
    if (app.got_subcommand(solve)) return run_solve(sizes_csv, center, format, output);
    if (app.got_subcommand(enumerate)) {
      if (k < 1 || k > 12) {
        std::cerr << "error: enumerate requires 1 <= k <= 12\n";
        return 2;
      }
      return run_enumerate(k, format, output);
    }
    if (app.got_subcommand(dihedral)) {
      if (n < 3) {
        std::cerr << "error: dihedral requires n >= 3\n";
        return 2;
      }
      return run_dihedral(n, verify, output);
    }
    if (app.got_subcommand(export_cmd)) return run_export(group_source, output, stretch);
  } catch (const starfree::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
