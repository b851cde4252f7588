#include "starfree/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace starfree {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw DataError("invalid JSON in " + path + ": " + e.what());
  }
  return doc;
}

FiniteGroup group_from_json(const json& doc) {
  if (!doc.is_object()) throw DataError("group document must be a JSON object");
  const std::string name = doc.value("name", std::string{});
  const bool has_generators = doc.contains("generators");
  const bool has_cayley = doc.contains("cayley");
  if (has_generators == has_cayley) {
    throw DataError("group document must contain exactly one of \"generators\"/\"cayley\"");
  }

  if (has_cayley) {
    std::vector<std::vector<int>> table;
    try {
      table = doc.at("cayley").get<std::vector<std::vector<int>>>();
    } catch (const json::exception& e) {
      throw DataError(std::string("malformed \"cayley\" table: ") + e.what());
    }
    return FiniteGroup::from_cayley_table(table, name);
  }

  if (!doc.contains("degree") || !doc.at("degree").is_number_integer()) {
    throw DataError("generator document requires an integer \"degree\"");
  }
  const int degree = doc.at("degree").get<int>();
  if (degree < 1) throw DataError("degree must be positive");

  std::vector<std::vector<std::vector<int>>> raw;
  try {
    raw = doc.at("generators").get<std::vector<std::vector<std::vector<int>>>>();
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed \"generators\": ") + e.what());
  }
  std::vector<Permutation> generators;
  generators.reserve(raw.size());
  for (const auto& cycles : raw) {
    generators.push_back(Permutation::from_cycles(degree, cycles));
  }
  return FiniteGroup::from_generators(generators, name);
}

FiniteGroup group_from_json_file(const std::string& path) {
  return group_from_json(load_json_file(path));
}

json profile_to_json(const CentralizerProfile& profile) {
  json entries = json::array();
  for (const auto& e : profile.entries) {
    entries.push_back(json::array({e.centralizer_size, e.class_count}));
  }
  return json{{"group_order", profile.group_order},
              {"center_order", profile.center_order},
              {"entries", entries}};
}

json star_report_to_json(const StarReport& report) {
  json hist = json::array();
  for (const auto& [degree, count] : report.degree_histogram) {
    hist.push_back(json::array({degree, count}));
  }
  json comps = json::array();
  for (const auto& [vertices, edges] : report.components) {
    comps.push_back(json::array({vertices, edges}));
  }
  return json{{"group", report.group_label},
              {"order", report.order},
              {"center_order", report.center_order},
              {"vertex_count", report.vertex_count},
              {"max_degree", report.max_degree},
              {"strong_star_number", report.strong_star_number},
              {"induced_star_number", report.induced_star_number},
              {"degree_histogram", hist},
              {"components", comps}};
}

json solution_to_json(const ClassEquationSolution& solution) {
  return json{{"order", solution.order},
              {"center", solution.center},
              {"sizes", solution.sizes},
              {"multiplicities", solution.multiplicities}};
}

json solutions_to_json(const std::vector<ClassEquationSolution>& solutions) {
  json out = json::array();
  for (const auto& s : solutions) out.push_back(solution_to_json(s));
  return out;
}

json candidate_set_to_json(const CandidateSet& set) {
  json tuples = json::array();
  for (const auto& tuple : set.tuples) {
    tuples.push_back(json{{"center", tuple.center},
                          {"sizes", tuple.sizes},
                          {"solutions", solutions_to_json(tuple.solutions)}});
  }
  return json{{"k", set.k}, {"tuples", tuples}};
}

uint64_t fnv1a64(std::string_view data) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string fnv1a64_hex(std::string_view data) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(data);
  return os.str();
}

}  // namespace starfree
