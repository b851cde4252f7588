#ifndef STARFREE_JSON_IO_HPP
#define STARFREE_JSON_IO_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "starfree/class_equation.hpp"
#include "starfree/commuting_graph.hpp"
#include "starfree/group.hpp"

namespace starfree {

nlohmann::json load_json_file(const std::string& path);

// Group input document: {"name", "degree", "generators"} with generators as
// lists of cycles of 0-based points, or {"name", "cayley"} with a full
// multiplication table. Exactly one of "generators"/"cayley" is allowed.
FiniteGroup group_from_json(const nlohmann::json& doc);
FiniteGroup group_from_json_file(const std::string& path);

nlohmann::json profile_to_json(const CentralizerProfile& profile);
nlohmann::json star_report_to_json(const StarReport& report);
nlohmann::json solution_to_json(const ClassEquationSolution& solution);
nlohmann::json solutions_to_json(const std::vector<ClassEquationSolution>& solutions);
nlohmann::json candidate_set_to_json(const CandidateSet& set);

uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

}  // namespace starfree

#endif  // STARFREE_JSON_IO_HPP
