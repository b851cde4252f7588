#ifndef STARFREE_CLASSIFY_HPP
#define STARFREE_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "starfree/catalog.hpp"
#include "starfree/class_equation.hpp"
#include "starfree/group.hpp"

namespace starfree {

enum class Verdict { kConfirmed, kMissing, kExtra };

std::string to_string(Verdict verdict);

struct VerifiedGroup {
  std::string name;
  int order = 0;
  CentralizerProfile profile;
  int strong_star_number = 0;
};

struct ComparisonRow {
  std::string published_name;
  std::string catalog_name;
  Verdict verdict = Verdict::kConfirmed;
};

struct ClassificationReport {
  int k = 0;
  std::vector<long long> candidate_orders;
  std::vector<VerifiedGroup> verified_groups;     // sorted by (order, name)
  std::vector<long long> unverifiable_orders;     // candidate orders outside catalog scope
  bool has_published_list = false;
  std::vector<ComparisonRow> comparison;          // published entries + extras
  bool pass = false;                              // meaningful with a published list

  std::vector<std::string> verified_names() const;
};

// Known classification lists, with explicit per-name catalog mappings.
struct PublishedEntry {
  std::string published_name;
  std::string catalog_name;
};
const std::vector<PublishedEntry>& published_list(int k);  // k in 2..5
bool has_published_list(int k);

// Solver candidates -> catalog scan -> star checks. Candidate orders outside
// catalog scope are reported as unverifiable, never dropped.
ClassificationReport strong_k_star_free_groups(const Catalog& catalog, int k);

// Adds the published-list comparison; PASS iff nothing is missing and
// nothing extra within catalog scope.
ClassificationReport verify_against_published(const Catalog& catalog, int k);

// Closed form: n-1 for odd n, n-2 for even n.
int dihedral_star_number(int n);
// Recomputes via the constructed group and asserts the closed form.
int dihedral_star_number_computed(int n);

// Closed-form class equation of the dihedral group of order 2n:
// odd n: (2n, 1, {2, n}); even n >= 6: (2n, 2, {4, n}); n = 4: (8, 2, {4}).
ClassEquationSolution dihedral_class_equation(int n);
// From centralizer_profile of the constructed group.
ClassEquationSolution dihedral_class_equation_computed(int n);

// A group with strong star number exactly k+1, so that membership in the
// k-star-free family is strictly smaller than in the (k+1)-family. Scans the
// catalog, then falls back to the dihedral family when k+1 is even; nullopt
// when no witness is in scope.
std::optional<std::string> strict_inclusion_witness(const Catalog& catalog, int k);

nlohmann::json classification_report_to_json(const ClassificationReport& report);
std::string render_report_text(const ClassificationReport& report);

}  // namespace starfree

#endif  // STARFREE_CLASSIFY_HPP
