#include "starfree/classify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "starfree/commuting_graph.hpp"

namespace starfree {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kConfirmed: return "CONFIRMED";
    case Verdict::kMissing: return "MISSING";
    case Verdict::kExtra: return "EXTRA";
  }
  return "?";
}

std::vector<std::string> ClassificationReport::verified_names() const {
  std::vector<std::string> names;
  names.reserve(verified_groups.size());
  for (const auto& g : verified_groups) names.push_back(g.name);
  return names;
}

bool has_published_list(int k) { return k >= 2 && k <= 5; }

const std::vector<PublishedEntry>& published_list(int k) {
  // The order-12 entry printed as a semidirect product of C4 by C3 can only
  // mean the dicyclic group of order 12 (no non-trivial action of C3 on C4
  // exists), and the two identically printed order-16 names are mapped to
  // the two distinct catalog entries, split by center structure.
  static const std::vector<PublishedEntry> k2 = {
      {"S3", "S3"}, {"D8", "D8"}, {"Q8", "Q8"}};
  static const std::vector<PublishedEntry> k3 = {
      {"S3", "S3"}, {"A4", "A4"}, {"D8", "D8"}, {"Q8", "Q8"}};
  static const std::vector<PublishedEntry> k45 = {
      {"S3", "S3"},
      {"D8", "D8"},
      {"Q8", "Q8"},
      {"D10", "D10"},
      {"A4", "A4"},
      {"D12", "D12"},
      {"C4:C3", "Dic3"},
      {"(C4xC2):C2 (i)", "C4xC2_rtimes_C2_a"},
      {"C4:C4", "C4_rtimes_C4"},
      {"C8:C2", "C8_rtimes_C2"},
      {"D8:C2", "D8xC2"},
      {"Q8:C2", "Q8xC2"},
      {"(C4xC2):C2 (ii)", "C4xC2_rtimes_C2_b"},
      {"GA(1,5)", "GA(1,5)"},
      {"SL(2,3)", "SL(2,3)"},
      {"A5", "A5"}};
  if (k == 2) return k2;
  if (k == 3) return k3;
  if (k == 4 || k == 5) return k45;
  throw Error("no published classification list for k = " + std::to_string(k));
}

ClassificationReport strong_k_star_free_groups(const Catalog& catalog, int k) {
  if (k < 1) throw InvalidSizesError("star parameter must be positive");

  ClassificationReport report;
  report.k = k;

  const CandidateSet candidates = enumerate_candidates(k);
  report.candidate_orders = candidates.candidate_orders();

  // Center orders admissible per candidate order, for the pre-filter.
  std::map<long long, std::set<int>> centers_by_order;
  for (const auto& tuple : candidates.tuples) {
    for (const auto& solution : tuple.solutions) {
      centers_by_order[solution.order].insert(tuple.center);
    }
  }

  for (long long order : report.candidate_orders) {
    if (!catalog.supports_order(order)) {
      report.unverifiable_orders.push_back(order);
      continue;
    }
    const auto& admissible_centers = centers_by_order.at(order);
    for (const auto& g : catalog.all_groups_of_order(static_cast<int>(order))) {
      if (g.is_abelian()) continue;
      const int z = static_cast<int>(g.center().size());
      if (!admissible_centers.count(z)) continue;
      if (!is_strong_k_star_free(g, k)) continue;
      report.verified_groups.push_back(
          {g.label(), g.order(), g.centralizer_profile(), strong_star_number(g)});
    }
  }

  std::sort(report.verified_groups.begin(), report.verified_groups.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.order, a.name) < std::tie(b.order, b.name);
            });
  return report;
}

ClassificationReport verify_against_published(const Catalog& catalog, int k) {
  const auto& expected = published_list(k);  // throws for unsupported k

  ClassificationReport report = strong_k_star_free_groups(catalog, k);
  report.has_published_list = true;

  std::set<std::string> computed;
  for (const auto& g : report.verified_groups) computed.insert(g.name);

  std::set<std::string> expected_names;
  bool missing = false;
  for (const auto& entry : expected) {
    expected_names.insert(entry.catalog_name);
    const bool found = computed.count(entry.catalog_name) > 0;
    if (!found) missing = true;
    report.comparison.push_back({entry.published_name, entry.catalog_name,
                                 found ? Verdict::kConfirmed : Verdict::kMissing});
  }

  bool extra = false;
  for (const auto& name : computed) {
    if (!expected_names.count(name)) {
      extra = true;
      report.comparison.push_back({"-", name, Verdict::kExtra});
    }
  }

  report.pass = !missing && !extra;
  return report;
}

int dihedral_star_number(int n) {
  if (n < 3) throw Error("dihedral star number needs n >= 3");
  return n % 2 == 1 ? n - 1 : n - 2;
}

int dihedral_star_number_computed(int n) {
  const int closed = dihedral_star_number(n);
  const int computed = strong_star_number(dihedral_group(n));
  if (closed != computed) {
    throw std::logic_error("dihedral closed form disagrees with computation at n = " +
                           std::to_string(n));
  }
  return computed;
}

ClassEquationSolution dihedral_class_equation(int n) {
  if (n < 3) throw Error("dihedral class equation needs n >= 3");
  ClassEquationSolution solution;
  solution.order = 2 * n;
  if (n % 2 == 1) {
    // Rotations have centralizer of order n, the n reflections form one
    // class with centralizer of order 2.
    solution.center = 1;
    solution.sizes = {2, n};
    solution.multiplicities = {1, (n - 1) / 2};
  } else if (n == 4) {
    solution.center = 2;
    solution.sizes = {4};
    solution.multiplicities = {3};
  } else {
    // Reflections split into two classes of n/2, each with centralizer of
    // order 4 containing the half-turn.
    solution.center = 2;
    solution.sizes = {4, n};
    solution.multiplicities = {2, (n - 2) / 2};
  }
  return solution;
}

ClassEquationSolution dihedral_class_equation_computed(int n) {
  const CentralizerProfile profile = dihedral_group(n).centralizer_profile();
  ClassEquationSolution solution;
  solution.order = profile.group_order;
  solution.center = profile.center_order;
  solution.sizes = profile.sizes();
  solution.multiplicities = profile.multiplicities();
  if (!(solution == dihedral_class_equation(n))) {
    throw std::logic_error("dihedral class equation closed form disagrees at n = " +
                           std::to_string(n));
  }
  return solution;
}

std::optional<std::string> strict_inclusion_witness(const Catalog& catalog, int k) {
  if (k < 1) throw InvalidSizesError("star parameter must be positive");
  const int target = k + 1;

  struct Hit {
    int order;
    std::string name;
  };
  std::vector<Hit> hits;
  for (int order : catalog.supported_orders()) {
    for (const auto& g : catalog.all_groups_of_order(order)) {
      if (g.is_abelian()) continue;
      if (strong_star_number(g) == target) hits.push_back({order, g.label()});
    }
  }
  if (!hits.empty()) {
    auto best = std::min_element(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
      return std::tie(a.order, a.name) < std::tie(b.order, b.name);
    });
    return best->name;
  }

  // Dihedral fallback: S(D_{2n}) = n-2 for even n, so even targets are
  // always realized by D_{2(k+3)}.
  if (target % 2 == 0) {
    const int n = target + 2;
    if (2 * n <= FiniteGroup::kDefaultOrderBound) {
      const FiniteGroup d = dihedral_group(n);
      if (strong_star_number(d) == target) return d.label();
    }
  }
  return std::nullopt;
}

nlohmann::json classification_report_to_json(const ClassificationReport& report) {
  nlohmann::json verified = nlohmann::json::array();
  for (const auto& g : report.verified_groups) {
    verified.push_back({{"name", g.name},
                        {"order", g.order},
                        {"center_order", g.profile.center_order},
                        {"sizes", g.profile.sizes()},
                        {"multiplicities", g.profile.multiplicities()},
                        {"strong_star_number", g.strong_star_number}});
  }
  nlohmann::json doc{{"k", report.k},
                     {"candidate_orders", report.candidate_orders},
                     {"verified_groups", verified},
                     {"unverifiable_orders", report.unverifiable_orders}};
  if (report.has_published_list) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.comparison) {
      rows.push_back({{"published_name", row.published_name},
                      {"catalog_name", row.catalog_name},
                      {"verdict", to_string(row.verdict)}});
    }
    doc["published_comparison"] = rows;
    doc["pass"] = report.pass;
  }
  return doc;
}

std::string render_report_text(const ClassificationReport& report) {
  std::ostringstream os;
  os << "strong " << report.k << "-star-free classification\n";

  os << "candidate orders:";
  for (long long n : report.candidate_orders) os << " " << n;
  os << "\n";

  os << "verified groups (" << report.verified_groups.size() << "):\n";
  for (const auto& g : report.verified_groups) {
    os << "  order " << g.order << "  S=" << g.strong_star_number << "  z="
       << g.profile.center_order << "  sizes {";
    const auto sizes = g.profile.sizes();
    for (size_t i = 0; i < sizes.size(); ++i) os << (i ? "," : "") << sizes[i];
    os << "}  " << g.name << "\n";
  }

  if (!report.unverifiable_orders.empty()) {
    os << "UNVERIFIED-CANDIDATE orders (outside catalog scope):";
    for (long long n : report.unverifiable_orders) os << " " << n;
    os << "\n";
  }

  if (report.has_published_list) {
    os << "published list comparison:\n";
    for (const auto& row : report.comparison) {
      os << "  " << to_string(row.verdict) << "  " << row.published_name << " -> "
         << row.catalog_name << "\n";
    }
    os << "verdict: " << (report.pass ? "PASS" : "FAIL");
    if (report.pass && !report.unverifiable_orders.empty()) {
      os << " (with unverified candidate orders)";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace starfree
