#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include <json.hpp>

#include "oracles.hpp"
#include "starfree/catalog.hpp"
#include "starfree/commuting_graph.hpp"
#include "starfree/json_io.hpp"
#include "test_groups_common.hpp"

using namespace starfree;

namespace {

const Catalog& catalog() {
  static const Catalog c = Catalog::load(STARFREE_TEST_CATALOG_DIR);
  return c;
}

std::vector<int> sorted_class_sizes(const FiniteGroup& g) {
  std::vector<int> out;
  for (const auto& cls : g.conjugacy_classes()) out.push_back(static_cast<int>(cls.size()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("build named groups") {
  CHECK(catalog().build("C1").order() == 1);

  const FiniteGroup& q8 = catalog().build("Q8");
  CHECK(q8.order() == 8);
  CHECK(q8.center().size() == 2);
  CHECK(sorted_class_sizes(q8) == std::vector<int>{1, 1, 2, 2, 2});

  const FiniteGroup& ga15 = catalog().build("GA(1,5)");
  CHECK(ga15.order() == 20);
  CHECK(ga15.center().size() == 1);

  CHECK_THROWS_AS(catalog().build("Monster"), UnknownNameError);
}

TEST_CASE("repeated builds return identical tables") {
  CHECK(catalog().build("SL(2,3)").raw_table() == catalog().build("SL(2,3)").raw_table());
}

TEST_CASE("per-order lists") {
  CHECK(catalog().all_groups_of_order(16).size() == 14);
  CHECK(catalog().all_groups_of_order(24).size() == 15);
  CHECK(catalog().all_groups_of_order(60).size() == 13);
  CHECK_THROWS_AS(catalog().all_groups_of_order(33), UnsupportedOrderError);
  CHECK_THROWS_AS(catalog().all_groups_of_order(100), UnsupportedOrderError);
}

TEST_CASE("order 18 has no group with center 3 and all centralizers 6") {
  const auto& groups = catalog().all_groups_of_order(18);
  CHECK(groups.size() == 5);
  int matching = 0;
  for (const auto& g : groups) {
    if (!g.is_abelian() && g.center().size() == 3 &&
        g.centralizer_profile().sizes() == std::vector<int>{6}) {
      ++matching;
    }
  }
  CHECK(matching == 0);
}

TEST_CASE("identify") {
  const FiniteGroup relabeled = catalog().build("D8").relabeled("mystery");
  const IdentifyResult hit = catalog().identify(relabeled);
  CHECK(hit.named());
  CHECK(hit.name == "D8");

  const FiniteGroup c2cubed = direct_product(
      direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2));
  const IdentifyResult abelian_hit = catalog().identify(c2cubed);
  CHECK(abelian_hit.named());
  CHECK(abelian_hit.name == "C2xC2xC2");

  // Orders outside the loaded tier are unsupported, not mis-identified.
  const IdentifyResult miss = catalog().identify(dihedral_group(13));
  CHECK(miss.status == IdentifyResult::Status::kUnsupportedOrder);
}

TEST_CASE("well-known isomorphisms land on the right catalog entries") {
  CHECK(catalog().identify(testgroups::s3()).name == "S3");
  CHECK(catalog().identify(testgroups::a4()).name == "A4");
  CHECK(catalog().identify(testgroups::sl23()).name == "SL(2,3)");
  CHECK(catalog().identify(testgroups::ga15()).name == "GA(1,5)");
  CHECK(catalog().identify(dicyclic_group(3)).name == "Dic3");
  CHECK(catalog().identify(dihedral_group(6)).name == "D12");
  CHECK(catalog().identify(direct_product(testgroups::s3(), cyclic_group(2))).name == "D12");
}

TEST_CASE("the six order-16 groups with center 4 and all centralizers 8") {
  std::set<std::string> six;
  for (const auto& g : catalog().all_groups_of_order(16)) {
    if (g.is_abelian()) continue;
    if (g.center().size() != 4) continue;
    if (g.centralizer_profile().sizes() == std::vector<int>{8}) six.insert(g.label());
  }
  CHECK(six == std::set<std::string>{"C4xC2_rtimes_C2_a", "C4xC2_rtimes_C2_b",
                                     "C4_rtimes_C4", "C8_rtimes_C2", "D8xC2", "Q8xC2"});
}

TEST_CASE("the _a/_b split is pinned by center structure") {
  const FiniteGroup& a = catalog().build("C4xC2_rtimes_C2_a");
  const FiniteGroup& b = catalog().build("C4xC2_rtimes_C2_b");
  CHECK_FALSE(are_isomorphic(a, b));
  auto max_central_order = [](const FiniteGroup& g) {
    int best = 0;
    for (int z : g.center()) best = std::max(best, g.element_order(z));
    return best;
  };
  CHECK(max_central_order(a) == 2);  // Klein center
  CHECK(max_central_order(b) == 4);  // cyclic center
}

TEST_CASE("dihedral recipes: center size follows the parity of n") {
  for (int n = 3; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(dihedral_group(n).center().size() == (n % 2 == 1 ? 1u : 2u));
  }
}

TEST_CASE("dicyclic recipes have a unique involution") {
  for (int m = 2; m <= 6; ++m) {
    const FiniteGroup g = dicyclic_group(m);
    int involutions = 0;
    for (int x = 0; x < g.order(); ++x) {
      if (g.element_order(x) == 2) ++involutions;
    }
    CHECK(involutions == 1);
  }
}

TEST_CASE("loaded entries expose generators and expected invariants") {
  bool checked = false;
  for (const auto& entry : catalog().entries()) {
    if (entry.name != "A5") continue;
    checked = true;
    CHECK(entry.order == 60);
    CHECK(entry.expected.center_order == 1);
    CHECK_FALSE(entry.expected.abelian);
    CHECK(entry.expected.class_sizes == std::vector<int>{1, 12, 12, 15, 20});
    const FiniteGroup rebuilt = FiniteGroup::from_generators(entry.generators, entry.name);
    CHECK(rebuilt.order() == 60);
  }
  CHECK(checked);
}

TEST_CASE("a tampered data file is rejected") {
  namespace fs = std::filesystem;
  const fs::path tmp = fs::temp_directory_path() / "starfree_tamper_test";
  fs::remove_all(tmp);
  fs::create_directories(tmp);
  fs::copy(STARFREE_TEST_CATALOG_DIR, tmp, fs::copy_options::recursive);

  const fs::path victim = tmp / "order_06.json";
  nlohmann::json doc = load_json_file(victim.string());
  doc["groups"][1]["name"] = "edited";
  {
    std::ofstream out(victim);
    out << doc.dump(1) << "\n";
  }
  CHECK_THROWS_AS(Catalog::load(tmp.string()), DataError);
  fs::remove_all(tmp);
}

TEST_CASE("stretch tier stays out of scope unless requested") {
  CHECK_FALSE(catalog().supports_order(27));
  CHECK_FALSE(catalog().stretch_loaded());

  namespace fs = std::filesystem;
  if (fs::exists(fs::path(STARFREE_TEST_CATALOG_DIR) / "order_27.json")) {
    const Catalog stretched = Catalog::load(STARFREE_TEST_CATALOG_DIR, true);
    CHECK(stretched.stretch_loaded());
    CHECK(stretched.supports_order(27));
    CHECK(stretched.all_groups_of_order(27).size() == 5);
    CHECK(stretched.all_groups_of_order(30).size() == 4);
  }
}

TEST_CASE("pruned induced-star search agrees with the naive one, catalog-wide") {
  for (int order : catalog().supported_orders()) {
    if (order > 24) continue;
    for (const auto& g : catalog().all_groups_of_order(order)) {
      if (g.is_abelian()) continue;
      CAPTURE(g.label());
      for (int k = 1; k <= 6; ++k) {
        CHECK(is_induced_k_star_free(g, k) ==
              oracles::induced_k_star_free_brute_force(g, k));
      }
    }
  }
}

TEST_CASE("group input files: generator and cayley documents") {
  nlohmann::json gen_doc{{"name", "S3"},
                         {"degree", 3},
                         {"generators", {{{0, 1, 2}}, {{0, 1}}}}};
  const FiniteGroup from_gens = group_from_json(gen_doc);
  CHECK(from_gens.order() == 6);
  CHECK(catalog().identify(from_gens).name == "S3");

  nlohmann::json cayley_doc{{"name", "C2"}, {"cayley", {{0, 1}, {1, 0}}}};
  CHECK(group_from_json(cayley_doc).order() == 2);

  nlohmann::json both = gen_doc;
  both["cayley"] = {{0}};
  CHECK_THROWS_AS(group_from_json(both), DataError);
  nlohmann::json neither{{"name", "empty"}};
  CHECK_THROWS_AS(group_from_json(neither), DataError);

  nlohmann::json bad_cycle{{"name", "bad"}, {"degree", 3}, {"generators", {{{0, 7}}}}};
  CHECK_THROWS_AS(group_from_json(bad_cycle), DataError);
}
