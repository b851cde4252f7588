#include "starfree/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <numeric>

#include "starfree/json_io.hpp"

#ifndef STARFREE_DEFAULT_CATALOG_DIR
#define STARFREE_DEFAULT_CATALOG_DIR "data/catalog/v1"
#endif

namespace starfree {

namespace {

// Number of isomorphism classes per order, used to reject incomplete data.
int known_group_count(int n) {
  static const std::map<int, int> counts = {
      {1, 1},  {2, 1},  {3, 1},  {4, 2},  {5, 1},  {6, 2},  {7, 1},  {8, 5},
      {9, 2},  {10, 2}, {11, 1}, {12, 5}, {13, 1}, {14, 2}, {15, 1}, {16, 14},
      {17, 1}, {18, 5}, {19, 1}, {20, 5}, {21, 2}, {22, 2}, {23, 1}, {24, 15},
      {25, 2}, {26, 2}, {27, 5}, {28, 4}, {29, 1}, {30, 4}, {31, 1}, {32, 51},
      {60, 13}};
  auto it = counts.find(n);
  return it == counts.end() ? -1 : it->second;
}

bool is_stretch_order(int n) { return n >= 25 && n <= 32; }

std::vector<int> sorted_class_sizes(const FiniteGroup& g) {
  std::vector<int> sizes;
  for (const auto& cls : g.conjugacy_classes()) sizes.push_back(static_cast<int>(cls.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

CatalogEntry entry_from_json(const nlohmann::json& doc, const std::string& file) {
  CatalogEntry entry;
  try {
    entry.name = doc.at("name").get<std::string>();
    entry.degree = doc.at("degree").get<int>();
    for (const auto& cycles : doc.at("generators")) {
      entry.generators.push_back(
          Permutation::from_cycles(entry.degree, cycles.get<std::vector<std::vector<int>>>()));
    }
    const auto& expected = doc.at("expected");
    entry.expected.center_order = expected.at("center").get<int>();
    entry.expected.abelian = expected.at("abelian").get<bool>();
    entry.expected.class_sizes = expected.at("class_sizes").get<std::vector<int>>();
    entry.order = std::accumulate(entry.expected.class_sizes.begin(),
                                  entry.expected.class_sizes.end(), 0);
  } catch (const nlohmann::json::exception& e) {
    throw DataError("malformed catalog entry in " + file + ": " + e.what());
  }
  return entry;
}

}  // namespace

Catalog Catalog::load(const std::string& dir, bool include_stretch) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw DataError("catalog directory not found: " + dir);

  std::vector<fs::path> files;
  for (const auto& item : fs::directory_iterator(dir)) {
    const std::string name = item.path().filename().string();
    if (name.rfind("order_", 0) == 0 && item.path().extension() == ".json") {
      files.push_back(item.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw DataError("no catalog data files in " + dir);

  Catalog catalog;
  for (const auto& path : files) {
    const auto doc = load_json_file(path.string());
    const int order = doc.value("order", 0);
    if (order < 1) throw DataError("missing order in " + path.string());
    if (is_stretch_order(order)) {
      if (!include_stretch) continue;
      catalog.stretch_loaded_ = true;
    }

    if (!doc.contains("groups") || !doc.contains("checksum")) {
      throw DataError("catalog file " + path.string() + " lacks groups/checksum");
    }
    const std::string actual = fnv1a64_hex(doc.at("groups").dump());
    if (actual != doc.at("checksum").get<std::string>()) {
      throw DataError("checksum mismatch in " + path.string() +
                      " (file edited?): expected " + doc.at("checksum").get<std::string>() +
                      ", computed " + actual);
    }

    const int expected_count = known_group_count(order);
    if (expected_count > 0 && static_cast<int>(doc.at("groups").size()) != expected_count) {
      throw DataError("catalog file " + path.string() + " has " +
                      std::to_string(doc.at("groups").size()) + " groups, expected " +
                      std::to_string(expected_count));
    }

    auto& bucket = catalog.groups_by_order_[order];
    for (const auto& group_doc : doc.at("groups")) {
      CatalogEntry entry = entry_from_json(group_doc, path.string());
      FiniteGroup g = FiniteGroup::from_generators(entry.generators, entry.name);

      // Self-validation: the recipe must reproduce the recorded invariants.
      if (g.order() != order || entry.order != order) {
        throw DataError("entry '" + entry.name + "' builds order " +
                        std::to_string(g.order()) + ", file says " + std::to_string(order));
      }
      if (static_cast<int>(g.center().size()) != entry.expected.center_order ||
          g.is_abelian() != entry.expected.abelian ||
          sorted_class_sizes(g) != entry.expected.class_sizes) {
        throw DataError("entry '" + entry.name + "' fails expected-invariant validation");
      }
      if (!catalog.location_by_name_
               .emplace(entry.name, std::make_pair(order, static_cast<int>(bucket.size())))
               .second) {
        throw DataError("duplicate catalog name '" + entry.name + "'");
      }
      bucket.push_back(std::move(g));
      catalog.entries_.push_back(std::move(entry));
    }
  }
  return catalog;
}

Catalog Catalog::load_default(bool include_stretch) {
  const char* env = std::getenv("STARFREE_CATALOG_DIR");
  return load(env ? env : STARFREE_DEFAULT_CATALOG_DIR, include_stretch);
}

const FiniteGroup& Catalog::build(const std::string& name) const {
  auto it = location_by_name_.find(name);
  if (it == location_by_name_.end()) throw UnknownNameError("unknown group name '" + name + "'");
  return groups_by_order_.at(it->second.first)[it->second.second];
}

const std::vector<FiniteGroup>& Catalog::all_groups_of_order(int n) const {
  auto it = groups_by_order_.find(n);
  if (it == groups_by_order_.end()) {
    throw UnsupportedOrderError("order " + std::to_string(n) + " is outside catalog scope");
  }
  return it->second;
}

bool Catalog::supports_order(long long n) const {
  return n <= std::numeric_limits<int>::max() &&
         groups_by_order_.count(static_cast<int>(n)) > 0;
}

std::vector<int> Catalog::supported_orders() const {
  std::vector<int> orders;
  for (const auto& [order, groups] : groups_by_order_) orders.push_back(order);
  return orders;
}

IdentifyResult Catalog::identify(const FiniteGroup& g) const {
  IdentifyResult result;
  if (!supports_order(g.order())) {
    result.status = IdentifyResult::Status::kUnsupportedOrder;
    return result;
  }
  const auto& bucket = groups_by_order_.at(g.order());
  for (size_t i = 0; i < bucket.size(); ++i) {
    if (are_isomorphic(g, bucket[i])) {
      result.status = IdentifyResult::Status::kNamed;
      result.name = bucket[i].label();
      return result;
    }
  }
  // Unreachable while per-order counts validate; reported, not asserted.
  result.status = IdentifyResult::Status::kNoMatch;
  return result;
}

std::vector<std::string> Catalog::names_of_order(int n) const {
  std::vector<std::string> names;
  for (const auto& g : all_groups_of_order(n)) names.push_back(g.label());
  return names;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw DataError("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup::from_cayley_table(table, "C" + std::to_string(n));
}

FiniteGroup dihedral_group(int n) {
  if (n < 1) throw DataError("dihedral parameter must be positive");
  const int order = 2 * n;
  // Index a*n + i encodes s^a r^i with s r s = r^-1.
  auto encode = [n](int a, int i) { return a * n + ((i % n) + n) % n; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int a = 0; a < 2; ++a) {
    for (int i = 0; i < n; ++i) {
      for (int b = 0; b < 2; ++b) {
        for (int j = 0; j < n; ++j) {
          table[encode(a, i)][encode(b, j)] =
              b == 0 ? encode(a, i + j) : encode(1 - a, j - i);
        }
      }
    }
  }
  return FiniteGroup::from_cayley_table(table, "D" + std::to_string(order));
}

FiniteGroup dicyclic_group(int m) {
  if (m < 1) throw DataError("dicyclic parameter must be positive");
  const int order = 4 * m;
  const int two_m = 2 * m;
  // Index b*2m + i encodes a^i b^(0 or 1) with a^2m = e, b^2 = a^m,
  // b a b^-1 = a^-1.
  auto encode = [two_m](int b, int i) { return b * two_m + ((i % two_m) + two_m) % two_m; };
  std::vector<std::vector<int>> table(order, std::vector<int>(order));
  for (int b1 = 0; b1 < 2; ++b1) {
    for (int i = 0; i < two_m; ++i) {
      for (int b2 = 0; b2 < 2; ++b2) {
        for (int j = 0; j < two_m; ++j) {
          int left, right_b;
          if (b1 == 0 && b2 == 0) {
            left = i + j, right_b = 0;
          } else if (b1 == 0 && b2 == 1) {
            left = i + j, right_b = 1;  // a^i (a^j b) = a^(i+j) b
          } else if (b1 == 1 && b2 == 0) {
            left = i - j, right_b = 1;  // (a^i b) a^j = a^(i-j) b
          } else {
            left = i - j + m, right_b = 0;  // (a^i b)(a^j b) = a^(i-j+m)
          }
          table[encode(b1, i)][encode(b2, j)] = encode(right_b, left);
        }
      }
    }
  }
  std::string label = m == 2 ? "Q8" : "Dic" + std::to_string(m);
  return FiniteGroup::from_cayley_table(table, std::move(label));
}

}  // namespace starfree
