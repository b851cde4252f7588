#ifndef STARFREE_CATALOG_HPP
#define STARFREE_CATALOG_HPP

#include <map>
#include <string>
#include <vector>

#include "starfree/group.hpp"

namespace starfree {

struct ExpectedInvariants {
  int center_order = 0;
  bool abelian = false;
  std::vector<int> class_sizes;  // sorted ascending
};

struct CatalogEntry {
  std::string name;
  int order = 0;
  int degree = 0;
  std::vector<Permutation> generators;
  ExpectedInvariants expected;
};

struct IdentifyResult {
  enum class Status { kNamed, kUnsupportedOrder, kNoMatch };
  Status status = Status::kUnsupportedOrder;
  std::string name;

  bool named() const { return status == Status::kNamed; }
};

// One representative per isomorphism class for every supported order,
// loaded from per-order JSON data files and revalidated against the
// expected invariants shipped with each entry. Immutable after load.
class Catalog {
public:
  // Orders covered by the data files in the default tier.
  static constexpr int kMainTierMax = 24;
  static constexpr int kExtraOrder = 60;

  static Catalog load(const std::string& dir, bool include_stretch = false);
  // Uses STARFREE_CATALOG_DIR when set, else the path compiled in.
  static Catalog load_default(bool include_stretch = false);

  const FiniteGroup& build(const std::string& name) const;  // UnknownNameError
  const std::vector<FiniteGroup>& all_groups_of_order(int n) const;  // UnsupportedOrderError
  bool supports_order(long long n) const;
  std::vector<int> supported_orders() const;
  bool stretch_loaded() const { return stretch_loaded_; }

  IdentifyResult identify(const FiniteGroup& g) const;

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  // Entry names for an order, in data-file order.
  std::vector<std::string> names_of_order(int n) const;

private:
  Catalog() = default;

  std::vector<CatalogEntry> entries_;
  std::map<int, std::vector<FiniteGroup>> groups_by_order_;
  std::map<std::string, std::pair<int, int>> location_by_name_;  // order, position
  bool stretch_loaded_ = false;
};

// Parametric constructions, independent of the data files.
FiniteGroup cyclic_group(int n);
// Dihedral group of order 2n (symmetries of the regular n-gon).
FiniteGroup dihedral_group(int n);
// Dicyclic group of order 4m; m = 2 gives the quaternion group.
FiniteGroup dicyclic_group(int m);

}  // namespace starfree

#endif  // STARFREE_CATALOG_HPP
