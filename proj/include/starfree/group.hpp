#ifndef STARFREE_GROUP_HPP
#define STARFREE_GROUP_HPP

#include <string>
#include <vector>

#include "starfree/errors.hpp"

namespace starfree {

// A permutation of {0, ..., degree-1}. Products are applied left to right:
// (p then q)(x) = q(p(x)).
struct Permutation {
  int degree = 0;
  std::vector<int> images;

  static Permutation identity(int degree);
  // Cycles use 0-based point indices; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  Permutation then(const Permutation& other) const;
  bool is_identity() const;
  bool operator==(const Permutation& other) const = default;
  bool operator<(const Permutation& other) const;
};

struct ProfileEntry {
  int centralizer_size = 0;
  int class_count = 0;
  bool operator==(const ProfileEntry&) const = default;
};

// Center order plus the multiset of non-central centralizer sizes, grouped
// by conjugacy class. Satisfies n = z + sum(class_count * n/size).
struct CentralizerProfile {
  int group_order = 0;
  int center_order = 0;
  std::vector<ProfileEntry> entries;  // sorted by centralizer_size ascending

  std::vector<int> sizes() const;
  std::vector<int> multiplicities() const;
  bool operator==(const CentralizerProfile&) const = default;
};

// A finite group as a fully validated multiplication table over element
// indices 0..n-1. Immutable after construction; all queries are pure and
// safe to call concurrently.
class FiniteGroup {
public:
  static constexpr int kDefaultOrderBound = 256;

  // Validates closure, identity, inverses and associativity; identity and
  // inverses are discovered from the table, never supplied.
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                                       std::string label = "",
                                       int order_bound = kDefaultOrderBound);

  // Breadth-first closure from the identity, generators applied in input
  // order; element 0 is always the identity.
  static FiniteGroup from_generators(const std::vector<Permutation>& generators,
                                     std::string label = "",
                                     int order_bound = kDefaultOrderBound);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inverse(int a) const { return inverses_[a]; }
  const std::string& label() const { return label_; }
  FiniteGroup relabeled(std::string label) const;

  int element_order(int a) const;
  int conjugate(int g, int x) const;  // g^-1 * x * g
  bool is_abelian() const;

  std::vector<int> center() const;
  std::vector<int> centralizer(int x) const;
  // Partition of all element indices into conjugacy classes; classes appear
  // in order of their smallest element, each class sorted ascending.
  std::vector<std::vector<int>> conjugacy_classes() const;
  // Throws AbelianGroupError when center() is the whole group.
  CentralizerProfile centralizer_profile() const;

  // Multiset of element orders, as (order, count) sorted by order.
  std::vector<std::pair<int, int>> element_order_histogram() const;

  const std::vector<int>& raw_table() const { return table_; }

private:
  FiniteGroup() = default;

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major, table_[a*order_+b] = a*b
  std::vector<int> inverses_;
  std::string label_;
};

// Element (g, h) is indexed g * |H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::string label = "",
                           int order_bound = FiniteGroup::kDefaultOrderBound);

// action[h] is an automorphism of N given as an index map; must satisfy
// action[h1*h2] = action[h1] o action[h2] (a homomorphism H -> Aut(N)).
// Multiplication: (n1,h1)(n2,h2) = (n1 * action[h1](n2), h1*h2).
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action,
                               std::string label = "",
                               int order_bound = FiniteGroup::kDefaultOrderBound);

// Smallest generating set, found by increasing-size search over sorted
// element tuples. The trivial group yields {}.
std::vector<int> minimal_generating_set(const FiniteGroup& g);

// The full automomorphism group as table-preserving bijections (index maps),
// found by backtracking on images of a minimal generating set.
std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, int order_bound = 64);

// Invariant screen (order, abelianness, element orders, class sizes, center)
// followed by generator-image backtracking. The bound limits the
// backtracking path only; abelian pairs compare by order histogram.
bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, int order_bound = 64);

// The witness bijection when one exists (phi[g-index] = h-index).
std::vector<int> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                  int order_bound = 64);

}  // namespace starfree

#endif  // STARFREE_GROUP_HPP
