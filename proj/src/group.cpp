#include "starfree/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace starfree {

Permutation Permutation::identity(int degree) {
  Permutation p;
  p.degree = degree;
  p.images.resize(degree);
  std::iota(p.images.begin(), p.images.end(), 0);
  return p;
}

Permutation Permutation::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Permutation p = identity(degree);
  for (const auto& cycle : cycles) {
    for (size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree) {
        throw DataError("cycle point out of range for degree " + std::to_string(degree));
      }
      p.images[from] = to;
    }
  }
  std::vector<bool> seen(degree, false);
  for (int x : p.images) {
    if (seen[x]) throw DataError("cycles do not describe a permutation");
    seen[x] = true;
  }
  return p;
}

Permutation Permutation::then(const Permutation& other) const {
  Permutation r;
  r.degree = degree;
  r.images.resize(degree);
  for (int i = 0; i < degree; ++i) r.images[i] = other.images[images[i]];
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree; ++i) {
    if (images[i] != i) return false;
  }
  return true;
}

bool Permutation::operator<(const Permutation& other) const { return images < other.images; }

std::vector<int> CentralizerProfile::sizes() const {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.centralizer_size);
  return out;
}

std::vector<int> CentralizerProfile::multiplicities() const {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(e.class_count);
  return out;
}

namespace {

// Full validation pass used by every constructor. Inputs are data, so each
// axiom is checked exhaustively and the first violation is reported.
void validate_table(const std::vector<int>& table, int n, int* identity_out,
                    std::vector<int>* inverses_out) {
  for (int i = 0; i < n * n; ++i) {
    if (table[i] < 0 || table[i] >= n) {
      throw NotAGroupError("table entry out of range at (" + std::to_string(i / n) + ", " +
                           std::to_string(i % n) + ")");
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int a = 0; a < n; ++a) {
      if (table[e * n + a] != a || table[a * n + e] != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) throw NotAGroupError("no two-sided identity element");

  std::vector<int> inverses(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table[a * n + b] == identity && table[b * n + a] == identity) {
        inverses[a] = b;
        break;
      }
    }
    if (inverses[a] < 0) {
      throw NotAGroupError("element " + std::to_string(a) + " has no inverse");
    }
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = table[a * n + b];
      for (int c = 0; c < n; ++c) {
        if (table[ab * n + c] != table[a * n + table[b * n + c]]) {
          throw NotAGroupError("associativity fails at triple (" + std::to_string(a) + ", " +
                               std::to_string(b) + ", " + std::to_string(c) + ")");
        }
      }
    }
  }

  *identity_out = identity;
  *inverses_out = std::move(inverses);
}

}  // namespace

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& table,
                                           std::string label, int order_bound) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw NotAGroupError("empty table");
  if (n > order_bound) {
    throw ClosureTooLargeError("table order " + std::to_string(n) + " exceeds bound " +
                               std::to_string(order_bound));
  }
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw NotAGroupError("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }

  FiniteGroup g;
  g.order_ = n;
  g.table_ = std::move(flat);
  g.label_ = std::move(label);
  validate_table(g.table_, n, &g.identity_, &g.inverses_);
  return g;
}

FiniteGroup FiniteGroup::from_generators(const std::vector<Permutation>& generators,
                                         std::string label, int order_bound) {
  int degree = generators.empty() ? 1 : generators[0].degree;
  for (const auto& p : generators) {
    if (p.degree != degree) throw DataError("generators have mixed degrees");
  }

  std::vector<Permutation> elements = {Permutation::identity(degree)};
  std::map<std::vector<int>, int> index_of = {{elements[0].images, 0}};
  for (size_t head = 0; head < elements.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = elements[head].then(gen);
      if (index_of.emplace(next.images, elements.size()).second) {
        elements.push_back(std::move(next));
        if (static_cast<int>(elements.size()) > order_bound) {
          throw ClosureTooLargeError("closure exceeds order bound " +
                                     std::to_string(order_bound));
        }
      }
    }
  }

  const int n = static_cast<int>(elements.size());
  FiniteGroup g;
  g.order_ = n;
  g.label_ = std::move(label);
  g.table_.resize(n * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      g.table_[a * n + b] = index_of.at(elements[a].then(elements[b]).images);
    }
  }
  validate_table(g.table_, n, &g.identity_, &g.inverses_);
  return g;
}

FiniteGroup FiniteGroup::relabeled(std::string label) const {
  FiniteGroup g = *this;
  g.label_ = std::move(label);
  return g;
}

int FiniteGroup::element_order(int a) const {
  int k = 1;
  int x = a;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
  }
  return k;
}

int FiniteGroup::conjugate(int g, int x) const { return mul(mul(inverse(g), x), g); }

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int z = 0; z < order_; ++z) {
    bool central = true;
    for (int g = 0; g < order_; ++g) {
      if (mul(z, g) != mul(g, z)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<int> FiniteGroup::centralizer(int x) const {
  std::vector<int> out;
  for (int g = 0; g < order_; ++g) {
    if (mul(g, x) == mul(x, g)) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(order_, false);
  for (int x = 0; x < order_; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int g = 0; g < order_; ++g) {
      int y = conjugate(g, x);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

CentralizerProfile FiniteGroup::centralizer_profile() const {
  const int z = static_cast<int>(center().size());
  if (z == order_) {
    throw AbelianGroupError("centralizer profile is undefined for abelian group '" + label_ +
                            "'");
  }

  std::map<int, int> count_by_size;
  for (const auto& cls : conjugacy_classes()) {
    if (cls.size() == 1) continue;  // central elements
    count_by_size[order_ / static_cast<int>(cls.size())] += 1;
  }

  CentralizerProfile profile;
  profile.group_order = order_;
  profile.center_order = z;
  for (auto [size, count] : count_by_size) profile.entries.push_back({size, count});
  return profile;
}

std::vector<std::pair<int, int>> FiniteGroup::element_order_histogram() const {
  std::map<int, int> hist;
  for (int a = 0; a < order_; ++a) hist[element_order(a)] += 1;
  return {hist.begin(), hist.end()};
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string label,
                           int order_bound) {
  const long long n = static_cast<long long>(g.order()) * h.order();
  if (n > order_bound) {
    throw ClosureTooLargeError("product order " + std::to_string(n) + " exceeds bound " +
                               std::to_string(order_bound));
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  const int hn = h.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      table[a][b] = g.mul(a / hn, b / hn) * hn + h.mul(a % hn, b % hn);
    }
  }
  if (label.empty()) label = g.label() + "x" + h.label();
  return FiniteGroup::from_cayley_table(table, std::move(label), order_bound);
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<std::vector<int>>& action, std::string label,
                               int order_bound) {
  const int nn = n.order();
  const int hn = h.order();
  if (static_cast<int>(action.size()) != hn) {
    throw NotAHomomorphismError("action must assign one map per element of H");
  }

  // Each action[x] must be an automorphism of N.
  for (int x = 0; x < hn; ++x) {
    const auto& phi = action[x];
    if (static_cast<int>(phi.size()) != nn) {
      throw NotAHomomorphismError("action[" + std::to_string(x) + "] has wrong size");
    }
    std::vector<bool> seen(nn, false);
    for (int v : phi) {
      if (v < 0 || v >= nn || seen[v]) {
        throw NotAHomomorphismError("action[" + std::to_string(x) + "] is not a bijection");
      }
      seen[v] = true;
    }
    for (int a = 0; a < nn; ++a) {
      for (int b = 0; b < nn; ++b) {
        if (phi[n.mul(a, b)] != n.mul(phi[a], phi[b])) {
          throw NotAHomomorphismError("action[" + std::to_string(x) +
                                      "] is not an automorphism of N");
        }
      }
    }
  }

  // Homomorphism law, in the composition order the product formula needs:
  // action[h1*h2](x) = action[h1](action[h2](x)).
  for (int h1 = 0; h1 < hn; ++h1) {
    for (int h2 = 0; h2 < hn; ++h2) {
      const auto& lhs = action[h.mul(h1, h2)];
      for (int x = 0; x < nn; ++x) {
        if (lhs[x] != action[h1][action[h2][x]]) {
          throw NotAHomomorphismError("action is not a homomorphism at pair (" +
                                      std::to_string(h1) + ", " + std::to_string(h2) + ")");
        }
      }
    }
  }

  const long long total = static_cast<long long>(nn) * hn;
  if (total > order_bound) {
    throw ClosureTooLargeError("product order " + std::to_string(total) + " exceeds bound " +
                               std::to_string(order_bound));
  }

  std::vector<std::vector<int>> table(total, std::vector<int>(total));
  for (int a = 0; a < total; ++a) {
    const int n1 = a / hn, h1 = a % hn;
    for (int b = 0; b < total; ++b) {
      const int n2 = b / hn, h2 = b % hn;
      table[a][b] = n.mul(n1, action[h1][n2]) * hn + h.mul(h1, h2);
    }
  }
  if (label.empty()) label = n.label() + ":" + h.label();
  return FiniteGroup::from_cayley_table(table, std::move(label), order_bound);
}

}  // namespace starfree
