#ifndef STARFREE_COMMUTING_GRAPH_HPP
#define STARFREE_COMMUTING_GRAPH_HPP

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <utility>
#include <vector>

#include "starfree/group.hpp"

namespace starfree {

// The commuting graph of a non-abelian group: vertices are the non-central
// elements, edges join distinct commuting pairs. Adjacency is stored as one
// bit row per vertex. Immutable; queries are pure.
class CommutingGraph {
public:
  // Throws AbelianGroupError when the vertex set would be empty.
  explicit CommutingGraph(const FiniteGroup& g);

  const std::string& group_label() const { return label_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int element_of(int v) const { return vertices_[v]; }
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  int degree(int v) const { return static_cast<int>(rows_[v].count()); }
  const boost::dynamic_bitset<>& row(int v) const { return rows_[v]; }

  int max_degree() const;
  long long edge_count() const;
  // Connected components as (vertex count, edge count), sorted descending.
  std::vector<std::pair<int, int>> components() const;

  // Deterministic DOT rendering: vertices by element index, then edges in
  // lexicographic order. Byte-identical across runs.
  std::string to_dot() const;

private:
  std::string label_;
  std::vector<int> vertices_;
  std::vector<boost::dynamic_bitset<>> rows_;
};

struct StarReport {
  std::string group_label;
  int order = 0;
  int center_order = 0;
  int vertex_count = 0;
  int max_degree = 0;
  int strong_star_number = 0;
  int induced_star_number = 0;
  std::vector<std::pair<int, int>> degree_histogram;  // (degree, count) ascending
  std::vector<std::pair<int, int>> components;        // (vertices, edges) descending
};

// True iff no vertex of the commuting graph has degree >= k. Decided both
// from the graph and from the centralizer bound |C(x)| < (k+1) + |Z|; the
// two routes are asserted to agree.
bool is_strong_k_star_free(const FiniteGroup& g, int k);

// Smallest k for which g is strong k-star free: max degree + 1, equivalently
// max over non-central x of |C(x)| - |Z|.
int strong_star_number(const FiniteGroup& g);

// True iff no vertex has k pairwise non-adjacent neighbours.
bool is_induced_k_star_free(const FiniteGroup& g, int k);

// Smallest k for which is_induced_k_star_free holds.
int induced_star_number(const FiniteGroup& g);

StarReport star_report(const FiniteGroup& g);

// Largest independent set size within any vertex neighbourhood, by
// backtracking over the neighbourhood with degree-based ordering.
int max_neighbourhood_independent_set(const CommutingGraph& graph);

}  // namespace starfree

#endif  // STARFREE_COMMUTING_GRAPH_HPP
