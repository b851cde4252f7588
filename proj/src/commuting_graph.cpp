#include "starfree/commuting_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace starfree {

CommutingGraph::CommutingGraph(const FiniteGroup& g) : label_(g.label()) {
  std::vector<char> central(g.order(), 0);
  for (int z : g.center()) central[z] = 1;
  for (int x = 0; x < g.order(); ++x) {
    if (!central[x]) vertices_.push_back(x);
  }
  if (vertices_.empty()) {
    throw AbelianGroupError("commuting graph of abelian group '" + g.label() +
                            "' has no vertices");
  }

  const int nv = vertex_count();
  rows_.assign(nv, boost::dynamic_bitset<>(nv));
  for (int u = 0; u < nv; ++u) {
    for (int v = u + 1; v < nv; ++v) {
      const int x = vertices_[u], y = vertices_[v];
      if (g.mul(x, y) == g.mul(y, x)) {
        rows_[u].set(v);
        rows_[v].set(u);
      }
    }
  }
}

int CommutingGraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

long long CommutingGraph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < vertex_count(); ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<int, int>> CommutingGraph::components() const {
  const int nv = vertex_count();
  std::vector<char> seen(nv, 0);
  std::vector<std::pair<int, int>> out;
  for (int start = 0; start < nv; ++start) {
    if (seen[start]) continue;
    std::vector<int> stack = {start};
    seen[start] = 1;
    int vertices = 0;
    long long degree_sum = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++vertices;
      degree_sum += degree(v);
      for (auto u = rows_[v].find_first(); u != boost::dynamic_bitset<>::npos;
           u = rows_[v].find_next(u)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(static_cast<int>(u));
        }
      }
    }
    out.emplace_back(vertices, static_cast<int>(degree_sum / 2));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string CommutingGraph::to_dot() const {
  std::ostringstream os;
  os << "graph \"" << label_ << "\" {\n";
  for (int v = 0; v < vertex_count(); ++v) os << "  " << vertices_[v] << ";\n";
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertex_count(); ++u) {
    for (auto v = rows_[u].find_next(u); v != boost::dynamic_bitset<>::npos;
         v = rows_[u].find_next(v)) {
      edges.emplace_back(vertices_[u], vertices_[static_cast<int>(v)]);
    }
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) os << "  " << a << " -- " << b << ";\n";
  os << "}\n";
  return os.str();
}

namespace {

int center_order(const FiniteGroup& g) { return static_cast<int>(g.center().size()); }

void require_non_abelian(const FiniteGroup& g) {
  if (center_order(g) == g.order()) {
    throw AbelianGroupError("star-freeness is undefined for abelian group '" + g.label() +
                            "'");
  }
}

// Searches the neighbourhood of every vertex for an independent set;
// vertices are tried in descending degree order and candidates in ascending
// degree order so dead branches fail fast.
bool independent_set_of_size(const CommutingGraph& graph, const boost::dynamic_bitset<>& pool,
                             const std::vector<int>& by_ascending_degree, size_t from,
                             int needed) {
  if (needed == 0) return true;
  if (static_cast<int>(pool.count()) < needed) return false;
  for (size_t i = from; i < by_ascending_degree.size(); ++i) {
    const int v = by_ascending_degree[i];
    if (!pool.test(v)) continue;
    boost::dynamic_bitset<> rest = pool & ~graph.row(v);
    rest.reset(v);
    if (independent_set_of_size(graph, rest, by_ascending_degree, i + 1, needed - 1)) {
      return true;
    }
  }
  return false;
}

int max_independent_in(const CommutingGraph& graph, const boost::dynamic_bitset<>& pool,
                       const std::vector<int>& by_ascending_degree, size_t from) {
  int best = 0;
  for (size_t i = from; i < by_ascending_degree.size(); ++i) {
    const int v = by_ascending_degree[i];
    if (!pool.test(v)) continue;
    boost::dynamic_bitset<> rest = pool & ~graph.row(v);
    rest.reset(v);
    best = std::max(best, 1 + max_independent_in(graph, rest, by_ascending_degree, i + 1));
  }
  return best;
}

std::vector<int> degree_order(const CommutingGraph& graph, bool ascending) {
  std::vector<int> order(graph.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return ascending ? graph.degree(a) < graph.degree(b) : graph.degree(a) > graph.degree(b);
  });
  return order;
}

}  // namespace

bool is_strong_k_star_free(const FiniteGroup& g, int k) {
  require_non_abelian(g);
  if (k < 1) throw InvalidSizesError("star parameter must be positive");

  CommutingGraph graph(g);
  const bool graph_route = graph.max_degree() < k;

  const int z = center_order(g);
  bool centralizer_route = true;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    const int csize = static_cast<int>(g.centralizer(graph.element_of(v)).size());
    if (csize >= (k + 1) + z) {
      centralizer_route = false;
      break;
    }
  }

  if (graph_route != centralizer_route) {
    throw std::logic_error("graph and centralizer star-freeness criteria disagree for '" +
                           g.label() + "'");
  }
  return graph_route;
}

int strong_star_number(const FiniteGroup& g) {
  require_non_abelian(g);
  const int z = center_order(g);
  CommutingGraph graph(g);
  int best = 0;
  for (int v = 0; v < graph.vertex_count(); ++v) {
    best = std::max(best,
                    static_cast<int>(g.centralizer(graph.element_of(v)).size()) - z);
  }
  if (best != graph.max_degree() + 1) {
    throw std::logic_error("degree identity violated for '" + g.label() + "'");
  }
  return best;
}

int max_neighbourhood_independent_set(const CommutingGraph& graph) {
  const auto hubs = degree_order(graph, /*ascending=*/false);
  const auto leaves = degree_order(graph, /*ascending=*/true);
  int best = 0;
  for (int hub : hubs) {
    if (graph.degree(hub) <= best) continue;  // cannot beat the current best
    best = std::max(best, max_independent_in(graph, graph.row(hub), leaves, 0));
  }
  return best;
}

bool is_induced_k_star_free(const FiniteGroup& g, int k) {
  require_non_abelian(g);
  if (k < 1) throw InvalidSizesError("star parameter must be positive");

  CommutingGraph graph(g);
  const auto hubs = degree_order(graph, /*ascending=*/false);
  const auto leaves = degree_order(graph, /*ascending=*/true);
  for (int hub : hubs) {
    if (graph.degree(hub) < k) break;  // descending order: no later hub can host k leaves
    if (independent_set_of_size(graph, graph.row(hub), leaves, 0, k)) return false;
  }
  return true;
}

int induced_star_number(const FiniteGroup& g) {
  require_non_abelian(g);
  return max_neighbourhood_independent_set(CommutingGraph(g)) + 1;
}

StarReport star_report(const FiniteGroup& g) {
  require_non_abelian(g);
  CommutingGraph graph(g);

  StarReport report;
  report.group_label = g.label();
  report.order = g.order();
  report.center_order = center_order(g);
  report.vertex_count = graph.vertex_count();
  report.max_degree = graph.max_degree();
  report.strong_star_number = strong_star_number(g);
  report.induced_star_number = max_neighbourhood_independent_set(graph) + 1;
  report.components = graph.components();

  std::map<int, int> hist;
  for (int v = 0; v < graph.vertex_count(); ++v) hist[graph.degree(v)] += 1;
  report.degree_histogram.assign(hist.begin(), hist.end());

  if (report.induced_star_number > report.strong_star_number) {
    throw std::logic_error("induced star number exceeds strong star number for '" +
                           g.label() + "'");
  }
  return report;
}

}  // namespace starfree
