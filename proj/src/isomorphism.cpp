#include <algorithm>
#include <array>
#include <utility>
#include <vector>

#include "starfree/group.hpp"

namespace starfree {

namespace {

// Closure of `gens` inside g, as a membership mask.
std::vector<char> closure_mask(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> frontier = {g.identity()};
  in[g.identity()] = 1;
  for (size_t head = 0; head < frontier.size(); ++head) {
    for (int gen : gens) {
      int next = g.mul(frontier[head], gen);
      if (!in[next]) {
        in[next] = 1;
        frontier.push_back(next);
      }
    }
  }
  return in;
}

int mask_count(const std::vector<char>& mask) {
  return static_cast<int>(std::count(mask.begin(), mask.end(), 1));
}

bool search_generating_set(const FiniteGroup& g, int target_size, int min_index,
                           std::vector<int>* current, std::vector<char>* current_closure) {
  if (mask_count(*current_closure) == g.order()) return true;
  if (static_cast<int>(current->size()) == target_size) return false;
  for (int next = min_index; next < g.order(); ++next) {
    // An element inside the closure of the prefix is redundant in any
    // minimal generating set, so it never needs to be tried.
    if ((*current_closure)[next]) continue;
    current->push_back(next);
    std::vector<char> extended = closure_mask(g, *current);
    if (search_generating_set(g, target_size, next + 1, current, &extended)) {
      current_closure->swap(extended);
      return true;
    }
    current->pop_back();
  }
  return false;
}

// Discovery-order definitions for the subgroup generated by `gens`:
// element = mul(parent, gens[gen_index]), with the identity implicit.
struct ClosureChain {
  std::vector<int> elements;  // starts with the identity
  std::vector<std::array<int, 3>> defs;  // (element, parent, gen_index)
};

ClosureChain closure_chain(const FiniteGroup& g, const std::vector<int>& gens) {
  ClosureChain chain;
  std::vector<char> in(g.order(), 0);
  chain.elements.push_back(g.identity());
  in[g.identity()] = 1;
  for (size_t head = 0; head < chain.elements.size(); ++head) {
    for (size_t k = 0; k < gens.size(); ++k) {
      int next = g.mul(chain.elements[head], gens[k]);
      if (!in[next]) {
        in[next] = 1;
        chain.defs.push_back({next, chain.elements[head], static_cast<int>(k)});
        chain.elements.push_back(next);
      }
    }
  }
  return chain;
}

struct IsoSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::vector<int> gens;
  std::vector<ClosureChain> chains;          // chains[j] = closure of gens[0..j]
  std::vector<std::vector<int>> candidates;  // candidates[j] = admissible images
  bool collect_all = false;
  std::vector<std::vector<int>> found;

  // Extends the generator images to a map on chains[level] and checks that
  // it is an injective homomorphism there.
  bool consistent(int level, const std::vector<int>& images, std::vector<int>* phi_out) const {
    const ClosureChain& chain = chains[level];
    std::vector<int> phi(g.order(), -1);
    std::vector<char> used(h.order(), 0);
    phi[g.identity()] = h.identity();
    used[h.identity()] = 1;
    for (const auto& [elem, parent, gen_index] : chain.defs) {
      int image = h.mul(phi[parent], images[gen_index]);
      if (phi[elem] != -1) {
        if (phi[elem] != image) return false;
      } else {
        if (used[image]) return false;
        phi[elem] = image;
        used[image] = 1;
      }
    }
    for (int a : chain.elements) {
      for (int b : chain.elements) {
        if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return false;
      }
    }
    if (phi_out) *phi_out = std::move(phi);
    return true;
  }

  bool extend(size_t level, std::vector<int>* images) {
    if (level == gens.size()) {
      std::vector<int> phi;
      if (!consistent(gens.empty() ? 0 : static_cast<int>(gens.size()) - 1, *images, &phi)) {
        return false;
      }
      if (static_cast<int>(chains.back().elements.size()) != g.order()) return false;
      found.push_back(std::move(phi));
      return !collect_all;
    }
    for (int candidate : candidates[level]) {
      (*images)[level] = candidate;
      if (!consistent(static_cast<int>(level), *images, nullptr)) continue;
      if (extend(level + 1, images)) return true;
    }
    return false;
  }
};

std::vector<std::vector<int>> run_iso_search(const FiniteGroup& g, const FiniteGroup& h,
                                             bool collect_all) {
  IsoSearch search{g, h, {}, {}, {}, collect_all, {}};
  search.gens = minimal_generating_set(g);

  if (search.gens.empty()) {
    // Trivial group: the only map sends identity to identity.
    if (h.order() == 1) search.found.push_back({h.identity()});
    return std::move(search.found);
  }

  for (size_t j = 0; j < search.gens.size(); ++j) {
    search.chains.push_back(closure_chain(
        g, std::vector<int>(search.gens.begin(), search.gens.begin() + j + 1)));
  }

  // Generator images must match element order and centralizer size.
  for (int gen : search.gens) {
    const int ord = g.element_order(gen);
    const int csize = static_cast<int>(g.centralizer(gen).size());
    std::vector<int> cands;
    for (int x = 0; x < h.order(); ++x) {
      if (h.element_order(x) == ord && static_cast<int>(h.centralizer(x).size()) == csize) {
        cands.push_back(x);
      }
    }
    search.candidates.push_back(std::move(cands));
  }

  std::vector<int> images(search.gens.size(), -1);
  search.extend(0, &images);
  return std::move(search.found);
}

// Multiset of (element order, centralizer size) pairs; an isomorphism
// invariant that subsumes the order histogram and class-size multiset.
std::vector<std::pair<int, int>> order_centralizer_signature(const FiniteGroup& g) {
  std::vector<std::pair<int, int>> sig;
  sig.reserve(g.order());
  for (int x = 0; x < g.order(); ++x) {
    sig.emplace_back(g.element_order(x), static_cast<int>(g.centralizer(x).size()));
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

}  // namespace

std::vector<int> minimal_generating_set(const FiniteGroup& g) {
  if (g.order() == 1) return {};
  for (int size = 1; size <= g.order(); ++size) {
    std::vector<int> current;
    std::vector<char> closure = closure_mask(g, current);
    if (search_generating_set(g, size, 0, &current, &closure)) return current;
  }
  return {};  // unreachable: the full element set always generates
}

std::vector<std::vector<int>> automorphisms(const FiniteGroup& g, int order_bound) {
  if (g.order() > order_bound) {
    throw ClosureTooLargeError("automorphism search bound " + std::to_string(order_bound) +
                               " exceeded by order " + std::to_string(g.order()));
  }
  return run_iso_search(g, g, /*collect_all=*/true);
}

std::vector<int> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                  int order_bound) {
  if (g.order() != h.order()) return {};
  if (g.is_abelian() != h.is_abelian()) return {};
  if (g.center().size() != h.center().size()) return {};
  if (order_centralizer_signature(g) != order_centralizer_signature(h)) return {};
  if (g.order() > order_bound) {
    throw ClosureTooLargeError("isomorphism search bound " + std::to_string(order_bound) +
                               " exceeded by order " + std::to_string(g.order()));
  }
  auto found = run_iso_search(g, h, /*collect_all=*/false);
  return found.empty() ? std::vector<int>{} : std::move(found.front());
}

bool are_isomorphic(const FiniteGroup& g, const FiniteGroup& h, int order_bound) {
  if (g.order() != h.order()) return false;
  if (g.is_abelian() != h.is_abelian()) return false;
  if (g.is_abelian()) {
    // Finite abelian groups are determined by their element-order histogram.
    return g.element_order_histogram() == h.element_order_histogram();
  }
  return !find_isomorphism(g, h, order_bound).empty();
}

}  // namespace starfree
