#include "starfree/class_equation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace starfree {

namespace {

void check_sizes(const std::vector<int>& sizes, int center) {
  if (center < 1) throw InvalidSizesError("center order must be positive");
  if (sizes.empty()) throw InvalidSizesError("size set must be non-empty");
  if (sizes.size() > 24) throw InvalidSizesError("size set out of supported range");
  int prev = 0;
  for (int s : sizes) {
    if (s <= prev) throw InvalidSizesError("sizes must be strictly increasing");
    if (s > 100000) throw InvalidSizesError("size set out of supported range");
    if (s <= center) {
      throw InvalidSizesError("size " + std::to_string(s) + " does not exceed center " +
                              std::to_string(center));
    }
    if (s % center != 0) {
      throw InvalidSizesError("center " + std::to_string(center) + " does not divide size " +
                              std::to_string(s));
    }
    prev = s;
  }
}

// Enumerates multiplicity tuples with sum m_i * (L / n_i) < L, i.e.
// sum m_i / n_i < 1 over the common denominator L.
void enumerate_multiplicities(const std::vector<int>& sizes, int center, long long lcm,
                              size_t index, long long used, std::vector<int>* current,
                              std::vector<ClassEquationSolution>* out) {
  if (index == sizes.size()) {
    const long long remainder = lcm - used;
    const long long zl = static_cast<long long>(center) * lcm;
    if (zl % remainder != 0) return;
    const long long n = zl / remainder;
    for (int s : sizes) {
      if (n % s != 0) return;
    }
    if (sizes.back() >= n) return;  // every centralizer of a non-central element is proper
    ClassEquationSolution solution;
    solution.order = n;
    solution.center = center;
    solution.sizes = sizes;
    solution.multiplicities = *current;
    out->push_back(std::move(solution));
    return;
  }
  const long long share = lcm / sizes[index];
  // Later sizes need room for at least one class each.
  long long reserved = 0;
  for (size_t j = index + 1; j < sizes.size(); ++j) reserved += lcm / sizes[j];
  for (int m = 1; used + m * share + reserved < lcm; ++m) {
    current->push_back(m);
    enumerate_multiplicities(sizes, center, lcm, index + 1, used + m * share, current, out);
    current->pop_back();
  }
}

}  // namespace

std::vector<ClassEquationSolution> solve_class_equation(const std::vector<int>& sizes,
                                                        int center) {
  check_sizes(sizes, center);
  long long lcm = 1;
  for (int s : sizes) {
    lcm = std::lcm(lcm, static_cast<long long>(s));
    if (lcm > 1'000'000'000'000'000LL) {
      throw InvalidSizesError("least common multiple of sizes is too large");
    }
  }

  std::vector<ClassEquationSolution> out;
  std::vector<int> current;
  enumerate_multiplicities(sizes, center, lcm, 0, 0, &current, &out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.order, a.multiplicities) < std::tie(b.order, b.multiplicities);
  });
  return out;
}

int distinct_size_bound(int k) { return 2 * k; }

long long conjugacy_count(const ClassEquationSolution& solution) {
  long long total = solution.center;
  for (int m : solution.multiplicities) total += m;
  return total;
}

std::vector<long long> CandidateSet::candidate_orders() const {
  std::vector<long long> orders;
  for (const auto& tuple : tuples) {
    for (const auto& solution : tuple.solutions) orders.push_back(solution.order);
  }
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return orders;
}

CandidateSet enumerate_candidates(int k) {
  if (k < 1) throw InvalidSizesError("star parameter must be positive");
  CandidateSet set;
  set.k = k;
  const int size_bound = distinct_size_bound(k);
  for (int z = 1; z <= k; ++z) {
    std::vector<int> admissible;
    for (int s = z + z; s <= k + z; s += z) admissible.push_back(s);
    const size_t count = admissible.size();
    for (size_t mask = 1; mask < (size_t{1} << count); ++mask) {
      std::vector<int> sizes;
      for (size_t bit = 0; bit < count; ++bit) {
        if (mask & (size_t{1} << bit)) sizes.push_back(admissible[bit]);
      }
      auto solutions = solve_class_equation(sizes, z);
      if (solutions.empty()) continue;
      if (static_cast<int>(sizes.size()) > size_bound) {
        throw std::logic_error("distinct size bound violated");
      }
      set.tuples.push_back({z, std::move(sizes), std::move(solutions)});
    }
  }
  std::sort(set.tuples.begin(), set.tuples.end(), [](const auto& a, const auto& b) {
    return std::tie(a.center, a.sizes) < std::tie(b.center, b.sizes);
  });
  return set;
}

}  // namespace starfree
