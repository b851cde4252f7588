#ifndef STARFREE_CLASS_EQUATION_HPP
#define STARFREE_CLASS_EQUATION_HPP

#include <vector>

#include "starfree/errors.hpp"

namespace starfree {

// One solution of the class equation n - z = sum m_i * (n / n_i) with
// prescribed center order z and centralizer sizes n_1 < ... < n_m, every
// size used at least once, z | n_i, n_i | n and z < n_i < n.
struct ClassEquationSolution {
  long long order = 0;
  int center = 0;
  std::vector<int> sizes;
  std::vector<int> multiplicities;
  bool operator==(const ClassEquationSolution&) const = default;
};

// Complete solution list for the given size set and center order, sorted by
// (order, multiplicities). Arithmetic is exact over the common denominator
// lcm(sizes); no floating point anywhere.
std::vector<ClassEquationSolution> solve_class_equation(const std::vector<int>& sizes,
                                                        int center);

struct CandidateTuple {
  int center = 0;
  std::vector<int> sizes;
  std::vector<ClassEquationSolution> solutions;
};

// Everything the class equation admits for strong k-star-free groups:
// center orders 1..k, centralizer sizes over multiples of z in (z, k+z].
struct CandidateSet {
  int k = 0;
  std::vector<CandidateTuple> tuples;  // only tuples with solutions, sorted

  std::vector<long long> candidate_orders() const;  // sorted, deduplicated
};

CandidateSet enumerate_candidates(int k);

// Largest possible number of distinct centralizer sizes: 2k, from
// 1 = sum m_i/n_i > m/(2k+1).
int distinct_size_bound(int k);

// Total number of conjugacy classes: z central singletons plus sum m_i.
long long conjugacy_count(const ClassEquationSolution& solution);

}  // namespace starfree

#endif  // STARFREE_CLASS_EQUATION_HPP
