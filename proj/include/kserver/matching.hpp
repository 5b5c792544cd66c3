#pragma once

#include <vector>

#include "kserver/metric.hpp"

namespace kserver {

// Square cost matrix stored row-major; rows are "left" items, columns "right".
struct CostMatrix {
  int size = 0;
  std::vector<Cost> entries;

  Cost at(int row, int col) const { return entries[static_cast<std::size_t>(row * size + col)]; }
};

// A perfect matching: column[i] is the right item assigned to left item i.
struct Assignment {
  Cost cost = 0;
  std::vector<int> column;
};

// Exhaustive search over all size! permutations; the first optimum in
// lexicographic permutation order wins.
Assignment assignment_by_permutation(const CostMatrix& costs);

// Hungarian method with potentials, O(size^3).
Assignment assignment_by_hungarian(const CostMatrix& costs);

// Permutation search up to this size, Hungarian above.
inline constexpr int kPermutationMatchingLimit = 6;

Assignment min_cost_assignment(const CostMatrix& costs);

// Minimum-weight matching between two equal-size configurations. column[i]
// indexes into `to`, pairing from[i] with to[column[i]].
Assignment match_configurations(const Configuration& from, const Configuration& to,
                                const MetricSpace& metric);

}  // namespace kserver
