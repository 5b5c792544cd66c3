#include "kserver/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace kserver {

Assignment assignment_by_permutation(const CostMatrix& costs) {
  const int k = costs.size;
  std::vector<int> perm(static_cast<std::size_t>(k));
  std::iota(perm.begin(), perm.end(), 0);
  Assignment best{std::numeric_limits<Cost>::max(), perm};
  do {
    Cost total = 0;
    for (int i = 0; i < k; ++i) total += costs.at(i, perm[static_cast<std::size_t>(i)]);
    if (total < best.cost) best = {total, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (k == 0) best.cost = 0;
  return best;
}

// Shortest augmenting path formulation with row/column potentials. Indices
// are 1-based internally; index 0 is the virtual source column.
Assignment assignment_by_hungarian(const CostMatrix& costs) {
  const int k = costs.size;
  constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;
  const auto sz = static_cast<std::size_t>(k + 1);
  std::vector<Cost> u(sz, 0), v(sz, 0);
  std::vector<int> row_of_col(sz, 0), way(sz, 0);

  for (int row = 1; row <= k; ++row) {
    row_of_col[0] = row;
    int col0 = 0;
    std::vector<Cost> minv(sz, kInf);
    std::vector<char> used(sz, 0);
    do {
      used[static_cast<std::size_t>(col0)] = 1;
      const int row0 = row_of_col[static_cast<std::size_t>(col0)];
      Cost delta = kInf;
      int col1 = 0;
      for (int col = 1; col <= k; ++col) {
        const auto c = static_cast<std::size_t>(col);
        if (used[c]) continue;
        const Cost reduced = costs.at(row0 - 1, col - 1) - u[static_cast<std::size_t>(row0)] - v[c];
        if (reduced < minv[c]) {
          minv[c] = reduced;
          way[c] = col0;
        }
        if (minv[c] < delta) {
          delta = minv[c];
          col1 = col;
        }
      }
      for (int col = 0; col <= k; ++col) {
        const auto c = static_cast<std::size_t>(col);
        if (used[c]) {
          u[static_cast<std::size_t>(row_of_col[c])] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      col0 = col1;
    } while (row_of_col[static_cast<std::size_t>(col0)] != 0);
    do {
      const int col1 = way[static_cast<std::size_t>(col0)];
      row_of_col[static_cast<std::size_t>(col0)] = row_of_col[static_cast<std::size_t>(col1)];
      col0 = col1;
    } while (col0 != 0);
  }

  Assignment result;
  result.column.assign(static_cast<std::size_t>(k), 0);
  for (int col = 1; col <= k; ++col) {
    const int row = row_of_col[static_cast<std::size_t>(col)];
    result.column[static_cast<std::size_t>(row - 1)] = col - 1;
  }
  for (int row = 0; row < k; ++row) {
    result.cost += costs.at(row, result.column[static_cast<std::size_t>(row)]);
  }
  return result;
}

Assignment min_cost_assignment(const CostMatrix& costs) {
  if (costs.size <= kPermutationMatchingLimit) return assignment_by_permutation(costs);
  return assignment_by_hungarian(costs);
}

Assignment match_configurations(const Configuration& from, const Configuration& to,
                                const MetricSpace& metric) {
  if (from.size() != to.size()) {
    throw InputError("configuration sizes differ: " + std::to_string(from.size()) + " vs " +
                     std::to_string(to.size()));
  }
  require_in_metric(from, metric);
  require_in_metric(to, metric);
  CostMatrix costs{from.size(), {}};
  costs.entries.reserve(static_cast<std::size_t>(from.size() * from.size()));
  for (Point a : from) {
    for (Point b : to) costs.entries.push_back(metric(a, b));
  }
  return min_cost_assignment(costs);
}

Cost configuration_distance(const Configuration& x, const Configuration& y,
                            const MetricSpace& metric) {
  return match_configurations(x, y, metric).cost;
}

}  // namespace kserver
