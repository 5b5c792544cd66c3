#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kserver/types.hpp"

namespace kserver {

class Rng;

inline constexpr int kMaxPoints = 16;

enum class Axiom { kZeroDiagonal, kSymmetry, kPositivity, kTriangle };

const char* axiom_name(Axiom axiom);

// One failed metric axiom. For kTriangle, (i, j) is the violated pair and
// `via` the intermediate point; for the other axioms `via` is -1.
struct AxiomViolation {
  Axiom axiom;
  int i = 0;
  int j = 0;
  int via = -1;

  std::string describe() const;
  bool operator==(const AxiomViolation&) const = default;
};

struct MetricValidation {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the metric axioms on a square matrix of nonnegative entries.
// Throws InputError for structural problems (ragged/non-square/negative).
MetricValidation validate_metric(const std::vector<std::vector<Cost>>& dist);

// Finite metric space over points 0..n-1 with exact integer distances.
// Immutable; the constructor rejects anything validate_metric would flag.
class MetricSpace {
 public:
  explicit MetricSpace(std::vector<std::vector<Cost>> dist,
                       std::vector<std::string> labels = {});

  int size() const { return n_; }
  Cost operator()(Point a, Point b) const { return dist_[static_cast<std::size_t>(a * n_ + b)]; }
  bool contains(Point p) const { return p >= 0 && p < n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::vector<std::vector<Cost>> matrix() const;

  bool operator==(const MetricSpace&) const = default;

 private:
  int n_ = 0;
  std::vector<Cost> dist_;
  std::vector<std::string> labels_;
};

// All off-diagonal distances equal to `weight`.
MetricSpace uniform_metric(int n, Cost weight = 1);

// Complete graph with i.i.d. edge weights uniform in [lo, hi], closed under
// shortest paths (Floyd-Warshall). Edges (i, j), i < j, are drawn in
// row-major order from the given generator.
MetricSpace random_metric(int n, Rng& rng, std::pair<Cost, Cost> weight_range);
MetricSpace random_metric(int n, std::uint64_t seed, std::pair<Cost, Cost> weight_range);

// k distinct points in canonical (strictly increasing) order.
class Configuration {
 public:
  Configuration() = default;
  // Sorts the input; throws InputError on duplicates or negative ids.
  explicit Configuration(std::vector<Point> points);
  Configuration(std::initializer_list<Point> points)
      : Configuration(std::vector<Point>(points)) {}

  static Configuration from_mask(std::uint32_t mask);

  int size() const { return static_cast<int>(points_.size()); }
  std::span<const Point> points() const { return points_; }
  Point operator[](std::size_t i) const { return points_[i]; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }
  std::uint32_t mask() const { return mask_; }
  bool contains(Point p) const { return p >= 0 && p < 32 && ((mask_ >> p) & 1u) != 0; }

  // (this \ {remove}) U {add}; `remove` must be a member and `add` must not be.
  Configuration replace(Point remove, Point add) const;

  std::string to_string() const;

  bool operator==(const Configuration& other) const { return points_ == other.points_; }
  auto operator<=>(const Configuration& other) const { return points_ <=> other.points_; }

 private:
  std::vector<Point> points_;
  std::uint32_t mask_ = 0;
};

// Throws InputError unless every point of `c` lies in `metric`.
void require_in_metric(const Configuration& c, const MetricSpace& metric);

// Weight of a minimum-weight perfect matching between X and Y.
Cost configuration_distance(const Configuration& x, const Configuration& y,
                            const MetricSpace& metric);

// Minimum distance between two distinct points of A0. Requires |A0| >= 2.
Cost min_pairwise_distance(const Configuration& a0, const MetricSpace& metric);

struct Instance {
  MetricSpace metric;
  int k = 0;
  Configuration initial;
  std::vector<Point> requests;

  // Throws InputError naming the first violated invariant.
  void validate() const;
};

}  // namespace kserver
