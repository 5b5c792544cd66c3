#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "kserver/configuration_space.hpp"
#include "kserver/metric.hpp"
#include "kserver/trace.hpp"

namespace kserver {

// Work function values over every k-configuration, for a fixed initial
// configuration and the requests folded in so far. Immutable value type;
// entries are stored densely in configuration-rank order.
class WorkVector {
 public:
  WorkVector(std::shared_ptr<const ConfigurationSpace> space, Configuration origin,
             std::vector<Cost> values, std::size_t served_count);

  const ConfigurationSpace& space() const { return *space_; }
  const std::shared_ptr<const ConfigurationSpace>& space_ptr() const { return space_; }
  const MetricSpace& metric() const { return space_->metric(); }
  const Configuration& origin() const { return origin_; }
  std::size_t served_count() const { return served_count_; }

  std::size_t size() const { return values_.size(); }
  const std::vector<Cost>& values() const { return values_; }
  Cost at_rank(std::size_t rank) const { return values_[rank]; }
  Cost at_mask(std::uint32_t mask) const { return values_[space_->rank_of_mask(mask)]; }
  Cost operator()(const Configuration& x) const { return values_[space_->rank_of(x)]; }

  // Pointwise +d. Used to probe translation invariance.
  WorkVector shifted(Cost d) const;

  bool same_domain(const WorkVector& other) const;
  bool operator==(const WorkVector& other) const;

 private:
  std::shared_ptr<const ConfigurationSpace> space_;
  Configuration origin_;
  std::vector<Cost> values_;
  std::size_t served_count_;
};

// w(X) = D(A0, X) for every configuration X.
WorkVector initial_work_vector(std::shared_ptr<const ConfigurationSpace> space,
                               const Configuration& origin);
WorkVector initial_work_vector(const MetricSpace& metric, const Configuration& origin);

// Folds one request into the work vector:
//   w'(X) = w(X)                                   if r in X
//   w'(X) = min_{z in X} w(X - z + r) + dist(r, z)  otherwise
WorkVector update_work_vector(const WorkVector& w, Point request);

struct WfaDecision {
  Point from = 0;  // server position that moves; equals the request for an empty move
  Point to = 0;
  Cost cost = 0;
  Configuration next;
};

// Candidate score for moving the server at `from` to serve `request`:
// w(X - from + r) + dist(from, r).
Cost wfa_score(const WorkVector& w, const Configuration& current, Point from, Point request);

// Work Function Algorithm rule, evaluated on the work vector *before* the
// request is folded in. Covered requests get the empty move; otherwise the
// minimizing server moves, ties going to the smallest point id.
WfaDecision wfa_decide(const WorkVector& w, const Configuration& current, Point request);

// Returns d when a(X) - b(X) == d for every X, nullopt otherwise.
// Throws InputError when the vectors live on different spaces.
std::optional<Cost> d_equivalence(const WorkVector& a, const WorkVector& b);

// Runs WFA over the instance. Each round records exactly one move (the empty
// move when the request is already covered).
ExecutionTrace run_wfa(const Instance& instance);

// Work vectors after 0, 1, ..., |requests| requests (size |requests| + 1).
std::vector<WorkVector> work_vector_history(const Instance& instance);

// Only the final vector; memory stays at two vectors regardless of length.
WorkVector final_work_vector(const Instance& instance);

}  // namespace kserver
