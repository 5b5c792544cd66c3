#include "kserver/workfunction.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "kserver/matching.hpp"

namespace kserver {

WorkVector::WorkVector(std::shared_ptr<const ConfigurationSpace> space, Configuration origin,
                       std::vector<Cost> values, std::size_t served_count)
    : space_(std::move(space)),
      origin_(std::move(origin)),
      values_(std::move(values)),
      served_count_(served_count) {
  if (!space_) throw InputError("work vector needs a configuration space");
  if (values_.size() != space_->size()) {
    throw InputError("work vector has " + std::to_string(values_.size()) + " entries, expected " +
                     std::to_string(space_->size()));
  }
  space_->rank_of(origin_);
}

WorkVector WorkVector::shifted(Cost d) const {
  std::vector<Cost> out = values_;
  for (Cost& v : out) v += d;
  return WorkVector(space_, origin_, std::move(out), served_count_);
}

bool WorkVector::same_domain(const WorkVector& other) const {
  return space_ == other.space_ || *space_ == *other.space_;
}

bool WorkVector::operator==(const WorkVector& other) const {
  return same_domain(other) && values_ == other.values_ && origin_ == other.origin_ &&
         served_count_ == other.served_count_;
}

WorkVector initial_work_vector(std::shared_ptr<const ConfigurationSpace> space,
                               const Configuration& origin) {
  space->rank_of(origin);
  std::vector<Cost> values(space->size());
  for (std::size_t r = 0; r < space->size(); ++r) {
    values[r] = configuration_distance(origin, space->at(r), space->metric());
  }
  return WorkVector(std::move(space), origin, std::move(values), 0);
}

WorkVector initial_work_vector(const MetricSpace& metric, const Configuration& origin) {
  return initial_work_vector(ConfigurationSpace::make(metric, origin.size()), origin);
}

WorkVector update_work_vector(const WorkVector& w, Point request) {
  const ConfigurationSpace& space = w.space();
  const MetricSpace& metric = space.metric();
  if (!metric.contains(request)) {
    throw InputError("request " + std::to_string(request) + " outside metric");
  }
  const std::uint32_t rbit = 1u << request;
  std::vector<Cost> out(space.size());
  for (std::size_t rank = 0; rank < space.size(); ++rank) {
    const std::uint32_t mask = space.mask_at(rank);
    if (mask & rbit) {
      out[rank] = w.at_rank(rank);
      continue;
    }
    Cost best = std::numeric_limits<Cost>::max();
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
      const auto z = static_cast<Point>(std::countr_zero(rest));
      const Cost candidate = w.at_mask((mask & ~(1u << z)) | rbit) + metric(request, z);
      best = std::min(best, candidate);
    }
    out[rank] = best;
  }
  return WorkVector(w.space_ptr(), w.origin(), std::move(out), w.served_count() + 1);
}

Cost wfa_score(const WorkVector& w, const Configuration& current, Point from, Point request) {
  const std::uint32_t mask = (current.mask() & ~(1u << from)) | (1u << request);
  return w.at_mask(mask) + w.metric()(from, request);
}

WfaDecision wfa_decide(const WorkVector& w, const Configuration& current, Point request) {
  w.space().rank_of(current);
  if (!w.metric().contains(request)) {
    throw InputError("request " + std::to_string(request) + " outside metric");
  }
  if (current.contains(request)) return {request, request, 0, current};

  // Points iterate in increasing order, so strict < keeps the smallest id on ties.
  Point best_from = current[0];
  Cost best_score = std::numeric_limits<Cost>::max();
  for (Point x : current) {
    const Cost score = wfa_score(w, current, x, request);
    if (score < best_score) {
      best_score = score;
      best_from = x;
    }
  }
  return {best_from, request, w.metric()(best_from, request), current.replace(best_from, request)};
}

std::optional<Cost> d_equivalence(const WorkVector& a, const WorkVector& b) {
  if (!a.same_domain(b)) throw InputError("d_equivalence: work vectors over different domains");
  if (a.size() == 0) return Cost{0};
  const Cost d = a.at_rank(0) - b.at_rank(0);
  for (std::size_t r = 1; r < a.size(); ++r) {
    if (a.at_rank(r) - b.at_rank(r) != d) return std::nullopt;
  }
  return d;
}

namespace {

std::shared_ptr<const ConfigurationSpace> space_for(const Instance& instance) {
  instance.validate();
  return ConfigurationSpace::make(instance.metric, instance.k);
}

}  // namespace

ExecutionTrace run_wfa(const Instance& instance) {
  auto space = space_for(instance);
  WorkVector w = initial_work_vector(space, instance.initial);
  ExecutionTrace trace{instance.initial, {}, 0};
  trace.rounds.reserve(instance.requests.size());
  Configuration current = instance.initial;
  for (Point r : instance.requests) {
    WfaDecision decision = wfa_decide(w, current, r);
    trace.total_cost += decision.cost;
    current = decision.next;
    trace.rounds.push_back({r, {{decision.from, decision.to, decision.cost}}, current});
    w = update_work_vector(w, r);
  }
  return trace;
}

std::vector<WorkVector> work_vector_history(const Instance& instance) {
  auto space = space_for(instance);
  std::vector<WorkVector> history;
  history.reserve(instance.requests.size() + 1);
  history.push_back(initial_work_vector(space, instance.initial));
  for (Point r : instance.requests) history.push_back(update_work_vector(history.back(), r));
  return history;
}

WorkVector final_work_vector(const Instance& instance) {
  auto space = space_for(instance);
  WorkVector w = initial_work_vector(space, instance.initial);
  for (Point r : instance.requests) w = update_work_vector(w, r);
  return w;
}

}  // namespace kserver
