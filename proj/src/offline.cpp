#include "kserver/offline.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "kserver/matching.hpp"

namespace kserver {

Cost opt_cost(const WorkVector& w) {
  return *std::min_element(w.values().begin(), w.values().end());
}

Cost opt_cost_to(const WorkVector& w, const Configuration& x) { return w(x); }

Configuration opt_final_configuration(const WorkVector& w) {
  const auto& v = w.values();
  const auto it = std::min_element(v.begin(), v.end());
  return w.space().at(static_cast<std::size_t>(it - v.begin()));
}

namespace {

// Per-round plan from the backtracking pass: after serving requests[t] the
// planned configuration moves the server on the request to via[t].
struct Plan {
  Configuration first;     // planned configuration while serving request 1
  std::vector<Point> via;  // z_t per round
};

Plan backtrack(const Instance& instance, const std::vector<WorkVector>& history,
               const Configuration& target) {
  const MetricSpace& metric = instance.metric;
  const auto rounds = instance.requests.size();
  Plan plan{target, std::vector<Point>(rounds)};
  std::uint32_t z_mask = target.mask();
  for (std::size_t t = rounds; t-- > 0;) {
    const Point r = instance.requests[t];
    const WorkVector& before = history[t];
    const std::uint32_t rbit = 1u << r;
    if (z_mask & rbit) {
      plan.via[t] = r;
      continue;
    }
    Point best_z = -1;
    Cost best = std::numeric_limits<Cost>::max();
    for (std::uint32_t rest = z_mask; rest != 0; rest &= rest - 1) {
      const auto z = static_cast<Point>(__builtin_ctz(rest));
      const Cost candidate = before.at_mask((z_mask & ~(1u << z)) | rbit) + metric(r, z);
      if (candidate < best) {
        best = candidate;
        best_z = z;
      }
    }
    if (best != history[t + 1].at_mask(z_mask)) {
      throw std::logic_error("backtracking disagrees with the stored work vector");
    }
    plan.via[t] = best_z;
    z_mask = (z_mask & ~(1u << best_z)) | rbit;
  }
  plan.first = Configuration::from_mask(z_mask);
  return plan;
}

std::vector<Move> relocate(const Configuration& from, const Configuration& to,
                           const MetricSpace& metric) {
  std::vector<Point> leaving, arriving;
  for (Point p : from) {
    if (!to.contains(p)) leaving.push_back(p);
  }
  for (Point p : to) {
    if (!from.contains(p)) arriving.push_back(p);
  }
  std::vector<Move> moves;
  if (leaving.empty()) return moves;
  const Assignment a =
      match_configurations(Configuration(leaving), Configuration(arriving), metric);
  for (std::size_t i = 0; i < leaving.size(); ++i) {
    const Point dst = arriving[static_cast<std::size_t>(a.column[i])];
    moves.push_back({leaving[i], dst, metric(leaving[i], dst)});
  }
  return moves;
}

}  // namespace

ExecutionTrace opt_trace(const Instance& instance, const std::vector<WorkVector>& history,
                         std::optional<Configuration> target) {
  instance.validate();
  if (history.size() != instance.requests.size() + 1) {
    throw InputError("work vector history does not match the request sequence");
  }
  const MetricSpace& metric = instance.metric;
  const Configuration goal = target ? *target : opt_final_configuration(history.back());
  history.back().space().rank_of(goal);

  ExecutionTrace trace{instance.initial, {}, 0};
  if (instance.requests.empty()) {
    if (goal != instance.initial) {
      throw InputError("an empty request sequence cannot end in " + goal.to_string());
    }
    return trace;
  }

  const Plan plan = backtrack(instance, history, goal);

  // planned[i] / actual[i]: where server i is in the non-lazy plan and in
  // the lazy execution. Server i starts at initial[i].
  const auto k = static_cast<std::size_t>(instance.k);
  std::vector<Point> actual(instance.initial.begin(), instance.initial.end());
  std::vector<Point> planned(k);
  const Assignment start = match_configurations(instance.initial, plan.first, metric);
  for (std::size_t i = 0; i < k; ++i) planned[i] = plan.first[static_cast<std::size_t>(start.column[i])];

  Configuration current = instance.initial;
  trace.rounds.reserve(instance.requests.size());
  for (std::size_t t = 0; t < instance.requests.size(); ++t) {
    const Point r = instance.requests[t];
    const auto owner = static_cast<std::size_t>(
        std::find(planned.begin(), planned.end(), r) - planned.begin());
    Round round{r, {}, {}};
    if (current.contains(r)) {
      round.moves.push_back({r, r, 0});
    } else {
      const Move m{actual[owner], r, metric(actual[owner], r)};
      round.moves.push_back(m);
      current = current.replace(m.from, r);
      actual[owner] = r;
    }
    planned[owner] = plan.via[t];

    if (t + 1 == instance.requests.size()) {
      for (const Move& m : relocate(current, goal, metric)) round.moves.push_back(m);
      current = goal;
    }
    for (const Move& m : round.moves) trace.total_cost += m.cost;
    round.after = current;
    trace.rounds.push_back(std::move(round));
  }

  if (trace.total_cost != history.back()(goal)) {
    throw std::logic_error("extracted execution costs " + std::to_string(trace.total_cost) +
                           " but the work function is " + std::to_string(history.back()(goal)));
  }
  return trace;
}

ExecutionTrace opt_trace(const Instance& instance, std::optional<Configuration> target) {
  return opt_trace(instance, work_vector_history(instance), std::move(target));
}

}  // namespace kserver
