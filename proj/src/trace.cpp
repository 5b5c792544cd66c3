#include "kserver/trace.hpp"

namespace kserver {

std::vector<std::string> trace_violations(const Instance& instance, const ExecutionTrace& trace,
                                          Discipline discipline, const Configuration* target) {
  std::vector<std::string> problems;
  auto report = [&](std::size_t t, const std::string& what) {
    problems.push_back("round " + std::to_string(t + 1) + ": " + what);
  };
  if (trace.initial != instance.initial) problems.push_back("trace does not start in A0");
  if (trace.rounds.size() != instance.requests.size()) {
    problems.push_back("trace has " + std::to_string(trace.rounds.size()) + " rounds for " +
                       std::to_string(instance.requests.size()) + " requests");
    return problems;
  }

  std::uint32_t mask = trace.initial.mask();
  Cost total = 0;
  for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
    const Round& round = trace.rounds[t];
    const bool last = t + 1 == trace.rounds.size();
    const bool may_relocate = discipline == Discipline::kXLazy && last;
    if (round.request != instance.requests[t]) report(t, "request mismatch");

    int forced = 0;
    bool served = ((mask >> round.request) & 1u) != 0;
    for (const Move& m : round.moves) {
      total += m.cost;
      if (!instance.metric.contains(m.from) || !instance.metric.contains(m.to)) {
        report(t, "move leaves the metric");
        continue;
      }
      if (m.cost != instance.metric(m.from, m.to)) report(t, "move cost does not match distance");
      if (((mask >> m.from) & 1u) == 0) report(t, "move starts at unoccupied node " + std::to_string(m.from));
      if (m.empty()) {
        if (m.to != round.request) report(t, "empty move away from the request");
        continue;
      }
      if (((mask >> m.to) & 1u) != 0) report(t, "move onto occupied node " + std::to_string(m.to));
      mask = (mask & ~(1u << m.from)) | (1u << m.to);
      if (m.to == round.request) {
        ++forced;
        served = true;
      } else if (!may_relocate) {
        report(t, "unforced move " + std::to_string(m.from) + "->" + std::to_string(m.to));
      } else if (!served) {
        report(t, "relocation before the request is served");
      } else if (target != nullptr && (target->contains(m.from) || !target->contains(m.to))) {
        report(t, "relocation must go from outside the target into it");
      }
    }
    if (forced > 1) report(t, "more than one forced move");
    if (!served) report(t, "request not served in the round");
    // Only the final relocation of an X-lazy trace may uncover the request.
    if (!may_relocate && ((mask >> round.request) & 1u) == 0) {
      report(t, "request not covered after the round");
    }
    if (round.after.mask() != mask) report(t, "recorded configuration differs from replayed moves");
  }
  if (total != trace.total_cost) {
    problems.push_back("total cost " + std::to_string(trace.total_cost) + " but moves sum to " +
                       std::to_string(total));
  }
  if (target != nullptr && !trace.rounds.empty() && trace.final_configuration() != *target) {
    problems.push_back("trace ends in " + trace.final_configuration().to_string() + ", not " +
                       target->to_string());
  }
  return problems;
}

}  // namespace kserver
