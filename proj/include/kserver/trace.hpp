#pragma once

#include <string>
#include <vector>

#include "kserver/metric.hpp"

namespace kserver {

struct Move {
  Point from = 0;
  Point to = 0;
  Cost cost = 0;

  bool empty() const { return from == to; }
  bool operator==(const Move&) const = default;
};

struct Round {
  Point request = 0;
  std::vector<Move> moves;
  Configuration after;

  bool operator==(const Round&) const = default;
};

// Execution of a k-server algorithm: the configuration it starts from, one
// record per request, and the summed movement cost.
struct ExecutionTrace {
  Configuration initial;
  std::vector<Round> rounds;
  Cost total_cost = 0;

  // Configuration at the end of round t (t = 0 is the initial configuration).
  const Configuration& configuration_after(std::size_t t) const {
    return t == 0 ? initial : rounds[t - 1].after;
  }
  const Configuration& final_configuration() const { return configuration_after(rounds.size()); }
};

enum class Discipline {
  kLazy,   // every move is forced: at most one nonempty move per round, ending on the request
  kXLazy,  // lazy, except the last round may also relocate servers into the target
};

// Checks the service invariant, cost bookkeeping, position consistency and
// the move discipline. Returns one message per problem found.
std::vector<std::string> trace_violations(const Instance& instance, const ExecutionTrace& trace,
                                          Discipline discipline,
                                          const Configuration* target = nullptr);

}  // namespace kserver
