#pragma once

#include <optional>
#include <vector>

#include "kserver/trace.hpp"
#include "kserver/workfunction.hpp"

namespace kserver {

// OPT(A0, rho): the minimum entry of the work vector.
Cost opt_cost(const WorkVector& w);

// OPT(A0, rho, X) = w(X).
Cost opt_cost_to(const WorkVector& w, const Configuration& x);

// Configuration of smallest rank among the minimizers of w.
Configuration opt_final_configuration(const WorkVector& w);

// An X-lazy execution whose cost equals w_rho(X). `history` must be
// work_vector_history(instance). When `target` is absent the smallest-rank
// minimizer of the final vector is used.
//
// Extraction runs in two passes. Backtracking from X through the stored
// vectors picks, per round t, the point z minimizing
// w_{t-1}(Z - z + r_t) + dist(r_t, z) (smallest id on ties), which yields a
// non-lazy execution of cost w(X) that serves r_t and then moves that
// server on to z. The lazy pass then replays it, moving a server only when
// a request is uncovered (the one whose planned position sits on the
// request), and settles the remaining difference to X in the last round.
ExecutionTrace opt_trace(const Instance& instance, const std::vector<WorkVector>& history,
                         std::optional<Configuration> target = std::nullopt);

ExecutionTrace opt_trace(const Instance& instance,
                         std::optional<Configuration> target = std::nullopt);

}  // namespace kserver
