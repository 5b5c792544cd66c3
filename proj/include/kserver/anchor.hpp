#pragma once

#include <vector>

#include "kserver/metric.hpp"

namespace kserver {

// Round-robin request block over the initial configuration that drives both
// the optimum and a competitive lazy algorithm back to A0.
struct AnchorSpec {
  Cost ell = 0;    // min pairwise distance inside A0
  Cost m = 0;      // number of round-robin cycles
  Cost alpha = 0;  // assumed competitive ratio
  Cost beta = 0;   // assumed additive constant for A0
  Cost opt = 0;    // OPT(A0, rho) the cycle count was derived from
  std::vector<Point> sigma;
};

// Cycle count
//   m = ceil( max( 2k*opt/ell + k^2, (2*alpha*opt + beta)/ell ) ) + 1
// in exact integer arithmetic. Guarantees m*ell > 2*alpha*opt + beta and
// m*ell > 2k*opt + k^2*ell.
Cost anchor_cycle_count(int k, Cost opt, Cost ell, Cost alpha, Cost beta);

// A0 in ascending order, repeated m times.
std::vector<Point> round_robin(const Configuration& a0, Cost m);

// Computes OPT(A0, rho) with the work-function DP and builds the anchor.
// Throws InputError when k < 2 or alpha < 1 or beta < 0.
AnchorSpec compute_anchor(const Instance& instance, Cost alpha, Cost beta);

// Same, with OPT(A0, rho) already known.
AnchorSpec compute_anchor(const Instance& instance, Cost alpha, Cost beta, Cost opt);

// (rho sigma)^q.
std::vector<Point> build_chi(const std::vector<Point>& rho, const std::vector<Point>& sigma, int q);

}  // namespace kserver
