#include <gtest/gtest.h>

#include "kserver/anchor.hpp"
#include "kserver/matching.hpp"
#include "kserver/oracle.hpp"
#include "kserver/workfunction.hpp"
#include "test_support.hpp"

namespace kserver {
namespace {

using testing::m3;
using testing::m3_instance;
using testing::random_instance;

TEST(InitialWorkVector, M3Values) {
  const WorkVector w = initial_work_vector(m3(), {0, 1});
  EXPECT_EQ(w({0, 1}), 0);
  EXPECT_EQ(w({0, 2}), 2);
  EXPECT_EQ(w({1, 2}), 3);
  EXPECT_EQ(w.served_count(), 0u);
}

TEST(InitialWorkVector, EqualsDistanceFromOrigin) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = random_instance(rng, 7, 1 + trial % 4, 0);
    const WorkVector w = initial_work_vector(inst.metric, inst.initial);
    for (std::size_t r = 0; r < w.size(); ++r) {
      EXPECT_EQ(w.at_rank(r), configuration_distance(inst.initial, w.space().at(r), inst.metric));
    }
    EXPECT_EQ(w(inst.initial), 0);
  }
}

TEST(UpdateWorkVector, M3RequestAtTwo) {
  const WorkVector w0 = initial_work_vector(m3(), {0, 1});
  const WorkVector w1 = update_work_vector(w0, 2);
  EXPECT_EQ(w1({0, 2}), 2);
  EXPECT_EQ(w1({1, 2}), 3);
  EXPECT_EQ(w1({0, 1}), 4);
  EXPECT_EQ(w1.served_count(), 1u);
  // The input is untouched.
  EXPECT_EQ(w0({0, 1}), 0);
  // Same numbers from the schedule-enumerating oracle.
  for (const Configuration& x : {Configuration{0, 1}, Configuration{0, 2}, Configuration{1, 2}}) {
    EXPECT_EQ(w1(x), oracle_opt(m3_instance({2}), x));
  }
}

TEST(UpdateWorkVector, M3CoveredRequest) {
  const WorkVector w0 = initial_work_vector(m3(), {0, 1});
  const WorkVector w1 = update_work_vector(w0, 0);
  EXPECT_EQ(w1({1, 2}), 3);
  EXPECT_EQ(w1({1, 2}), w0({1, 2}));
  EXPECT_EQ(w1({1, 2}), oracle_opt(m3_instance({0}), Configuration{1, 2}));
}

TEST(UpdateWorkVector, RejectsOutOfRangeRequest) {
  const WorkVector w0 = initial_work_vector(m3(), {0, 1});
  EXPECT_THROW(update_work_vector(w0, 3), InputError);
}

TEST(UpdateWorkVector, MatchesOracleOnSmallInstances) {
  Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_below(4));
    const int k = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(std::min(3, n))));
    const Instance inst = random_instance(rng, n, k, rng.uniform_below(7));
    const WorkVector w = final_work_vector(inst);
    const BruteForceOracle oracle(inst);
    for (std::size_t r = 0; r < w.size(); ++r) {
      ASSERT_EQ(w.at_rank(r), oracle.opt_to(w.space().at(r))) << "trial " << trial;
    }
  }
}

// Monotone, Lipschitz and stable on configurations holding the request,
// checked after every round of random histories.
TEST(UpdateWorkVector, PreservesWorkVectorInvariants) {
  Rng rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform_below(5));
    const int k = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(std::min(4, n - 1))));
    const Instance inst = random_instance(rng, n, k, 10);
    const auto history = work_vector_history(inst);
    const ConfigurationSpace& space = history[0].space();
    for (std::size_t t = 1; t < history.size(); ++t) {
      const Point r = inst.requests[t - 1];
      for (std::size_t a = 0; a < space.size(); ++a) {
        const Cost now = history[t].at_rank(a);
        ASSERT_GE(now, history[t - 1].at_rank(a));
        ASSERT_GE(now, 0);
        if (space.at(a).contains(r)) ASSERT_EQ(now, history[t - 1].at_rank(a));
        for (std::size_t b = a + 1; b < space.size(); ++b) {
          const Cost gap = std::abs(now - history[t].at_rank(b));
          ASSERT_LE(gap, configuration_distance(space.at(a), space.at(b), inst.metric));
        }
      }
    }
  }
}

TEST(WfaDecide, CoveredRequestIsTheEmptyMove) {
  const WorkVector w = initial_work_vector(m3(), {0, 1});
  const WfaDecision d = wfa_decide(w, {0, 1}, 1);
  EXPECT_EQ(d.from, 1);
  EXPECT_EQ(d.to, 1);
  EXPECT_EQ(d.cost, 0);
  EXPECT_EQ(d.next, (Configuration{0, 1}));
}

TEST(WfaDecide, M3PicksServerAtOne) {
  const WorkVector w = initial_work_vector(m3(), {0, 1});
  EXPECT_EQ(wfa_score(w, {0, 1}, 0, 2), 6);
  EXPECT_EQ(wfa_score(w, {0, 1}, 1, 2), 4);
  const WfaDecision d = wfa_decide(w, {0, 1}, 2);
  EXPECT_EQ(d.from, 1);
  EXPECT_EQ(d.cost, 2);
  EXPECT_EQ(d.next, (Configuration{0, 2}));
}

TEST(WfaDecide, TiesGoToSmallestPoint) {
  const WorkVector w = initial_work_vector(uniform_metric(3), {0, 1});
  EXPECT_EQ(wfa_score(w, {0, 1}, 0, 2), 2);
  EXPECT_EQ(wfa_score(w, {0, 1}, 1, 2), 2);
  EXPECT_EQ(wfa_decide(w, {0, 1}, 2).from, 0);
}

TEST(RunWfa, Examples) {
  const ExecutionTrace empty = run_wfa(m3_instance());
  EXPECT_EQ(empty.total_cost, 0);
  EXPECT_EQ(empty.final_configuration(), (Configuration{0, 1}));

  const ExecutionTrace one = run_wfa(m3_instance({2}));
  EXPECT_EQ(one.total_cost, 2);
  EXPECT_EQ(one.final_configuration(), (Configuration{0, 2}));

  const ExecutionTrace two = run_wfa(m3_instance({2, 0}));
  EXPECT_EQ(two.total_cost, 2);
  ASSERT_EQ(two.rounds.size(), 2u);
  EXPECT_EQ(two.rounds[1].moves, (std::vector<Move>{{0, 0, 0}}));
}

TEST(RunWfa, TracesAreLazy) {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance inst = random_instance(rng, 6, 1 + trial % 4, 15);
    const ExecutionTrace trace = run_wfa(inst);
    EXPECT_TRUE(trace_violations(inst, trace, Discipline::kLazy).empty());
    for (const Round& round : trace.rounds) EXPECT_EQ(round.moves.size(), 1u);
  }
}

TEST(DEquivalence, Examples) {
  const WorkVector w = final_work_vector(m3_instance({2, 1}));
  EXPECT_EQ(d_equivalence(w, w), Cost{0});
  EXPECT_EQ(d_equivalence(w.shifted(5), w), Cost{5});
  EXPECT_EQ(d_equivalence(w, w.shifted(5)), Cost{-5});
  EXPECT_EQ(d_equivalence(w, initial_work_vector(m3(), {0, 1})), std::nullopt);
  EXPECT_THROW(d_equivalence(w, initial_work_vector(uniform_metric(3), {0, 1})), InputError);
}

TEST(DEquivalence, AnchoredM3IsShiftOfEmptyHistory) {
  const Instance inst = m3_instance({2});
  const AnchorSpec anchor = compute_anchor(inst, 3, 0);
  std::vector<Point> rho_sigma{2};
  rho_sigma.insert(rho_sigma.end(), anchor.sigma.begin(), anchor.sigma.end());
  const WorkVector w_rs = final_work_vector(m3_instance(rho_sigma));
  const WorkVector w_empty = initial_work_vector(m3(), {0, 1});
  const auto d = d_equivalence(w_rs, w_empty);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, w_rs({0, 1}));
  EXPECT_EQ(*d, 4);
}

// Robustness: translation invariance of decisions and preservation of
// d-equivalence under updates, on true work vectors from random histories.
TEST(Robustness, TranslationInvarianceAndDEquivalence) {
  Rng rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng.uniform_below(5));
    const int k = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - 1)));
    const Instance inst = random_instance(rng, n, k, rng.uniform_below(10));
    const WorkVector w = final_work_vector(inst);
    const Configuration x = w.space().at(rng.uniform_below(w.size()));
    const auto r = static_cast<Point>(rng.uniform_below(static_cast<std::uint64_t>(n)));
    const WfaDecision base = wfa_decide(w, x, r);
    for (Cost d : {Cost{1}, Cost{1000}, Cost{1'000'000'000}}) {
      const WorkVector shifted = w.shifted(d);
      const WfaDecision moved = wfa_decide(shifted, x, r);
      ASSERT_EQ(moved.from, base.from);
      ASSERT_EQ(moved.next, base.next);
      for (Point p : x) {
        if (!x.contains(r)) ASSERT_EQ(wfa_score(shifted, x, p, r), wfa_score(w, x, p, r) + d);
      }
      ASSERT_EQ(d_equivalence(update_work_vector(shifted, r), update_work_vector(w, r)), d);
    }
  }
}

// Two different histories with d-equivalent work vectors drive identical
// decisions: the vector after rho sigma versus the one for the empty history.
TEST(Robustness, RequestSequenceOblivious) {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = random_instance(rng, 5, 2 + trial % 2, 6);
    const AnchorSpec anchor = compute_anchor(inst, 2 * inst.k - 1, 0);
    std::vector<Point> rs = inst.requests;
    rs.insert(rs.end(), anchor.sigma.begin(), anchor.sigma.end());
    const WorkVector w_rs = final_work_vector(Instance{inst.metric, inst.k, inst.initial, rs});
    const WorkVector w_empty = initial_work_vector(inst.metric, inst.initial);
    ASSERT_TRUE(d_equivalence(w_rs, w_empty).has_value());
    for (std::size_t rank = 0; rank < w_rs.size(); ++rank) {
      for (Point r = 0; r < inst.metric.size(); ++r) {
        const Configuration x = w_rs.space().at(rank);
        const WfaDecision a = wfa_decide(w_rs, x, r);
        const WfaDecision b = wfa_decide(w_empty, x, r);
        ASSERT_EQ(a.from, b.from);
        ASSERT_EQ(a.next, b.next);
      }
    }
  }
}

}  // namespace
}  // namespace kserver
