#include <gtest/gtest.h>

#include "kserver/anchor.hpp"
#include "kserver/offline.hpp"
#include "kserver/workfunction.hpp"
#include "test_support.hpp"

namespace kserver {
namespace {

using testing::m3_instance;
using testing::random_instance;

TEST(AnchorCycleCount, ArithmeticExamples) {
  EXPECT_EQ(anchor_cycle_count(2, 0, 1, 3, 0), 5);
  EXPECT_EQ(anchor_cycle_count(2, 10, 1, 3, 5), 66);
  // Ceiling of an exact ratio: (2*3*7 + 1) / 4 = 43/4 -> 11, structural (28 + 16)/4 = 11.
  EXPECT_EQ(anchor_cycle_count(2, 7, 4, 3, 1), 12);
  EXPECT_THROW(anchor_cycle_count(1, 0, 1, 1, 0), InputError);
  EXPECT_THROW(anchor_cycle_count(2, 0, 0, 1, 0), InputError);
}

TEST(ComputeAnchor, EmptySequence) {
  const AnchorSpec a = compute_anchor(m3_instance(), 3, 0);
  EXPECT_EQ(a.opt, 0);
  EXPECT_EQ(a.m, 5);
  EXPECT_EQ(a.sigma.size(), 10u);
}

TEST(ComputeAnchor, M3SingleRequest) {
  const AnchorSpec a = compute_anchor(m3_instance({2}), 3, 0);
  EXPECT_EQ(a.opt, 2);
  EXPECT_EQ(a.ell, 1);
  EXPECT_EQ(a.m, 13);
  ASSERT_EQ(a.sigma.size(), 26u);
  for (std::size_t i = 0; i < a.sigma.size(); ++i) EXPECT_EQ(a.sigma[i], static_cast<Point>(i % 2));
}

TEST(ComputeAnchor, RejectsSingleServer) {
  EXPECT_THROW(compute_anchor(Instance{testing::m3(), 1, Configuration{0}, {2}}, 1, 0), InputError);
}

TEST(ComputeAnchor, StrictInequalitiesHold) {
  Rng rng(10);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + trial % 3;
    const Instance inst = random_instance(rng, 7, k, rng.uniform_below(15), 40);
    const Cost alpha = 1 + static_cast<Cost>(rng.uniform_below(8));
    const Cost beta = static_cast<Cost>(rng.uniform_below(100));
    const AnchorSpec a = compute_anchor(inst, alpha, beta);
    EXPECT_GT(a.m * a.ell, 2 * alpha * a.opt + beta);
    EXPECT_GT(a.m * a.ell, 2 * k * a.opt + k * k * a.ell);
    EXPECT_EQ(a.sigma, round_robin(inst.initial, a.m));
  }
}

TEST(ComputeAnchor, SigmaAloneIsFreeFromA0) {
  Rng rng(20);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance inst = random_instance(rng, 6, 2 + trial % 3, 8);
    const AnchorSpec a = compute_anchor(inst, 2 * inst.k - 1, 0);
    const Instance sigma_only{inst.metric, inst.k, inst.initial, a.sigma};
    EXPECT_EQ(run_wfa(sigma_only).total_cost, 0);
    EXPECT_EQ(opt_cost(final_work_vector(sigma_only)), 0);
  }
}

TEST(BuildChi, Examples) {
  EXPECT_EQ(build_chi({2}, {0, 1}, 1), (std::vector<Point>{2, 0, 1}));
  EXPECT_EQ(build_chi({2}, {0, 1}, 3), (std::vector<Point>{2, 0, 1, 2, 0, 1, 2, 0, 1}));
  EXPECT_EQ(build_chi({}, {0, 1}, 2), (std::vector<Point>{0, 1, 0, 1}));
  EXPECT_EQ(build_chi({4, 5, 6}, {1, 2, 3, 1}, 7).size(), 7u * 7u);
  EXPECT_THROW(build_chi({1}, {0}, 0), InputError);
}

}  // namespace
}  // namespace kserver
