#include <gtest/gtest.h>

#include "support/properties.hpp"

namespace {

// A different seed from the acceptance run, so the two cover separate samples.
constexpr std::uint64_t kSeed = 7;

void expect_ok(const vk::testing::PropertyResult& r) {
  EXPECT_GT(r.trials, 0) << r.name;
  EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
}

TEST(Properties, ElmoreForms) { expect_ok(vk::testing::elmore_forms(kSeed)); }
TEST(Properties, NetworkDuality) { expect_ok(vk::testing::network_duality(kSeed)); }
TEST(Properties, ProbabilityShannon) { expect_ok(vk::testing::probability_shannon(kSeed)); }
TEST(Properties, GrayFullCount) { expect_ok(vk::testing::gray_full_count()); }
TEST(Properties, PrimitiveLfsrPeriod) { expect_ok(vk::testing::primitive_lfsr_period()); }
TEST(Properties, AtpgPlugBack) { expect_ok(vk::testing::atpg_plug_back(kSeed)); }
TEST(Properties, VtcDenseSweep) { expect_ok(vk::testing::vtc_dense_sweep(kSeed)); }

}  // namespace
