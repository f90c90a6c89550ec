#include <gtest/gtest.h>

#include "support/golden.hpp"

namespace vk::testing {
void PrintTo(const CaseFile& c, std::ostream* os) { *os << c.name; }
}  // namespace vk::testing

namespace {

using vk::testing::CaseFile;

class Golden : public ::testing::TestWithParam<CaseFile> {};

TEST_P(Golden, MatchesExpectations) {
  auto out = vk::testing::evaluate_case(GetParam());
  ASSERT_EQ(out.exit_code, 0) << out.error;
  for (const auto& k : out.checks) {
    if (k.known_mismatch) {
      EXPECT_FALSE(k.ok) << k.path << " now matches " << k.expected
                         << "; drop the known_mismatch note";
    } else {
      EXPECT_TRUE(k.ok) << k.path << ": got " << k.actual << ", expected " << k.expected;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Cases, Golden, ::testing::ValuesIn(vk::testing::load_cases(VK_CASES_DIR)),
                         [](const auto& info) { return info.param.name; });

TEST(GoldenResolve, StepsIntoQuantities) {
  auto report = nlohmann::json::parse(
      R"({"results": {"t": {"unit": "ns", "value": [1.5, 2]}, "n": 3, "q": {"unit": "fF", "value": 4}}})");
  auto t1 = vk::testing::resolve(report, "results.t[1]");
  ASSERT_TRUE(t1);
  EXPECT_DOUBLE_EQ(t1->get<double>(), 2e-9);
  EXPECT_DOUBLE_EQ(vk::testing::resolve(report, "results.q")->get<double>(), 4e-15);
  EXPECT_EQ(*vk::testing::resolve(report, "results.n"), 3);
  EXPECT_FALSE(vk::testing::resolve(report, "results.missing"));
  EXPECT_FALSE(vk::testing::resolve(report, "results.t[5]"));
}

TEST(GoldenMatch, PrintedAndTruncatedDecimals) {
  using nlohmann::json;
  std::string shown;
  json two = json::parse(R"({"printed_decimals": 2})");
  EXPECT_TRUE(vk::testing::matches(0.834e-9, "0.83n", two, &shown));
  EXPECT_FALSE(vk::testing::matches(0.836e-9, "0.83n", two, &shown));
  json cut = json::parse(R"({"truncated_decimals": 1})");
  EXPECT_TRUE(vk::testing::matches(555.56e6, "555.5M", cut, &shown));
  EXPECT_FALSE(vk::testing::matches(555.46e6, "555.5M", cut, &shown));
  EXPECT_TRUE(vk::testing::matches(7, 7, json(), &shown));
  EXPECT_FALSE(vk::testing::matches(7.0000001, 7, json(), &shown));
}

}  // namespace
