#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace vk::testing {

struct PropertyResult {
  std::string name;
  long trials = 0;
  long failures = 0;
  std::string first_failure;

  bool ok() const { return trials > 0 && failures == 0; }
  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
  }
};

PropertyResult elmore_forms(std::uint64_t seed, int trees = 1000);
PropertyResult network_duality(std::uint64_t seed, int gates = 300);
PropertyResult probability_shannon(std::uint64_t seed, int expressions = 500);
PropertyResult gray_full_count(int max_bits = 12);
PropertyResult primitive_lfsr_period();
PropertyResult atpg_plug_back(std::uint64_t seed, int netlists = 200);
PropertyResult vtc_dense_sweep(std::uint64_t seed, int inverters = 100);

// The suites above with their default sizes, in a fixed order.
std::vector<PropertyResult> all_properties(std::uint64_t seed);

}  // namespace vk::testing
