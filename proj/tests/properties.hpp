#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lnd::test {

struct PropertyOutcome {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool ok() const { return failures == 0 && cases > 0; }
};

/// The randomized property suites, each over `cases` seeded cases.
std::vector<PropertyOutcome> run_properties(std::uint64_t seed, std::size_t cases = 200);

}  // namespace lnd::test
