#include <doctest.h>

#include "properties.hpp"
#include "support.hpp"

TEST_CASE("property suites") {
  for (const auto& p : lnd::test::run_properties(lnd::test::seed(), 200)) {
    INFO(p.name << ": " << p.first_failure);
    CHECK(p.cases == 200);
    CHECK(p.failures == 0);
  }
}
