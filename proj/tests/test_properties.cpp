#include "doctest.h"
#include "properties.hpp"

TEST_CASE("fixture-free property suite") {
  for (auto& r : grastab::testing::run_property_suite()) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
  }
}
