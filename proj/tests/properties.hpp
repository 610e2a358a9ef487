#ifndef GRASTAB_TESTS_PROPERTIES_HPP
#define GRASTAB_TESTS_PROPERTIES_HPP

#include <string>
#include <vector>

namespace grastab::testing {

struct PropResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first failure, or empty
  double seconds = 0;
};

// Fixture-free property suite: every check derives its expected values
// independently of the reference tables.
std::vector<PropResult> run_property_suite();

}  // namespace grastab::testing

#endif
