#include <fstream>
#include <sstream>

#include "doctest.h"
#include "grastab/cases.hpp"
#include "json.hpp"

using namespace grastab;

namespace {

std::string fixture_dir() { return GRASTAB_FIXTURE_DIR; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("all seven fixtures load and validate") {
  FixtureSet set = load_fixtures(fixture_dir(), builtin_case_ids());
  CHECK(set.by_case.size() == 7);
  CHECK(set.by_case.at("F4:C3").cosets.size() == 23);  // identity implicit
  CHECK(set.by_case.at("E8:E7").top_length == 57);
  CHECK(set.by_case.at("E6:D5").excluded_node == 6);
}

TEST_CASE("serialization round-trips") {
  for (auto& id : builtin_case_ids()) {
    Fixture fx = load_fixture(fixture_dir() + "/" + fixture_filename(id));
    std::string once = serialize_fixture(fx);
    CHECK(serialize_fixture(parse_fixture(once)) == once);
  }
}

TEST_CASE("missing file is reported") {
  CHECK_THROWS(load_fixture(fixture_dir() + "/no_such_case.json"));
}

TEST_CASE("dimension inconsistencies are rejected") {
  nlohmann::json doc = nlohmann::json::parse(
      slurp(fixture_dir() + "/" + fixture_filename("F4:C3")));

  SUBCASE("dropping a coset row breaks the euler dimensions") {
    doc["cosets"].erase(doc["cosets"].size() - 1);
    CHECK_THROWS(parse_fixture(doc.dump()));
  }
  SUBCASE("widening an euler matrix breaks the per-degree count") {
    for (auto& row : doc["euler"]["5"]) row.push_back(0);
    CHECK_THROWS(parse_fixture(doc.dump()));
  }
  SUBCASE("unknown schema versions are rejected") {
    doc["schema_version"] = 999;
    CHECK_THROWS(parse_fixture(doc.dump()));
  }
  SUBCASE("a word of the wrong length is rejected") {
    doc["cosets"][3]["word"].push_back(1);
    CHECK_THROWS(parse_fixture(doc.dump()));
  }
  SUBCASE("monomials must have the degree of their basis") {
    doc["monomial_bases"]["6"][0] = {{4, 1}};
    CHECK_THROWS(parse_fixture(doc.dump()));
  }
  SUBCASE("nullspace width must match the monomial basis") {
    doc["nullspace"]["3"][0].push_back(0);
    CHECK_THROWS(parse_fixture(doc.dump()));
  }
}

TEST_CASE("case specs bind generators coherently") {
  for (auto& id : builtin_case_ids()) {
    Fixture fx = load_fixture(fixture_dir() + "/" + fixture_filename(id));
    CaseSpec spec = case_spec(id, fx);
    CHECK(spec.case_id == id);
    CHECK(!spec.m_list.empty());
    for (int m : spec.extended_m)
      CHECK(std::count(spec.m_list.begin(), spec.m_list.end(), m) == 1);
    for (auto& [deg, cls] : spec.generators) CHECK(cls.i == deg);
  }
}
