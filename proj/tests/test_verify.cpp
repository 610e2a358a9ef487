#include "doctest.h"
#include "grastab/report.hpp"

using namespace grastab;

namespace {

std::string fixture_dir() { return GRASTAB_FIXTURE_DIR; }

}  // namespace

TEST_CASE("pristine fixtures verify cleanly") {
  VerifyOptions opt;
  opt.threads = 4;
  std::vector<DiffReport> reports;
  for (auto& id : builtin_case_ids()) {
    Fixture fx = load_fixture(fixture_dir() + "/" + fixture_filename(id));
    DiffReport rep = verify_case(id, fx, opt);
    INFO(rep.case_id);
    CHECK(rep.bootstrap_ok);
    for (auto& t : rep.tables) {
      INFO(t.table << ": " << t.detail);
      CHECK(t.state != TableStatus::State::mismatch);
    }
    // Without the extended flag only the two heavy E8 degrees are skipped.
    CHECK(rep.skipped() == (id == "E8:E7" ? 4 : 0));
    reports.push_back(std::move(rep));
  }
  std::string text = render_text(reports);
  CHECK(text.find("7/7 cases") != std::string::npos);
  CHECK(text.find("0 mismatches") != std::string::npos);
  CHECK(text.find("4 skipped") != std::string::npos);
  std::string a = render_structured(reports);
  CHECK(a == render_structured(reports));
  CHECK(a.find("\"skipped\"") != std::string::npos);
}

TEST_CASE("max-degree cap skips the capped tables") {
  VerifyOptions opt;
  opt.threads = 2;
  opt.max_degree = 6;
  Fixture fx = load_fixture(fixture_dir() + "/" + fixture_filename("F4:C3"));
  DiffReport rep = verify_case("F4:C3", fx, opt);
  CHECK(rep.mismatches() == 0);
  int capped = 0;
  for (auto& t : rep.tables)
    if (t.detail == "max-degree cap") ++capped;
  CHECK(capped > 0);
}
