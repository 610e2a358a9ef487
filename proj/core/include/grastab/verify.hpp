#ifndef GRASTAB_VERIFY_HPP
#define GRASTAB_VERIFY_HPP

#include "grastab/cases.hpp"

namespace grastab {

struct TableStatus {
  enum class State { match, mismatch, skipped };
  std::string table;  // "cosets", "A_5", "H^12", "ring[3]", "M(pi_8)", ...
  State state = State::match;
  // On mismatch: the location plus both the computed and reference values.
  std::string detail;
  double seconds = 0;
};

struct DiffReport {
  std::string case_id;
  bool bootstrap_ok = false;  // low-degree multiplication matrices reproduced
  std::vector<TableStatus> tables;

  int mismatches() const;
  int skipped() const;
  bool ok() const { return mismatches() == 0; }
};

struct VerifyOptions {
  bool extended = false;  // include the gated heavy degrees
  int threads = 1;
  int max_degree = -1;  // debug cap on the coset degree; -1 = no cap
};

// Recomputes every table family for the case and diffs it against the
// reference fixture.
DiffReport verify_case(const std::string& case_id, const Fixture& fx,
                       const VerifyOptions& opt = {});

}  // namespace grastab

#endif
