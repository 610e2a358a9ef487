#include "grastab/report.hpp"

#include <sstream>

#include "json.hpp"

namespace grastab {

using nlohmann::json;

namespace {

const char* state_name(TableStatus::State s) {
  switch (s) {
    case TableStatus::State::match:
      return "match";
    case TableStatus::State::mismatch:
      return "mismatch";
    case TableStatus::State::skipped:
      return "skipped";
  }
  return "?";
}

}  // namespace

std::string render_text(const std::vector<DiffReport>& reports) {
  std::ostringstream out;
  int total_tables = 0, total_mismatch = 0, total_skipped = 0, ok_cases = 0;
  for (auto& rep : reports) {
    out << "case " << rep.case_id
        << (rep.bootstrap_ok ? "" : "  [convention bootstrap FAILED]") << "\n";
    for (auto& t : rep.tables) {
      out << "  " << t.table << ": " << state_name(t.state);
      if (!t.detail.empty()) out << "  (" << t.detail << ")";
      if (t.seconds >= 0.1) {
        out.precision(1);
        out << std::fixed << "  [" << t.seconds << "s]";
        out.unsetf(std::ios::fixed);
        out.precision(6);
      }
      out << "\n";
    }
    total_tables += (int)rep.tables.size();
    total_mismatch += rep.mismatches();
    total_skipped += rep.skipped();
    if (rep.ok()) ++ok_cases;
  }
  out << ok_cases << "/" << reports.size() << " cases, " << total_tables
      << " tables, " << total_mismatch << " mismatches";
  if (total_skipped) out << ", " << total_skipped << " skipped";
  out << "\n";
  return out.str();
}

std::string render_structured(const std::vector<DiffReport>& reports) {
  json out = json::array();
  for (auto& rep : reports) {
    json r;
    r["case_id"] = rep.case_id;
    r["bootstrap_ok"] = rep.bootstrap_ok;
    r["ok"] = rep.ok();
    r["tables"] = json::array();
    // No timing here: structured output is byte-identical across runs.
    for (auto& t : rep.tables)
      r["tables"].push_back({{"table", t.table},
                             {"status", state_name(t.state)},
                             {"detail", t.detail}});
    out.push_back(std::move(r));
  }
  return out.dump(1);
}

std::string render(const std::vector<DiffReport>& reports, ReportFormat fmt) {
  return fmt == ReportFormat::text ? render_text(reports)
                                   : render_structured(reports);
}

std::string render_matrix_text(const IntMatrix& M) {
  std::ostringstream out;
  if (!M.col_labels.empty()) {
    out << "      ";
    for (auto& l : M.col_labels) out << l << " ";
    out << "\n";
  }
  for (int r = 0; r < M.rows; ++r) {
    if ((int)M.row_labels.size() == M.rows) out << M.row_labels[r] << ": ";
    for (int c = 0; c < M.cols; ++c) out << M.at(r, c) << (c + 1 < M.cols ? " " : "");
    out << "\n";
  }
  if (M.rows == 0 || M.cols == 0)
    out << "(" << M.rows << "x" << M.cols << ")\n";
  return out.str();
}

std::string render_matrix_structured(const IntMatrix& M) {
  json out;
  out["rows"] = M.rows;
  out["cols"] = M.cols;
  out["row_labels"] = M.row_labels;
  out["col_labels"] = M.col_labels;
  json rows = json::array();
  for (int r = 0; r < M.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < M.cols; ++c) {
      const mpz_class& v = M.at(r, c);
      if (v.fits_slong_p())
        row.push_back((long long)v.get_si());
      else
        row.push_back(v.get_str());
    }
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out.dump(1);
}

}  // namespace grastab
