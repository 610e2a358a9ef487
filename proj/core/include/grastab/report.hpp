#ifndef GRASTAB_REPORT_HPP
#define GRASTAB_REPORT_HPP

#include "grastab/verify.hpp"

namespace grastab {

enum class ReportFormat { text, structured };

// Human-readable summary: one line per table, a closing totals line.
std::string render_text(const std::vector<DiffReport>& reports);

// Deterministic JSON document with the same content.
std::string render_structured(const std::vector<DiffReport>& reports);

std::string render(const std::vector<DiffReport>& reports, ReportFormat fmt);

// Matrix pretty-printers shared by the command-line tools.
std::string render_matrix_text(const IntMatrix& M);
std::string render_matrix_structured(const IntMatrix& M);

}  // namespace grastab

#endif
