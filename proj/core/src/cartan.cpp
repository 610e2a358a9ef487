#include "grastab/cartan.hpp"

namespace grastab {

void CartanMatrix::validate() const {
  if (n <= 0 || (int)entries.size() != n * n)
    throw std::invalid_argument("CartanMatrix: bad dimensions");
  for (int i = 0; i < n; ++i) {
    if (at(i, i) != 2) throw std::invalid_argument("CartanMatrix: diagonal != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (at(i, j) > 0) throw std::invalid_argument("CartanMatrix: positive off-diagonal");
      if ((at(i, j) == 0) != (at(j, i) == 0))
        throw std::invalid_argument("CartanMatrix: zero pattern not symmetric");
    }
  }
}

namespace {

CartanMatrix from_rows(std::string label, const std::vector<std::vector<int>>& rows) {
  CartanMatrix C;
  C.n = (int)rows.size();
  C.label = std::move(label);
  for (auto& r : rows)
    for (int v : r) C.entries.push_back(v);
  C.validate();
  return C;
}

CartanMatrix classical(char series, int n, const std::string& label) {
  if (n < 1) throw std::invalid_argument("cartan_matrix: rank must be >= 1");
  if (series == 'B' && n < 2) throw std::invalid_argument("cartan_matrix: B needs rank >= 2");
  if (series == 'C' && n < 2) throw std::invalid_argument("cartan_matrix: C needs rank >= 2");
  if (series == 'D' && n < 3) throw std::invalid_argument("cartan_matrix: D needs rank >= 3");
  std::vector<std::vector<int>> rows(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) rows[i][i] = 2;
  int chain = (series == 'D') ? n - 1 : n;
  for (int i = 0; i + 1 < chain; ++i) {
    rows[i][i + 1] = -1;
    rows[i + 1][i] = -1;
  }
  if (series == 'B' && n >= 2) rows[n - 2][n - 1] = -2;  // alpha_n short
  if (series == 'C' && n >= 2) rows[n - 1][n - 2] = -2;  // alpha_n long
  if (series == 'D') {
    rows[n - 3][n - 1] = -1;
    rows[n - 1][n - 3] = -1;
  }
  return from_rows(label, rows);
}

}  // namespace

CartanMatrix cartan_matrix(const std::string& label) {
  if (label == "F4")
    return from_rows(label, {{2, -1, 0, 0},
                             {-1, 2, -2, 0},
                             {0, -1, 2, -1},
                             {0, 0, -1, 2}});
  if (label == "E6")
    return from_rows(label, {{2, 0, -1, 0, 0, 0},
                             {0, 2, 0, -1, 0, 0},
                             {-1, 0, 2, -1, 0, 0},
                             {0, -1, -1, 2, -1, 0},
                             {0, 0, 0, -1, 2, -1},
                             {0, 0, 0, 0, -1, 2}});
  if (label == "E7")
    return from_rows(label, {{2, 0, -1, 0, 0, 0, 0},
                             {0, 2, 0, -1, 0, 0, 0},
                             {-1, 0, 2, -1, 0, 0, 0},
                             {0, -1, -1, 2, -1, 0, 0},
                             {0, 0, 0, -1, 2, -1, 0},
                             {0, 0, 0, 0, -1, 2, -1},
                             {0, 0, 0, 0, 0, -1, 2}});
  if (label == "E8")
    return from_rows(label, {{2, 0, -1, 0, 0, 0, 0, 0},
                             {0, 2, 0, -1, 0, 0, 0, 0},
                             {-1, 0, 2, -1, 0, 0, 0, 0},
                             {0, -1, -1, 2, -1, 0, 0, 0},
                             {0, 0, 0, -1, 2, -1, 0, 0},
                             {0, 0, 0, 0, -1, 2, -1, 0},
                             {0, 0, 0, 0, 0, -1, 2, -1},
                             {0, 0, 0, 0, 0, 0, -1, 2}});
  if (label.size() >= 2 && (label[0] == 'A' || label[0] == 'B' ||
                            label[0] == 'C' || label[0] == 'D')) {
    int n = 0;
    try {
      n = std::stoi(label.substr(1));
    } catch (...) {
      throw std::invalid_argument("cartan_matrix: unknown label " + label);
    }
    return classical(label[0], n, label);
  }
  throw std::invalid_argument("cartan_matrix: unknown label " + label);
}

}  // namespace grastab
