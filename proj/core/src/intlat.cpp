#include "grastab/intlat.hpp"

#include <algorithm>
#include <stdexcept>

namespace grastab {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

IntMatrix IntMatrix::multiplied(const IntMatrix& rhs) const {
  if (cols != rhs.rows) throw std::invalid_argument("multiplied: shape mismatch");
  IntMatrix out(rows, rhs.cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < cols; ++k) {
      const mpz_class& a = at(r, k);
      if (a == 0) continue;
      for (int c = 0; c < rhs.cols; ++c) out.at(r, c) += a * rhs.at(k, c);
    }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) out.at(c, r) = at(r, c);
  return out;
}

std::vector<mpz_class> SNFResult::invariant_factors() const {
  std::vector<mpz_class> out;
  for (int i = 0; i < std::min(S.rows, S.cols); ++i) out.push_back(S.at(i, i));
  return out;
}

namespace {

void swap_rows(IntMatrix& M, int a, int b) {
  if (a == b) return;
  for (int c = 0; c < M.cols; ++c) std::swap(M.at(a, c), M.at(b, c));
}

void swap_cols(IntMatrix& M, int a, int b) {
  if (a == b) return;
  for (int r = 0; r < M.rows; ++r) std::swap(M.at(r, a), M.at(r, b));
}

// row[a] += q * row[b]
void add_row(IntMatrix& M, int a, int b, const mpz_class& q) {
  for (int c = 0; c < M.cols; ++c) M.at(a, c) += q * M.at(b, c);
}

void add_col(IntMatrix& M, int a, int b, const mpz_class& q) {
  for (int r = 0; r < M.rows; ++r) M.at(r, a) += q * M.at(r, b);
}

void negate_row(IntMatrix& M, int a) {
  for (int c = 0; c < M.cols; ++c) M.at(a, c) = -M.at(a, c);
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& M) {
  SNFResult res;
  res.S = M;
  res.S.row_labels.clear();
  res.S.col_labels.clear();
  res.U = IntMatrix::identity(M.rows);
  res.V = IntMatrix::identity(M.cols);
  IntMatrix& S = res.S;
  IntMatrix& U = res.U;
  IntMatrix& V = res.V;

  int m = std::min(M.rows, M.cols);
  for (int t = 0; t < m; ++t) {
    for (;;) {
      // Min-abs nonzero pivot in the trailing submatrix, (row, col) tie-break.
      int pr = -1, pc = -1;
      for (int r = t; r < S.rows; ++r)
        for (int c = t; c < S.cols; ++c) {
          if (S.at(r, c) == 0) continue;
          if (pr < 0 || cmp(abs(S.at(r, c)), abs(S.at(pr, pc))) < 0) {
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) {
        t = m;  // trailing submatrix is zero
        break;
      }
      swap_rows(S, t, pr);
      swap_rows(U, t, pr);
      swap_cols(S, t, pc);
      swap_cols(V, t, pc);

      bool clean = true;
      mpz_class q;
      for (int r = t + 1; r < S.rows; ++r) {
        if (S.at(r, t) == 0) continue;
        q = S.at(r, t) / S.at(t, t);  // truncated division
        if (q != 0) {
          add_row(S, r, t, -q);
          add_row(U, r, t, -q);
        }
        if (S.at(r, t) != 0) clean = false;
      }
      for (int c = t + 1; c < S.cols; ++c) {
        if (S.at(t, c) == 0) continue;
        q = S.at(t, c) / S.at(t, t);
        if (q != 0) {
          add_col(S, c, t, -q);
          add_col(V, c, t, -q);
        }
        if (S.at(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing submatrix for the chain d1|d2|..
      int bad = -1;
      for (int r = t + 1; r < S.rows && bad < 0; ++r)
        for (int c = t + 1; c < S.cols; ++c)
          if (!mpz_divisible_p(S.at(r, c).get_mpz_t(), S.at(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      add_row(S, t, bad, 1);
      add_row(U, t, bad, 1);
    }
    if (t == m) break;
  }

  for (int t = 0; t < m; ++t)
    if (S.at(t, t) < 0) {
      negate_row(S, t);
      negate_row(U, t);
    }

  IntMatrix check = U.multiplied(M).multiplied(V);
  if (!check.same_entries(S))
    throw std::logic_error("smith_normal_form: U*M*V != S");
  for (int t = 0; t + 1 < m; ++t)
    if (S.at(t, t) != 0 &&
        !mpz_divisible_p(S.at(t + 1, t + 1).get_mpz_t(), S.at(t, t).get_mpz_t()))
      throw std::logic_error("smith_normal_form: divisibility chain broken");
  return res;
}

namespace {

// Row HNF of [M | aug] driven by M's columns; both reduced by the same
// unimodular row operations. aug may have 0 columns.
void hnf_rows(IntMatrix& M, IntMatrix& aug) {
  int pivot_row = 0;
  for (int c = 0; c < M.cols && pivot_row < M.rows; ++c) {
    // gcd-eliminate column c below pivot_row
    for (;;) {
      int best = -1;
      for (int r = pivot_row; r < M.rows; ++r) {
        if (M.at(r, c) == 0) continue;
        if (best < 0 || cmp(abs(M.at(r, c)), abs(M.at(best, c))) < 0) best = r;
      }
      if (best < 0) break;
      swap_rows(M, pivot_row, best);
      swap_rows(aug, pivot_row, best);
      bool clean = true;
      mpz_class q;
      for (int r = pivot_row + 1; r < M.rows; ++r) {
        if (M.at(r, c) == 0) continue;
        q = M.at(r, c) / M.at(pivot_row, c);
        if (q != 0) {
          add_row(M, r, pivot_row, -q);
          add_row(aug, r, pivot_row, -q);
        }
        if (M.at(r, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (M.at(pivot_row, c) == 0) continue;
    if (M.at(pivot_row, c) < 0) {
      negate_row(M, pivot_row);
      negate_row(aug, pivot_row);
    }
    mpz_class q;
    for (int r = 0; r < pivot_row; ++r) {
      // reduce entries above the pivot into [0, pivot)
      mpz_fdiv_q(q.get_mpz_t(), M.at(r, c).get_mpz_t(),
                 M.at(pivot_row, c).get_mpz_t());
      if (q != 0) {
        add_row(M, r, pivot_row, -q);
        add_row(aug, r, pivot_row, -q);
      }
    }
    ++pivot_row;
  }
  M.rows = pivot_row;  // zero rows are at the bottom; drop them
  M.entries.resize((size_t)pivot_row * M.cols);
  aug.rows = std::min(aug.rows, std::max(pivot_row, 0));
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& M) {
  IntMatrix H = M;
  H.row_labels.clear();
  IntMatrix aug(M.rows, 0);
  hnf_rows(H, aug);
  return H;
}

IntMatrix LatticeBasis::as_matrix() const {
  IntMatrix M((int)rows.size(), ambient);
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < ambient; ++c) M.at(r, c) = rows[r][c];
  return M;
}

LatticeBasis kernel_basis(const IntMatrix& M, Side side) {
  SNFResult snf = smith_normal_form(M);
  int m = std::min(M.rows, M.cols);
  int rank = 0;
  while (rank < m && snf.S.at(rank, rank) != 0) ++rank;

  LatticeBasis B;
  IntMatrix raw;
  if (side == Side::right) {
    B.ambient = M.cols;
    raw = IntMatrix(M.cols - rank, M.cols);
    for (int k = rank; k < M.cols; ++k)
      for (int r = 0; r < M.cols; ++r) raw.at(k - rank, r) = snf.V.at(r, k);
  } else {
    B.ambient = M.rows;
    raw = IntMatrix(M.rows - rank, M.rows);
    for (int k = rank; k < M.rows; ++k)
      for (int c = 0; c < M.rows; ++c) raw.at(k - rank, c) = snf.U.at(k, c);
  }
  IntMatrix H = hermite_normal_form(raw);
  for (int r = 0; r < H.rows; ++r) {
    std::vector<mpz_class> row(B.ambient);
    for (int c = 0; c < B.ambient; ++c) row[c] = H.at(r, c);
    B.rows.push_back(std::move(row));
  }
  return B;
}

mpz_class CokerPresentation::order() const {
  mpz_class o = 1;
  for (const auto& d : invariant_factors)
    if (d != 0) o *= d;
  return o;
}

namespace {

IntMatrix unimodular_inverse(const IntMatrix& V) {
  IntMatrix M = V;
  IntMatrix aug = IntMatrix::identity(V.rows);
  hnf_rows(M, aug);
  if (!M.same_entries(IntMatrix::identity(V.rows)))
    throw std::logic_error("unimodular_inverse: matrix not unimodular");
  return aug;
}

}  // namespace

CokerPresentation cokernel(const IntMatrix& relations) {
  CokerPresentation P;
  P.ambient_rank = relations.cols;
  SNFResult snf = smith_normal_form(relations);
  P.V = snf.V;
  IntMatrix vinv = unimodular_inverse(snf.V);

  int m = std::min(relations.rows, relations.cols);
  P.all_factors.resize(relations.cols);
  for (int k = 0; k < relations.cols; ++k)
    P.all_factors[k] = (k < m) ? snf.S.at(k, k) : mpz_class(0);

  P.retained.assign(relations.cols, -1);
  for (int k = 0; k < relations.cols; ++k) {
    if (P.all_factors[k] == 1) continue;
    P.retained[k] = (int)P.invariant_factors.size();
    P.invariant_factors.push_back(P.all_factors[k]);
    std::vector<mpz_class> gen(relations.cols);
    for (int c = 0; c < relations.cols; ++c) gen[c] = vinv.at(k, c);
    P.generators.push_back(std::move(gen));
  }
  return P;
}

mpz_class balanced_residue(const mpz_class& x, const mpz_class& d) {
  if (d == 0) return x;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());  // r in [0, d)
  if (2 * r >= d) r -= d;  // prefer -d/2 over d/2, matching printed tables
  return r;
}

std::vector<mpz_class> reduce_mod(const std::vector<mpz_class>& v,
                                  const CokerPresentation& P) {
  if ((int)v.size() != P.ambient_rank)
    throw std::invalid_argument("reduce_mod: dimension mismatch");
  std::vector<mpz_class> coords(P.ambient_rank, 0);
  for (int k = 0; k < P.ambient_rank; ++k)
    for (int i = 0; i < P.ambient_rank; ++i) coords[k] += v[i] * P.V.at(i, k);
  std::vector<mpz_class> out(P.invariant_factors.size(), 0);
  for (int k = 0; k < P.ambient_rank; ++k) {
    if (P.retained[k] < 0) continue;
    out[P.retained[k]] = balanced_residue(coords[k], P.all_factors[k]);
  }
  return out;
}

LatticeBasis saturate(const LatticeBasis& B) {
  LatticeBasis perp = kernel_basis(B.as_matrix(), Side::right);
  return kernel_basis(perp.as_matrix(), Side::right);
}

bool lattice_equal(const LatticeBasis& A, const LatticeBasis& B) {
  if (A.ambient != B.ambient)
    throw std::invalid_argument("lattice_equal: ambient dimension mismatch");
  return saturate(A).rows == saturate(B).rows;
}

}  // namespace grastab
