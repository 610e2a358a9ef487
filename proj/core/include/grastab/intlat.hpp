#ifndef GRASTAB_INTLAT_HPP
#define GRASTAB_INTLAT_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace grastab {

struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<mpz_class> entries;  // row-major
  std::vector<std::string> row_labels, col_labels;  // optional semantic tags

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries((size_t)r * c) {}
  static IntMatrix identity(int n);

  mpz_class& at(int r, int c) { return entries[(size_t)r * cols + c]; }
  const mpz_class& at(int r, int c) const { return entries[(size_t)r * cols + c]; }

  IntMatrix multiplied(const IntMatrix& rhs) const;
  IntMatrix transposed() const;
  bool same_entries(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

// U * M * V = S with U, V unimodular and S diagonal, d_1 | d_2 | ..., all
// diagonal entries nonnegative. Verified exactly before returning.
struct SNFResult {
  IntMatrix U, S, V;
  std::vector<mpz_class> invariant_factors() const;  // diagonal of S
};

SNFResult smith_normal_form(const IntMatrix& M);

// Row-style Hermite normal form of the lattice spanned by the rows: zero
// rows dropped, positive pivots, entries above each pivot reduced to
// [0, pivot). Canonical for a given row lattice.
IntMatrix hermite_normal_form(const IntMatrix& M);

struct LatticeBasis {
  int ambient = 0;
  std::vector<std::vector<mpz_class>> rows;
  IntMatrix as_matrix() const;
};

enum class Side { left, right };

// Basis of the saturated integer kernel (right: x with M x = 0 in Z^cols;
// left: y with y M = 0 in Z^rows), HNF-reduced.
LatticeBasis kernel_basis(const IntMatrix& M, Side side);

// Z^cols / rowspan(relations) as a direct sum of cyclic groups.
struct CokerPresentation {
  int ambient_rank = 0;
  // One entry per retained summand: 0 for a free factor, d >= 2 otherwise;
  // factors equal to 1 are dropped.
  std::vector<mpz_class> invariant_factors;
  // Generator of each retained summand, in ambient coordinates.
  std::vector<std::vector<mpz_class>> generators;

  // Quotient map data: coordinates of x in the SNF basis are x * V; entry k
  // reduces modulo all_factors[k] (0 = free). retained[k] indexes into the
  // public lists above, -1 where the factor is 1.
  IntMatrix V;
  std::vector<mpz_class> all_factors;
  std::vector<int> retained;

  mpz_class order() const;  // product of the finite factors
};

CokerPresentation cokernel(const IntMatrix& relations);

// Coefficients of v on the retained generators; finite factors are
// canonicalized to the balanced range (-d/2, d/2].
std::vector<mpz_class> reduce_mod(const std::vector<mpz_class>& v,
                                  const CokerPresentation& P);

mpz_class balanced_residue(const mpz_class& x, const mpz_class& d);

// Smallest superlattice of rowspan(B) that is saturated in Z^ambient.
LatticeBasis saturate(const LatticeBasis& B);

// True iff the saturations of the two row spans coincide.
bool lattice_equal(const LatticeBasis& A, const LatticeBasis& B);

}  // namespace grastab

#endif
