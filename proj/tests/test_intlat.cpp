#include <random>

#include "doctest.h"
#include "grastab/intlat.hpp"

using namespace grastab;

namespace {

IntMatrix make(int r, int c, std::initializer_list<int> vals) {
  IntMatrix M(r, c);
  int k = 0;
  for (int v : vals) M.entries[k++] = v;
  return M;
}

}  // namespace

TEST_CASE("smith normal form on small examples") {
  SNFResult s = smith_normal_form(make(2, 2, {2, 0, 1, 2}));
  CHECK(s.invariant_factors() == std::vector<mpz_class>{1, 4});
  s = smith_normal_form(make(2, 2, {1, 2, 2, 1}));
  CHECK(s.invariant_factors() == std::vector<mpz_class>{1, 3});
  s = smith_normal_form(make(2, 3, {2, 4, 4, -6, 6, 12}));
  CHECK(s.invariant_factors() == std::vector<mpz_class>{2, 6});
}

TEST_CASE("hermite normal form is canonical under row operations") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix M(3, 4);
    for (auto& e : M.entries) e = val(rng);
    IntMatrix H = hermite_normal_form(M);
    // Shear, swap, negate: the row lattice is unchanged.
    IntMatrix N = M;
    for (int c = 0; c < 4; ++c) {
      N.at(0, c) += 3 * N.at(2, c);
      std::swap(N.at(1, c), N.at(2, c));
      N.at(2, c) = -N.at(2, c);
    }
    CHECK(hermite_normal_form(N).same_entries(H));
  }
}

TEST_CASE("kernels annihilate and are saturated") {
  IntMatrix M = make(2, 3, {2, 4, 6, 0, 2, 2});
  for (Side side : {Side::left, Side::right}) {
    LatticeBasis K = kernel_basis(M, side);
    for (auto& row : K.rows) {
      for (int j = 0; j < (side == Side::right ? M.rows : M.cols); ++j) {
        mpz_class dot = 0;
        for (int t = 0; t < (int)row.size(); ++t)
          dot += row[t] * (side == Side::right ? M.at(j, t) : M.at(t, j));
        CHECK(dot == 0);
      }
    }
    CHECK(lattice_equal(K, saturate(K)));
  }
  CHECK(kernel_basis(M, Side::right).rows.size() == 1);
  CHECK(kernel_basis(M, Side::left).rows.size() == 0);
}

TEST_CASE("cokernel presentations") {
  CokerPresentation P = cokernel(make(2, 2, {2, 0, 1, 2}));
  CHECK(P.invariant_factors == std::vector<mpz_class>{4});
  CHECK(P.order() == 4);
  // Every relation row maps to zero.
  CHECK(reduce_mod({2, 0}, P) == std::vector<mpz_class>{0});
  CHECK(reduce_mod({1, 2}, P) == std::vector<mpz_class>{0});

  CokerPresentation Q = cokernel(make(2, 2, {1, 2, 2, 1}));
  CHECK(Q.invariant_factors == std::vector<mpz_class>{3});

  CokerPresentation F = cokernel(IntMatrix(0, 3));
  CHECK(F.invariant_factors == std::vector<mpz_class>{0, 0, 0});
  CHECK(F.order() == 1);
}

TEST_CASE("balanced residues") {
  CHECK(balanced_residue(1, 4) == 1);
  CHECK(balanced_residue(2, 4) == -2);
  CHECK(balanced_residue(3, 4) == -1);
  CHECK(balanced_residue(5, 4) == 1);
  CHECK(balanced_residue(-1, 4) == -1);
}

TEST_CASE("saturation and lattice equality") {
  LatticeBasis A;
  A.ambient = 2;
  A.rows = {{2, 2}};
  LatticeBasis B;
  B.ambient = 2;
  B.rows = {{1, 1}};
  CHECK(lattice_equal(A, B));
  LatticeBasis C;
  C.ambient = 2;
  C.rows = {{1, 0}};
  CHECK(!lattice_equal(A, C));
  CHECK(saturate(A).rows == B.rows);
}
