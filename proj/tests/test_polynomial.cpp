#include "doctest.h"
#include "grastab/polynomial.hpp"

using namespace grastab;

namespace {

RootPolynomial x(int n, int i) {
  std::vector<int> c(n, 0);
  c[i] = 1;
  return RootPolynomial::linear(c);
}

}  // namespace

TEST_CASE("arithmetic and evaluation") {
  int n = 2;
  RootPolynomial f = (x(n, 0) + x(n, 1)) * (x(n, 0) - x(n, 1));
  RootPolynomial g = x(n, 0) * x(n, 0) - x(n, 1) * x(n, 1);
  CHECK(f == g);
  CHECK(f.degree() == 2);
  CHECK(f.eval({5, 3}) == 16);
  CHECK((f - g).is_zero());
}

TEST_CASE("reflection is an involution on polynomials") {
  CartanMatrix C = cartan_matrix("B2");
  RootPolynomial f =
      x(2, 0) * x(2, 0) * x(2, 1) + RootPolynomial::constant(2, 3) * x(2, 1);
  for (int i = 1; i <= 2; ++i) CHECK(f.reflected(C, i).reflected(C, i) == f);
}

TEST_CASE("divided difference basics") {
  CartanMatrix C = cartan_matrix("A2");
  RootPolynomial a1 = x(2, 0), a2 = x(2, 1);
  // s_i(alpha_i) = -alpha_i, so the difference quotient of alpha_i is 2.
  CHECK(a1.divided_difference(C, 1) == RootPolynomial::constant(2, 2));
  // Degree drops by one; applying the same operator twice gives zero.
  RootPolynomial f = a1 * a1 * a2 + a2 * a2 * a2;
  CHECK(f.divided_difference(C, 1).degree() == 2);
  CHECK(f.divided_difference(C, 1).divided_difference(C, 1).is_zero());
  CHECK(f.divided_difference(C, 2).divided_difference(C, 2).is_zero());
}

TEST_CASE("leibniz rule") {
  CartanMatrix C = cartan_matrix("B2");
  RootPolynomial f = x(2, 0) * x(2, 0) + x(2, 1);
  RootPolynomial g = x(2, 0) * x(2, 1);
  for (int i = 1; i <= 2; ++i) {
    RootPolynomial lhs = (f * g).divided_difference(C, i);
    RootPolynomial rhs = f.divided_difference(C, i) * g +
                         f.reflected(C, i) * g.divided_difference(C, i);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("braid relation in type A") {
  CartanMatrix C = cartan_matrix("A2");
  RootPolynomial f = x(2, 0) * x(2, 0) * x(2, 0) * x(2, 1) +
                     x(2, 0) * x(2, 1) * x(2, 1) * x(2, 1);
  auto d = [&](const RootPolynomial& p, int i) {
    return p.divided_difference(C, i);
  };
  CHECK(d(d(d(f, 1), 2), 1) == d(d(d(f, 2), 1), 2));
}
