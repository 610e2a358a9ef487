#ifndef GRASTAB_POLYNOMIAL_HPP
#define GRASTAB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

#include "grastab/weyl.hpp"

namespace grastab {

// Sparse homogeneous polynomial in the simple-root variables x_1..x_n with
// arbitrary-precision integer coefficients. A root with coordinates c is the
// linear form sum_i c_i x_i.
class RootPolynomial {
 public:
  using Exponents = std::vector<int>;

  RootPolynomial() = default;
  explicit RootPolynomial(int n) : n_(n) {}
  static RootPolynomial constant(int n, mpz_class c);
  static RootPolynomial linear(const std::vector<int>& root_coords);

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for the zero polynomial
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }

  void add_term(const Exponents& e, const mpz_class& c);

  RootPolynomial operator+(const RootPolynomial& o) const;
  RootPolynomial operator-(const RootPolynomial& o) const;
  RootPolynomial operator*(const RootPolynomial& o) const;
  bool operator==(const RootPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

  // this * (sum_i root_coords[i] x_i), in place.
  void multiply_by_linear(const std::vector<int>& root_coords);

  mpz_class eval(const std::vector<mpz_class>& point) const;

  // Substitute x_j <- x_j - pairing(i, j) x_i for all j (the s_i action).
  RootPolynomial reflected(const CartanMatrix& C, int i) const;

  // (this - s_i this) / x_i; the quotient is always an integer polynomial.
  RootPolynomial divided_difference(const CartanMatrix& C, int i) const;

 private:
  int n_ = 0;
  std::map<Exponents, mpz_class> terms_;
};

}  // namespace grastab

#endif
