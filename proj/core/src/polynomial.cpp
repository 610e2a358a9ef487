#include "grastab/polynomial.hpp"

namespace grastab {

RootPolynomial RootPolynomial::constant(int n, mpz_class c) {
  RootPolynomial p(n);
  if (c != 0) p.terms_.emplace(Exponents(n, 0), std::move(c));
  return p;
}

RootPolynomial RootPolynomial::linear(const std::vector<int>& root_coords) {
  RootPolynomial p((int)root_coords.size());
  for (int i = 0; i < p.n_; ++i) {
    if (root_coords[i] == 0) continue;
    Exponents e(p.n_, 0);
    e[i] = 1;
    p.terms_.emplace(std::move(e), root_coords[i]);
  }
  return p;
}

int RootPolynomial::degree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (int e : terms_.begin()->first) d += e;
  return d;
}

void RootPolynomial::add_term(const Exponents& e, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

RootPolynomial RootPolynomial::operator+(const RootPolynomial& o) const {
  RootPolynomial out = *this;
  for (auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

RootPolynomial RootPolynomial::operator-(const RootPolynomial& o) const {
  RootPolynomial out = *this;
  for (auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

RootPolynomial RootPolynomial::operator*(const RootPolynomial& o) const {
  RootPolynomial out(n_);
  Exponents e(n_);
  for (auto& [ea, ca] : terms_)
    for (auto& [eb, cb] : o.terms_) {
      for (int i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

void RootPolynomial::multiply_by_linear(const std::vector<int>& root_coords) {
  RootPolynomial out(n_);
  Exponents e(n_);
  for (auto& [ea, ca] : terms_)
    for (int i = 0; i < n_; ++i) {
      if (root_coords[i] == 0) continue;
      e = ea;
      ++e[i];
      out.add_term(e, ca * root_coords[i]);
    }
  terms_ = std::move(out.terms_);
}

mpz_class RootPolynomial::eval(const std::vector<mpz_class>& point) const {
  mpz_class total = 0, term, p;
  for (auto& [e, c] : terms_) {
    term = c;
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

RootPolynomial RootPolynomial::reflected(const CartanMatrix& C, int i) const {
  int ii = i - 1;
  RootPolynomial out(n_);
  // x_j -> x_j - pairing(i, j) x_i; expand each monomial factor by factor.
  for (auto& [e, c] : terms_) {
    RootPolynomial m = constant(n_, c);
    for (int j = 0; j < n_; ++j) {
      if (e[j] == 0) continue;
      std::vector<int> img(n_, 0);
      img[j] += 1;
      img[ii] -= C.pairing(ii, j);
      RootPolynomial lin = linear(img);
      for (int k = 0; k < e[j]; ++k) m = m * lin;
    }
    out = out + m;
  }
  return out;
}

RootPolynomial RootPolynomial::divided_difference(const CartanMatrix& C,
                                                  int i) const {
  RootPolynomial num = *this - reflected(C, i);
  int ii = i - 1;
  RootPolynomial out(n_);
  for (auto& [e, c] : num.terms_) {
    if (e[ii] < 1)
      throw std::logic_error("divided_difference: numerator not divisible");
    Exponents q = e;
    --q[ii];
    out.terms_.emplace(std::move(q), c);
  }
  return out;
}

}  // namespace grastab
