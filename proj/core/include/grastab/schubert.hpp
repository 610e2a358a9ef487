#ifndef GRASTAB_SCHUBERT_HPP
#define GRASTAB_SCHUBERT_HPP

#include <gmpxx.h>

#include <list>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "grastab/coset.hpp"
#include "grastab/intlat.hpp"
#include "grastab/polynomial.hpp"

namespace grastab {

// Homogeneous cohomology element; keys are CosetTable rep indices, all of
// the stored degree. Zero coefficients are never stored.
struct CohomElement {
  int degree = 0;
  std::map<int, mpz_class> coeffs;
  bool is_zero() const { return coeffs.empty(); }
};

// Schubert calculus on W^P for a maximal parabolic: Chevalley products with
// the degree-1 class, Billey restrictions, and full structure constants via
// an equivariant triangular solve. All results are exact; every internal
// division is checked and an inexact one aborts.
class SchubertEngine {
 public:
  SchubertEngine(const CartanMatrix& C, int excluded_node,
                 size_t restriction_cache_cap = 1 << 14);

  const CartanMatrix& cartan() const { return C_; }
  int excluded() const { return excluded_; }
  const CosetTable& cosets() const { return table_; }

  CohomElement class_element(int rep_index) const;

  // Product with the degree-1 class: coefficient of u*s_beta is the coroot
  // coordinate of beta at the excluded node.
  CohomElement chevalley_class(int rep_index) const;
  CohomElement chevalley_multiply(const CohomElement& a) const;

  // Rows = degree-(k-1) classes, cols = degree-k classes, entry = Chevalley
  // coefficient. Valid for 1 <= k <= top_length + 1 (boundary sizes 0).
  IntMatrix euler_matrix(int k) const;

  // Billey's restriction xi^u(x) as a polynomial in the simple roots;
  // zero iff u is not below x in Bruhat order. LRU-memoized.
  RootPolynomial billey_restriction(const WeylElement& u,
                                    const WeylElement& x) const;

  // Structure constants of s_u * s_v: map from rep index (at degree
  // l(u)+l(v)) to coefficient. All coefficients are nonnegative.
  std::map<int, mpz_class> product_constants(int u_index, int v_index) const;

  CohomElement multiply(const CohomElement& a, const CohomElement& b) const;

  // xi^u(reps[w_index]) evaluated at the fixed positive integer point, for
  // every rep u at once (index = rep index). Cached per w.
  const std::vector<mpz_class>& restrictions_at(int w_index) const;

 private:
  CartanMatrix C_;
  int excluded_;
  CosetTable table_;
  std::vector<Root> roots_;
  std::vector<WeylElement> reflections_;  // s_beta per positive root
  std::vector<int> euler_weight_;         // coroot coord at excluded node
  std::vector<mpz_class> point_;          // fixed positive evaluation point

  // Union of the right weak order ideals of all reps: every state the
  // restriction DP can pass through. up_[z * rank + (i-1)] = id of z*s_i
  // when that stays in the set, else -1. by_length_desc_ orders ids so that
  // in-place DP updates read only not-yet-updated sources.
  std::vector<WeylElement> weak_;
  std::unordered_map<WeylElement, int, WeylElement::Hash> weak_index_;
  std::vector<int> up_;
  std::vector<int> by_length_desc_;
  std::vector<int> weak_rep_;  // rep index of each weak element, or -1

  mutable std::unique_ptr<std::once_flag[]> restr_once_;
  mutable std::vector<std::vector<mpz_class>> restr_;

  struct PairHash {
    size_t operator()(const std::pair<int, int>& p) const {
      return (size_t)p.first * 1000003u + (size_t)p.second;
    }
  };
  mutable std::mutex pmu_;
  mutable std::unordered_map<std::pair<int, int>,
                             std::shared_ptr<const std::map<int, mpz_class>>,
                             PairHash>
      pcache_;

  using BilleyKey = std::pair<WeylElement::Key, WeylElement::Key>;
  struct BilleyKeyHash {
    size_t operator()(const BilleyKey& k) const;
  };
  mutable std::mutex bmu_;
  mutable std::list<BilleyKey> blru_;
  mutable std::unordered_map<
      BilleyKey,
      std::pair<RootPolynomial, std::list<BilleyKey>::iterator>, BilleyKeyHash>
      bcache_;
  size_t bcap_;

  void compute_restrictions(int w_index) const;
  std::map<int, mpz_class> product_constants_uncached(int u, int v) const;
};

}  // namespace grastab

#endif
