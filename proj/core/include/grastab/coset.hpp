#ifndef GRASTAB_COSET_HPP
#define GRASTAB_COSET_HPP

#include <unordered_map>
#include <vector>

#include "grastab/weyl.hpp"

namespace grastab {

// Minimal-length representatives of the cosets w * W_P, where W_P is the
// parabolic subgroup generated by the listed simple reflections. A rep is
// minimal iff it has no right descent among the parabolic generators.
struct CosetTable {
  CartanMatrix cartan;
  int excluded = 0;            // 1-based node defining the quotient; 0 if a
                               // generator list was given directly
  std::vector<int> parabolic;  // 1-based generators of W_P

  // Reps sorted by (length, canonical word). The set of reps is closed
  // under left descents, so parent[k] (the rep s_i * reps[k] for the
  // smallest left descent i = words[k][0]) is always present; -1 for the
  // identity.
  std::vector<WeylElement> reps;
  std::vector<WeylWord> words;
  std::vector<int> lengths;
  std::vector<int> parent;
  int top_length = 0;

  int size() const { return (int)reps.size(); }
  int count_at(int degree) const;
  int first_at(int degree) const;  // index of the first rep of that length
  int index_of(const WeylElement& w) const;  // -1 if not a minimal rep

 private:
  friend CosetTable enumerate_quotient(const CartanMatrix&,
                                       const std::vector<int>&, int);
  std::unordered_map<WeylElement, int, WeylElement::Hash> index_;
  std::vector<int> degree_first_;  // first_at per length, plus a sentinel
};

// Quotient by the maximal parabolic omitting one node (1-based).
CosetTable minimal_coset_reps(const CartanMatrix& C, int excluded_node);

// Quotient by an arbitrary standard parabolic; an empty generator list
// enumerates the whole group.
CosetTable enumerate_quotient(const CartanMatrix& C,
                              const std::vector<int>& parabolic_gens,
                              int excluded_node = 0);

}  // namespace grastab

#endif
