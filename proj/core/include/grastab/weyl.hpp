#ifndef GRASTAB_WEYL_HPP
#define GRASTAB_WEYL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "grastab/cartan.hpp"

namespace grastab {

// A root together with its coroot, both in simple-(co)root coordinates.
// The pair is closed under the simple reflections.
struct Root {
  std::vector<int> root_coords;
  std::vector<int> coroot_coords;
};

enum class Basis { root, coroot };

// s_i applied to a coordinate vector; i is 1-based.
std::vector<int> reflect(const CartanMatrix& C, int i, std::vector<int> v,
                         Basis basis);

// All positive roots by reflection closure; simple roots first, then by
// height and lexicographic coordinates. Throws if the closure does not
// terminate within a depth cap (invalid matrix).
std::vector<Root> positive_roots(const CartanMatrix& C);

// Letters are 1-based simple-root indices; a word multiplies left to right,
// i.e. [a, b] is the element s_a * s_b.
using WeylWord = std::vector<int>;

constexpr int kMaxRank = 8;

// A Weyl group element, identified by its action on the simple roots.
// mat column j = image of alpha_j in root coordinates; inv = inverse action.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(const CartanMatrix& C);
  static WeylElement simple(const CartanMatrix& C, int i);  // 1-based
  // The reflection s_beta: alpha_j -> alpha_j - <alpha_j, beta^vee> beta.
  static WeylElement reflection(const CartanMatrix& C, const Root& beta);

  int rank() const { return n_; }

  // Compact row-major key for hashing and equality.
  using Key = std::array<int8_t, kMaxRank * kMaxRank>;
  const Key& key() const { return mat_; }

  int mat(int r, int c) const { return mat_[r * kMaxRank + c]; }
  int inv(int r, int c) const { return inv_[r * kMaxRank + c]; }

  bool operator==(const WeylElement& o) const { return mat_ == o.mat_; }

  std::vector<int> apply(const std::vector<int>& root_coords) const;
  std::vector<int> apply_inverse(const std::vector<int>& root_coords) const;

  // In-place products with a simple reflection (1-based i).
  void lmul_simple(const CartanMatrix& C, int i);  // this <- s_i * this
  void rmul_simple(const CartanMatrix& C, int i);  // this <- this * s_i

  WeylElement multiplied(const WeylElement& rhs) const;  // this * rhs
  WeylElement inverse() const;

  // true iff l(this * s_i) > l(this); equivalently this(alpha_i) > 0.
  bool right_ascent(int i) const;
  // true iff l(s_i * this) > l(this); equivalently this^{-1}(alpha_i) > 0.
  bool left_ascent(int i) const;

  bool is_identity() const;

  struct Hash {
    size_t operator()(const WeylElement& w) const;
  };

 private:
  int n_ = 0;
  Key mat_{};
  Key inv_{};
};

size_t hash_key(const WeylElement::Key& k, int n);

// Product of simple reflections in left-to-right word order.
WeylElement element_of(const WeylWord& word, const CartanMatrix& C);

// Inversion count: number of positive roots mapped to negative ones.
int length(const WeylElement& w, const CartanMatrix& C);

// Lexicographically minimal reduced word (greedy smallest left descent).
WeylWord canonical_word(const WeylElement& w, const CartanMatrix& C);

// Bruhat order by the subword property, computed with the lifting
// recursion (linear in l(w) per call), not an exhaustive subword scan.
bool bruhat_leq(const WeylElement& u, const WeylElement& w,
                const CartanMatrix& C);

}  // namespace grastab

#endif
