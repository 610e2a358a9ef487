#ifndef GRASTAB_CARTAN_HPP
#define GRASTAB_CARTAN_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace grastab {

// Generalized Cartan matrix of a finite crystallographic root system.
// Indices are 0-based internally; the public string/word notation is 1-based.
struct CartanMatrix {
  int n = 0;
  std::vector<int> entries;  // row-major n*n
  std::string label;

  int at(int i, int j) const { return entries[i * n + j]; }

  // Pairing <alpha_j, alpha_i^vee> used by every reflection in this library:
  // s_i(alpha_j) = alpha_j - pairing(i, j) * alpha_i. The orientation of the
  // stored matrix relative to this pairing is fixed here once; it is pinned
  // by the bootstrap test that reproduces the known degree-1 multiplication
  // matrices, and flipping it transposes every table of the F4 cases.
  static constexpr bool kPairingTransposed = true;
  int pairing(int i, int j) const {
    return kPairingTransposed ? at(j, i) : at(i, j);
  }

  void validate() const;
};

// label in {A<n>, B<n>, C<n>, D<n>, F4, E6, E7, E8}, e.g. "A2", "D5", "E8".
// Exceptional matrices use the Bourbaki node numbering.
CartanMatrix cartan_matrix(const std::string& label);

}  // namespace grastab

#endif
