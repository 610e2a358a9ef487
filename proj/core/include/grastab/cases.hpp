#ifndef GRASTAB_CASES_HPP
#define GRASTAB_CASES_HPP

#include <set>

#include "grastab/fixtures.hpp"
#include "grastab/schubert.hpp"

namespace grastab {

// The per-case configuration: which node is removed, what generates the
// even subring, and which monomial bases the structure matrices use. The
// bindings come from the fixture document for the case.
struct CaseSpec {
  std::string case_id;  // "F4:C3"
  std::string group;    // "F4"
  std::string subgroup; // "C3"
  int excluded_node = 0;
  int top_length = 0;
  std::vector<Fixture::CosetRow> cosets;  // reference (i, j) -> word table
  std::map<int, Fixture::ClassRef> generators;  // y_degree -> class
  std::map<int, std::vector<Fixture::Monomial>> monomial_bases;
  std::vector<Fixture::RingIdentity> ring;  // reference ring identities
  std::vector<int> m_list;
  std::set<int> extended_m;  // degrees gated behind the extended flag
};

const std::vector<std::string>& builtin_case_ids();  // the seven cases

// Populate a spec from its fixture; validates generator/monomial coherence.
CaseSpec case_spec(const std::string& case_id, const Fixture& fx);

// One additive summand table row: H^degree.
struct AdditiveEntry {
  int degree = 0;
  bool even = false;
  std::vector<mpz_class> factors;  // 0 = free summand, d >= 2 = cyclic
  CokerPresentation pres;          // even degrees
  LatticeBasis kernel;             // odd degrees; ambient = classes one
                                   // cohomological degree down
};
using GradedGroupTable = std::vector<AdditiveEntry>;

// One verified multiplicative identity: product(lhs) = coef * target in the
// additive group of the target degree.
struct RingEntry {
  std::vector<Fixture::RingFactor> lhs;
  mpz_class coef;
  Fixture::ClassRef target;
  mpz_class modulus;  // order of the target summand, 0 for a free one
};
using RingTable = std::vector<RingEntry>;

// Orchestrates one case: owns the Schubert engine and derives every table.
class CaseEngine {
 public:
  explicit CaseEngine(const CaseSpec& spec, int threads = 1);

  const CaseSpec& spec() const { return spec_; }
  const SchubertEngine& engine() const { return eng_; }
  int threads() const { return threads_; }

  // Rep index of the class the reference table calls s_{i,j}; throws if the
  // reference words do not enumerate our minimal representatives.
  int rep_of(int i, int j) const;
  // Inverse map: reference position j of a rep index within its degree.
  int reference_j(int rep_index) const;

  // A_k with rows and columns in reference (j) order.
  IntMatrix euler_matrix(int k) const;

  GradedGroupTable additive_table() const;
  const AdditiveEntry& additive_at(int degree) const;  // computed lazily

  // Expansion of a product of generator powers in the Schubert basis.
  // Degrees beyond the top return zero with *overflow set.
  CohomElement monomial_expand(const Fixture::Monomial& mono,
                               bool* overflow = nullptr) const;

  // Rows = monomials of B(2m) in reference order, cols = degree-m classes
  // in reference (j) order.
  IntMatrix structure_matrix(int m) const;

  // Relations among the monomials of B(2m): saturated left kernel of the
  // structure matrix.
  LatticeBasis nullspace_table(int m) const;

  // Verifies each reference ring identity and records the solved
  // coefficient; entries whose identity fails keep the computed value and
  // are flagged by verify_case.
  RingTable ring_table() const;

  // Coefficient vector of e over the classes of its degree, reference order.
  std::vector<mpz_class> class_vector(const CohomElement& e) const;

 private:
  CaseSpec spec_;
  SchubertEngine eng_;
  int threads_ = 1;
  std::vector<int> ij_to_rep_;   // flattened via degree offsets
  mutable std::mutex amu_;
  mutable std::map<int, AdditiveEntry> additive_cache_;
};

// Smallest-magnitude integer c with v = c * w in the group presented by P;
// returns false when no such scalar exists.
bool solve_scalar(const std::vector<mpz_class>& v,
                  const std::vector<mpz_class>& w, const CokerPresentation& P,
                  mpz_class* out);

}  // namespace grastab

#endif
