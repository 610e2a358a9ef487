#ifndef GRASTAB_FIXTURES_HPP
#define GRASTAB_FIXTURES_HPP

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grastab/weyl.hpp"

namespace grastab {

// Reference tables for one case, loaded from a JSON document. Classes are
// identified by (i, j): degree i, 1-based position j in the table's own
// ordering of that degree. Monomials are lists of (generator degree,
// exponent) factors.
struct Fixture {
  struct ClassRef {
    int i = 0, j = 0;
    bool operator==(const ClassRef& o) const { return i == o.i && j == o.j; }
  };
  struct KernelTerm {
    mpz_class coef;
    int i = 0, j = 0;
  };
  struct Generator {
    enum class Type { none, cls, kernel };
    Type type = Type::none;
    ClassRef cls;                   // type == cls
    std::vector<KernelTerm> terms;  // type == kernel
    std::string alias;              // e.g. "d_59"
  };
  struct RelationFactor {
    int degree = 0, exponent = 0, j = 0;  // y_degree^exponent, y_degree = s_{degree,j}
  };
  struct Relation {
    std::vector<RelationFactor> classes;
    bool d59 = false;  // multiply by the degree-59 kernel class
  };
  struct AdditiveRow {
    int degree = 0;
    std::vector<mpz_class> factors;  // cyclic orders, 0 = free summand
    Generator generator;
    std::optional<Relation> relation;
  };
  struct RingFactor {
    int i = 0, j = 0, exponent = 0;  // s_{i,j}^exponent
  };
  struct RingIdentity {
    std::vector<RingFactor> lhs;
    mpz_class coef;
    ClassRef target;
  };
  struct CosetRow {
    int i = 0, j = 0;
    WeylWord word;
  };
  struct MonomialFactor {
    int degree = 0, exponent = 0;
  };
  using Monomial = std::vector<MonomialFactor>;
  struct StructureTable {
    std::string orientation;  // "classes_x_monomials" or "monomials_x_classes"
    std::vector<std::vector<mpz_class>> matrix;
  };

  int schema_version = 0;
  std::string case_id, group, subgroup_label;
  int excluded_node = 0, top_length = 0;
  std::vector<CosetRow> cosets;
  std::map<int, std::vector<std::vector<mpz_class>>> euler;  // k -> A_k
  std::vector<AdditiveRow> additive;
  std::vector<RingIdentity> ring;
  std::map<int, ClassRef> generators;  // y_degree -> class
  std::map<int, std::vector<Monomial>> monomial_bases;  // m -> B(2m)
  std::map<int, StructureTable> structure;              // m -> M(pi_m)
  std::map<int, std::vector<std::vector<mpz_class>>> nullspace;  // m -> rows
  std::vector<std::string> notes;
};

// "F4:C3" -> "f4_c3.json"
std::string fixture_filename(const std::string& case_id);

// Parse and validate one fixture document. Throws std::runtime_error with a
// descriptive message on schema violations or dimension inconsistencies.
Fixture parse_fixture(const std::string& json_text);
Fixture load_fixture(const std::string& path);

// Canonical JSON serialization; load_fixture(serialize) round-trips.
std::string serialize_fixture(const Fixture& fx);

struct FixtureSet {
  std::map<std::string, Fixture> by_case;  // keyed by case_id
};

// Loads <dir>/<fixture_filename(id)> for each requested case id.
FixtureSet load_fixtures(const std::string& dir,
                         const std::vector<std::string>& case_ids);

}  // namespace grastab

#endif
