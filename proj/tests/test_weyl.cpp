#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "grastab/coset.hpp"

using namespace grastab;

TEST_CASE("positive root counts") {
  std::map<std::string, int> expect = {
      {"A2", 3},  {"A3", 6},  {"B2", 4},  {"B3", 9},  {"C3", 9},
      {"D4", 12}, {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (auto& [label, count] : expect) {
    CHECK((int)positive_roots(cartan_matrix(label)).size() == count);
  }
}

TEST_CASE("reflection is an involution on both bases") {
  CartanMatrix C = cartan_matrix("F4");
  for (auto& beta : positive_roots(C)) {
    for (int i = 1; i <= C.n; ++i) {
      CHECK(reflect(C, i, reflect(C, i, beta.root_coords, Basis::root),
                    Basis::root) == beta.root_coords);
      CHECK(reflect(C, i, reflect(C, i, beta.coroot_coords, Basis::coroot),
                    Basis::coroot) == beta.coroot_coords);
    }
  }
}

TEST_CASE("full group enumeration sizes") {
  CHECK(enumerate_quotient(cartan_matrix("A2"), {}).size() == 6);
  CHECK(enumerate_quotient(cartan_matrix("B2"), {}).size() == 8);
  CHECK(enumerate_quotient(cartan_matrix("A3"), {}).size() == 24);
  CHECK(enumerate_quotient(cartan_matrix("B3"), {}).size() == 48);
}

TEST_CASE("canonical words are reduced and faithful") {
  CartanMatrix C = cartan_matrix("B3");
  CosetTable T = enumerate_quotient(C, {});
  std::set<WeylWord> seen;
  for (int k = 0; k < T.size(); ++k) {
    const WeylElement& w = T.reps[k];
    WeylWord word = canonical_word(w, C);
    CHECK((int)word.size() == length(w, C));
    CHECK(element_of(word, C) == w);
    CHECK(seen.insert(word).second);
  }
}

TEST_CASE("ascent flags agree with length") {
  CartanMatrix C = cartan_matrix("C3");
  CosetTable T = enumerate_quotient(C, {});
  for (auto& w : T.reps) {
    int l = length(w, C);
    for (int i = 1; i <= C.n; ++i) {
      WeylElement r = w;
      r.rmul_simple(C, i);
      CHECK(w.right_ascent(i) == (length(r, C) > l));
      WeylElement s = w;
      s.lmul_simple(C, i);
      CHECK(w.left_ascent(i) == (length(s, C) > l));
    }
  }
}

TEST_CASE("inverse and products are consistent") {
  CartanMatrix C = cartan_matrix("F4");
  WeylElement a = element_of({1, 2, 3, 2, 4}, C);
  WeylElement b = element_of({4, 3, 1, 2}, C);
  CHECK(a.multiplied(a.inverse()).is_identity());
  CHECK(a.multiplied(b).inverse() == b.inverse().multiplied(a.inverse()));
}

namespace {

// Subword property by exhaustion: u <= w iff some subword of one reduced
// word of w multiplies to u.
bool bruhat_brute(const WeylElement& u, const WeylElement& w,
                  const CartanMatrix& C) {
  WeylWord word = canonical_word(w, C);
  int k = (int)word.size();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    WeylElement p = WeylElement::identity(C);
    for (int t = 0; t < k; ++t)
      if (mask & (1u << t)) p.rmul_simple(C, word[t]);
    if (p == u) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("bruhat order matches the subword property") {
  for (const char* label : {"B2", "A3"}) {
    CartanMatrix C = cartan_matrix(label);
    CosetTable T = enumerate_quotient(C, {});
    for (auto& u : T.reps)
      for (auto& w : T.reps)
        CHECK(bruhat_leq(u, w, C) == bruhat_brute(u, w, C));
  }
}

TEST_CASE("minimal representative counts for the seven quotients") {
  struct Row {
    const char* group;
    int node, count, top;
  };
  for (auto& r : std::initializer_list<Row>{{"F4", 1, 24, 15},
                                            {"F4", 4, 24, 15},
                                            {"E6", 2, 72, 21},
                                            {"E6", 6, 27, 16},
                                            {"E7", 7, 56, 27},
                                            {"E7", 1, 126, 33},
                                            {"E8", 8, 240, 57}}) {
    CosetTable T = minimal_coset_reps(cartan_matrix(r.group), r.node);
    CHECK(T.size() == r.count);
    CHECK(T.top_length == r.top);
    // Minimality: no right descent among the parabolic generators.
    for (auto& w : T.reps)
      for (int i = 1; i <= T.cartan.n; ++i)
        if (i != r.node) CHECK(w.right_ascent(i));
  }
}
