#include "grastab/coset.hpp"

#include <algorithm>

namespace grastab {

int CosetTable::count_at(int degree) const {
  if (degree < 0 || degree > top_length) return 0;
  return degree_first_[degree + 1] - degree_first_[degree];
}

int CosetTable::first_at(int degree) const {
  if (degree < 0 || degree > top_length)
    throw std::out_of_range("CosetTable::first_at: degree out of range");
  return degree_first_[degree];
}

int CosetTable::index_of(const WeylElement& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

CosetTable minimal_coset_reps(const CartanMatrix& C, int excluded_node) {
  if (excluded_node < 1 || excluded_node > C.n)
    throw std::invalid_argument("minimal_coset_reps: excluded node out of range");
  std::vector<int> gens;
  for (int i = 1; i <= C.n; ++i)
    if (i != excluded_node) gens.push_back(i);
  return enumerate_quotient(C, gens, excluded_node);
}

CosetTable enumerate_quotient(const CartanMatrix& C,
                              const std::vector<int>& parabolic_gens,
                              int excluded_node) {
  C.validate();
  for (int g : parabolic_gens)
    if (g < 1 || g > C.n)
      throw std::invalid_argument("enumerate_quotient: generator out of range");

  CosetTable t;
  t.cartan = C;
  t.excluded = excluded_node;
  t.parabolic = parabolic_gens;

  auto minimal = [&](const WeylElement& w) {
    for (int g : parabolic_gens)
      if (!w.right_ascent(g)) return false;
    return true;
  };

  std::unordered_map<WeylElement, int, WeylElement::Hash> seen;
  std::vector<WeylElement> level{WeylElement::identity(C)};
  seen.emplace(level[0], 0);
  std::vector<std::vector<WeylElement>> levels;
  while (!level.empty()) {
    levels.push_back(level);
    std::vector<WeylElement> next;
    for (const auto& w : level) {
      for (int i = 1; i <= C.n; ++i) {
        if (!w.left_ascent(i)) continue;
        WeylElement v = w;
        v.lmul_simple(C, i);
        if (seen.count(v) || !minimal(v)) continue;
        seen.emplace(v, 0);
        next.push_back(v);
      }
    }
    level = std::move(next);
  }

  t.top_length = (int)levels.size() - 1;
  for (int l = 0; l <= t.top_length; ++l) {
    std::vector<std::pair<WeylWord, WeylElement>> row;
    for (const auto& w : levels[l]) row.emplace_back(canonical_word(w, C), w);
    std::sort(row.begin(), row.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    t.degree_first_.push_back((int)t.reps.size());
    for (auto& [word, w] : row) {
      t.index_.emplace(w, (int)t.reps.size());
      t.reps.push_back(w);
      t.words.push_back(std::move(word));
      t.lengths.push_back(l);
    }
  }
  t.degree_first_.push_back((int)t.reps.size());

  for (int k = 0; k < t.size(); ++k) {
    if (t.words[k].empty()) {
      t.parent.push_back(-1);
      continue;
    }
    WeylElement p = t.reps[k];
    p.lmul_simple(C, t.words[k][0]);
    int pi = t.index_of(p);
    if (pi < 0) throw std::logic_error("enumerate_quotient: parent not a rep");
    t.parent.push_back(pi);
  }
  return t;
}

}  // namespace grastab
