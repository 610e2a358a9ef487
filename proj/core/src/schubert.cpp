#include "grastab/schubert.hpp"

#include <algorithm>

namespace grastab {

namespace {
constexpr int kPrimes[kMaxRank] = {5, 7, 11, 13, 17, 19, 23, 29};
}

SchubertEngine::SchubertEngine(const CartanMatrix& C, int excluded_node,
                               size_t restriction_cache_cap)
    : C_(C),
      excluded_(excluded_node),
      table_(minimal_coset_reps(C, excluded_node)),
      bcap_(restriction_cache_cap) {
  roots_ = positive_roots(C_);
  for (const auto& beta : roots_) {
    reflections_.push_back(WeylElement::reflection(C_, beta));
    euler_weight_.push_back(beta.coroot_coords[excluded_ - 1]);
  }
  for (int i = 0; i < C_.n; ++i) point_.push_back(kPrimes[i]);

  // Right weak order ideal generated by the reps: close downward by
  // removing right descents.
  std::vector<int> length_of;
  std::vector<WeylElement> frontier;
  auto add = [&](const WeylElement& w, int len) {
    if (weak_index_.count(w)) return;
    weak_index_.emplace(w, (int)weak_.size());
    weak_.push_back(w);
    length_of.push_back(len);
    frontier.push_back(w);
  };
  for (int k = 0; k < table_.size(); ++k)
    add(table_.reps[k], table_.lengths[k]);
  for (size_t q = 0; q < frontier.size(); ++q) {
    WeylElement w = frontier[q];
    int len = length_of[weak_index_.at(w)];
    for (int i = 1; i <= C_.n; ++i) {
      if (w.right_ascent(i)) continue;
      WeylElement v = w;
      v.rmul_simple(C_, i);
      add(v, len - 1);
    }
  }
  up_.assign(weak_.size() * kMaxRank, -1);
  for (size_t z = 0; z < weak_.size(); ++z)
    for (int i = 1; i <= C_.n; ++i) {
      if (!weak_[z].right_ascent(i)) continue;
      WeylElement v = weak_[z];
      v.rmul_simple(C_, i);
      auto it = weak_index_.find(v);
      if (it != weak_index_.end()) up_[z * kMaxRank + (i - 1)] = it->second;
    }
  by_length_desc_.resize(weak_.size());
  for (size_t z = 0; z < weak_.size(); ++z) by_length_desc_[z] = (int)z;
  std::stable_sort(by_length_desc_.begin(), by_length_desc_.end(),
                   [&](int a, int b) { return length_of[a] > length_of[b]; });
  weak_rep_.resize(weak_.size());
  for (size_t z = 0; z < weak_.size(); ++z)
    weak_rep_[z] = table_.index_of(weak_[z]);

  restr_once_ = std::make_unique<std::once_flag[]>(table_.size());
  restr_.resize(table_.size());
}

CohomElement SchubertEngine::class_element(int rep_index) const {
  CohomElement e;
  e.degree = table_.lengths[rep_index];
  e.coeffs[rep_index] = 1;
  return e;
}

CohomElement SchubertEngine::chevalley_class(int rep_index) const {
  int l = table_.lengths[rep_index];
  CohomElement out;
  out.degree = l + 1;
  for (size_t r = 0; r < roots_.size(); ++r) {
    if (euler_weight_[r] == 0) continue;
    WeylElement v = table_.reps[rep_index].multiplied(reflections_[r]);
    int idx = table_.index_of(v);
    if (idx < 0 || table_.lengths[idx] != l + 1) continue;
    auto [it, fresh] = out.coeffs.emplace(idx, euler_weight_[r]);
    if (!fresh) it->second += euler_weight_[r];
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = (it->second == 0) ? out.coeffs.erase(it) : std::next(it);
  return out;
}

CohomElement SchubertEngine::chevalley_multiply(const CohomElement& a) const {
  CohomElement out;
  out.degree = a.degree + 1;
  for (auto& [idx, c] : a.coeffs) {
    CohomElement part = chevalley_class(idx);
    for (auto& [j, w] : part.coeffs) {
      auto [it, fresh] = out.coeffs.emplace(j, c * w);
      if (!fresh) it->second += c * w;
      if (it->second == 0) out.coeffs.erase(it);
    }
  }
  return out;
}

IntMatrix SchubertEngine::euler_matrix(int k) const {
  if (k < 1 || k > table_.top_length + 1)
    throw std::out_of_range("euler_matrix: k out of range");
  int nr = table_.count_at(k - 1), nc = table_.count_at(k);
  IntMatrix A(nr, nc);
  int r0 = (nr > 0) ? table_.first_at(k - 1) : 0;
  int c0 = (nc > 0) ? table_.first_at(k) : 0;
  for (int r = 0; r < nr; ++r) {
    CohomElement e = chevalley_class(r0 + r);
    for (auto& [idx, c] : e.coeffs) A.at(r, idx - c0) = c;
  }
  for (int r = 0; r < nr; ++r)
    A.row_labels.push_back("s_{" + std::to_string(k - 1) + "," +
                           std::to_string(r + 1) + "}");
  for (int c = 0; c < nc; ++c)
    A.col_labels.push_back("s_{" + std::to_string(k) + "," +
                           std::to_string(c + 1) + "}");
  return A;
}

void SchubertEngine::compute_restrictions(int w_index) const {
  const WeylWord& word = table_.words[w_index];
  std::vector<mpz_class> A(weak_.size());
  A[weak_index_.at(WeylElement::identity(C_))] = 1;
  WeylElement prefix = WeylElement::identity(C_);
  std::vector<int> e(C_.n, 0);
  for (int letter : word) {
    e.assign(C_.n, 0);
    e[letter - 1] = 1;
    auto coords = prefix.apply(e);
    mpz_class g = 0;
    for (int j = 0; j < C_.n; ++j) g += coords[j] * point_[j];
    // Sources in decreasing length: a source is never a target of an
    // earlier update within the same position.
    for (int z : by_length_desc_) {
      if (A[z] == 0) continue;
      int up = up_[(size_t)z * kMaxRank + (letter - 1)];
      if (up >= 0) A[up] += A[z] * g;
    }
    prefix.rmul_simple(C_, letter);
  }
  std::vector<mpz_class> out(table_.size());
  for (size_t z = 0; z < weak_.size(); ++z)
    if (weak_rep_[z] >= 0) out[weak_rep_[z]] = std::move(A[z]);
  restr_[w_index] = std::move(out);
}

const std::vector<mpz_class>& SchubertEngine::restrictions_at(
    int w_index) const {
  std::call_once(restr_once_[w_index],
                 [&] { compute_restrictions(w_index); });
  return restr_[w_index];
}

size_t SchubertEngine::BilleyKeyHash::operator()(const BilleyKey& k) const {
  return hash_key(k.first, kMaxRank) * 31 + hash_key(k.second, kMaxRank);
}

RootPolynomial SchubertEngine::billey_restriction(const WeylElement& u,
                                                  const WeylElement& x) const {
  BilleyKey key{u.key(), x.key()};
  {
    std::lock_guard<std::mutex> lock(bmu_);
    auto it = bcache_.find(key);
    if (it != bcache_.end()) {
      blru_.splice(blru_.begin(), blru_, it->second.second);
      return it->second.first;
    }
  }

  int lu = length(u, C_);
  struct State {
    int len;
    RootPolynomial p;
  };
  std::unordered_map<WeylElement, State, WeylElement::Hash> cur;
  cur.emplace(WeylElement::identity(C_),
              State{0, RootPolynomial::constant(C_.n, 1)});
  WeylElement prefix = WeylElement::identity(C_);
  std::vector<int> e(C_.n, 0);
  for (int letter : canonical_word(x, C_)) {
    e.assign(C_.n, 0);
    e[letter - 1] = 1;
    auto coords = prefix.apply(e);
    auto next = cur;
    for (auto& [z, st] : cur) {
      if (!z.right_ascent(letter)) continue;
      if (st.len + 1 > lu) continue;
      WeylElement z2 = z;
      z2.rmul_simple(C_, letter);
      if (!bruhat_leq(z2, u, C_)) continue;
      RootPolynomial term = st.p;
      term.multiply_by_linear(coords);
      auto it = next.find(z2);
      if (it == next.end())
        next.emplace(z2, State{st.len + 1, std::move(term)});
      else
        it->second.p = it->second.p + term;
    }
    cur = std::move(next);
    prefix.rmul_simple(C_, letter);
  }
  RootPolynomial result(C_.n);
  auto it = cur.find(u);
  if (it != cur.end()) result = it->second.p;

  std::lock_guard<std::mutex> lock(bmu_);
  if (!bcache_.count(key)) {
    blru_.push_front(key);
    bcache_.emplace(key, std::make_pair(result, blru_.begin()));
    while (bcache_.size() > bcap_) {
      bcache_.erase(blru_.back());
      blru_.pop_back();
    }
  }
  return result;
}

std::map<int, mpz_class> SchubertEngine::product_constants_uncached(
    int u, int v) const {
  int d = table_.lengths[u] + table_.lengths[v];
  std::map<int, mpz_class> p;
  if (d > table_.top_length) return p;
  mpz_class num, q;
  for (int w = 0; w < table_.size() && table_.lengths[w] <= d; ++w) {
    if (!bruhat_leq(table_.reps[u], table_.reps[w], C_)) continue;
    if (!bruhat_leq(table_.reps[v], table_.reps[w], C_)) continue;
    const auto& R = restrictions_at(w);
    num = R[u] * R[v];
    for (auto& [wi, pv] : p) num -= pv * R[wi];
    if (R[w] == 0)
      throw std::logic_error("product_constants: vanishing diagonal");
    if (!mpz_divisible_p(num.get_mpz_t(), R[w].get_mpz_t()))
      throw std::logic_error("product_constants: inexact division");
    q = num / R[w];
    if (q != 0) p.emplace(w, q);
  }
  std::map<int, mpz_class> out;
  for (auto& [w, c] : p)
    if (table_.lengths[w] == d) {
      if (c < 0)
        throw std::logic_error("product_constants: negative constant");
      out.emplace(w, c);
    }
  return out;
}

std::map<int, mpz_class> SchubertEngine::product_constants(int u_index,
                                                           int v_index) const {
  std::pair<int, int> key{std::min(u_index, v_index),
                          std::max(u_index, v_index)};
  {
    std::lock_guard<std::mutex> lock(pmu_);
    auto it = pcache_.find(key);
    if (it != pcache_.end()) return *it->second;
  }
  auto result = std::make_shared<const std::map<int, mpz_class>>(
      product_constants_uncached(key.first, key.second));
  std::lock_guard<std::mutex> lock(pmu_);
  auto [it, fresh] = pcache_.emplace(key, result);
  return *it->second;
}

CohomElement SchubertEngine::multiply(const CohomElement& a,
                                      const CohomElement& b) const {
  CohomElement out;
  out.degree = a.degree + b.degree;
  if (out.degree > table_.top_length) return out;
  for (auto& [ia, ca] : a.coeffs)
    for (auto& [ib, cb] : b.coeffs) {
      auto pc = product_constants(ia, ib);
      for (auto& [w, c] : pc) {
        auto [it, fresh] = out.coeffs.emplace(w, ca * cb * c);
        if (!fresh) it->second += ca * cb * c;
        if (it->second == 0) out.coeffs.erase(it);
      }
    }
  return out;
}

}  // namespace grastab
