#include "grastab/weyl.hpp"

#include <algorithm>
#include <cstring>
#include <map>

namespace grastab {

std::vector<int> reflect(const CartanMatrix& C, int i, std::vector<int> v,
                         Basis basis) {
  if (i < 1 || i > C.n) throw std::invalid_argument("reflect: index out of range");
  if ((int)v.size() != C.n) throw std::invalid_argument("reflect: bad vector size");
  int ii = i - 1;
  long long s = 0;
  for (int j = 0; j < C.n; ++j)
    s += (long long)(basis == Basis::root ? C.pairing(ii, j) : C.pairing(j, ii)) * v[j];
  v[ii] -= (int)s;
  return v;
}

std::vector<Root> positive_roots(const CartanMatrix& C) {
  C.validate();
  const int n = C.n;
  std::map<std::vector<int>, std::vector<int>> seen;  // root -> coroot
  std::vector<std::pair<std::vector<int>, std::vector<int>>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> r(n, 0), c(n, 0);
    r[i] = 1;
    c[i] = 1;
    seen.emplace(r, c);
    queue.emplace_back(r, c);
  }
  constexpr size_t kCap = 4096;  // far above the 120 roots of E8
  while (!queue.empty()) {
    auto [r, c] = queue.back();
    queue.pop_back();
    for (int i = 1; i <= n; ++i) {
      auto r2 = reflect(C, i, r, Basis::root);
      bool pos = std::all_of(r2.begin(), r2.end(), [](int x) { return x >= 0; });
      if (!pos) continue;
      if (seen.count(r2)) continue;
      auto c2 = reflect(C, i, c, Basis::coroot);
      seen.emplace(r2, c2);
      queue.emplace_back(std::move(r2), std::move(c2));
      if (seen.size() > kCap)
        throw std::runtime_error("positive_roots: closure did not terminate");
    }
  }
  std::vector<Root> out;
  for (int i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    out.push_back({r, seen.at(r)});
  }
  std::vector<std::pair<int, std::vector<int>>> rest;
  for (auto& [r, c] : seen) {
    int h = 0;
    for (int x : r) h += x;
    if (h > 1) rest.push_back({h, r});
  }
  std::sort(rest.begin(), rest.end());
  for (auto& [h, r] : rest) out.push_back({r, seen.at(r)});
  return out;
}

WeylElement WeylElement::identity(const CartanMatrix& C) {
  WeylElement w;
  w.n_ = C.n;
  for (int i = 0; i < C.n; ++i) {
    w.mat_[i * kMaxRank + i] = 1;
    w.inv_[i * kMaxRank + i] = 1;
  }
  return w;
}

WeylElement WeylElement::simple(const CartanMatrix& C, int i) {
  WeylElement w = identity(C);
  w.rmul_simple(C, i);
  return w;
}

WeylElement WeylElement::reflection(const CartanMatrix& C, const Root& beta) {
  WeylElement w;
  w.n_ = C.n;
  for (int j = 0; j < C.n; ++j) {
    long long pair = 0;  // <alpha_j, beta^vee>
    for (int k = 0; k < C.n; ++k)
      pair += (long long)beta.coroot_coords[k] * C.pairing(k, j);
    for (int r = 0; r < C.n; ++r) {
      long long v = (r == j ? 1 : 0) - pair * beta.root_coords[r];
      w.mat_[r * kMaxRank + j] = (int8_t)v;
    }
  }
  w.inv_ = w.mat_;  // an involution
  return w;
}

std::vector<int> WeylElement::apply(const std::vector<int>& v) const {
  std::vector<int> out(n_, 0);
  for (int r = 0; r < n_; ++r) {
    long long s = 0;
    for (int c = 0; c < n_; ++c) s += (long long)mat(r, c) * v[c];
    out[r] = (int)s;
  }
  return out;
}

std::vector<int> WeylElement::apply_inverse(const std::vector<int>& v) const {
  std::vector<int> out(n_, 0);
  for (int r = 0; r < n_; ++r) {
    long long s = 0;
    for (int c = 0; c < n_; ++c) s += (long long)inv(r, c) * v[c];
    out[r] = (int)s;
  }
  return out;
}

void WeylElement::lmul_simple(const CartanMatrix& C, int i) {
  int ii = i - 1;
  // s_i acts on each column of mat: row ii -= sum_k pairing(ii,k) * row k.
  for (int c = 0; c < n_; ++c) {
    long long s = 0;
    for (int k = 0; k < n_; ++k) s += (long long)C.pairing(ii, k) * mat(k, c);
    mat_[ii * kMaxRank + c] = (int8_t)(mat(ii, c) - s);
  }
  // inv <- inv * s_i: col_j -= pairing(ii, j) * col_ii (old col_ii).
  int8_t old[kMaxRank];
  for (int r = 0; r < n_; ++r) old[r] = inv_[r * kMaxRank + ii];
  for (int j = 0; j < n_; ++j) {
    int p = C.pairing(ii, j);
    if (p == 0) continue;
    for (int r = 0; r < n_; ++r)
      inv_[r * kMaxRank + j] = (int8_t)(inv_[r * kMaxRank + j] - p * old[r]);
  }
}

void WeylElement::rmul_simple(const CartanMatrix& C, int i) {
  int ii = i - 1;
  // mat <- mat * s_i: col_j -= pairing(ii, j) * col_ii (old col_ii).
  int8_t old[kMaxRank];
  for (int r = 0; r < n_; ++r) old[r] = mat_[r * kMaxRank + ii];
  for (int j = 0; j < n_; ++j) {
    int p = C.pairing(ii, j);
    if (p == 0) continue;
    for (int r = 0; r < n_; ++r)
      mat_[r * kMaxRank + j] = (int8_t)(mat_[r * kMaxRank + j] - p * old[r]);
  }
  // inv <- s_i * inv.
  for (int c = 0; c < n_; ++c) {
    long long s = 0;
    for (int k = 0; k < n_; ++k) s += (long long)C.pairing(ii, k) * inv(k, c);
    inv_[ii * kMaxRank + c] = (int8_t)(inv(ii, c) - s);
  }
}

WeylElement WeylElement::multiplied(const WeylElement& rhs) const {
  WeylElement out;
  out.n_ = n_;
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c) {
      long long s = 0, t = 0;
      for (int k = 0; k < n_; ++k) {
        s += (long long)mat(r, k) * rhs.mat(k, c);
        t += (long long)rhs.inv(r, k) * inv(k, c);
      }
      out.mat_[r * kMaxRank + c] = (int8_t)s;
      out.inv_[r * kMaxRank + c] = (int8_t)t;
    }
  return out;
}

WeylElement WeylElement::inverse() const {
  WeylElement out = *this;
  std::swap(out.mat_, out.inv_);
  return out;
}

namespace {
inline int column_sign(const WeylElement::Key& m, int n, int col) {
  for (int r = 0; r < n; ++r) {
    int v = m[r * kMaxRank + col];
    if (v != 0) return v > 0 ? 1 : -1;
  }
  return 0;
}
}  // namespace

bool WeylElement::right_ascent(int i) const {
  return column_sign(mat_, n_, i - 1) > 0;
}

bool WeylElement::left_ascent(int i) const {
  return column_sign(inv_, n_, i - 1) > 0;
}

bool WeylElement::is_identity() const {
  for (int r = 0; r < n_; ++r)
    for (int c = 0; c < n_; ++c)
      if (mat(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

size_t hash_key(const WeylElement::Key& k, int /*n*/) {
  // FNV-1a over the fixed-size padded key.
  size_t h = 1469598103934665603ull;
  for (int8_t b : k) {
    h ^= (unsigned char)b;
    h *= 1099511628211ull;
  }
  return h;
}

size_t WeylElement::Hash::operator()(const WeylElement& w) const {
  return hash_key(w.key(), w.rank());
}

WeylElement element_of(const WeylWord& word, const CartanMatrix& C) {
  WeylElement w = WeylElement::identity(C);
  for (int letter : word) {
    if (letter < 1 || letter > C.n)
      throw std::invalid_argument("element_of: letter out of range");
    w.rmul_simple(C, letter);
  }
  return w;
}

int length(const WeylElement& w, const CartanMatrix& C) {
  auto pos = positive_roots(C);
  int count = 0;
  for (const auto& beta : pos) {
    auto img = w.apply(beta.root_coords);
    for (int x : img) {
      if (x < 0) {
        ++count;
        break;
      }
      if (x > 0) break;
    }
  }
  return count;
}

WeylWord canonical_word(const WeylElement& w, const CartanMatrix& C) {
  WeylWord out;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    int i = 1;
    while (i <= C.n && cur.left_ascent(i)) ++i;
    if (i > C.n) throw std::logic_error("canonical_word: no descent found");
    out.push_back(i);
    cur.lmul_simple(C, i);
  }
  return out;
}

bool bruhat_leq(const WeylElement& u, const WeylElement& w,
                const CartanMatrix& C) {
  // Lifting property: with i a left descent of w, u <= w iff
  // min(u, s_i u) <= s_i w.
  WeylElement uu = u, ww = w;
  while (!ww.is_identity()) {
    int i = 1;
    while (i <= C.n && ww.left_ascent(i)) ++i;
    if (i > C.n) throw std::logic_error("bruhat_leq: no descent found");
    ww.lmul_simple(C, i);
    if (!uu.left_ascent(i)) uu.lmul_simple(C, i);
  }
  return uu.is_identity();
}

}  // namespace grastab
