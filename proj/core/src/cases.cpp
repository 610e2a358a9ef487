#include "grastab/cases.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace grastab {

const std::vector<std::string>& builtin_case_ids() {
  static const std::vector<std::string> ids = {"F4:C3", "F4:B3", "E6:A6",
                                               "E6:D5", "E7:E6", "E7:D6",
                                               "E8:E7"};
  return ids;
}

CaseSpec case_spec(const std::string& case_id, const Fixture& fx) {
  if (fx.case_id != case_id)
    throw std::invalid_argument("case_spec: fixture is for " + fx.case_id);
  CaseSpec s;
  s.case_id = case_id;
  s.group = fx.group;
  s.subgroup = fx.subgroup_label;
  s.excluded_node = fx.excluded_node;
  s.top_length = fx.top_length;
  s.cosets = fx.cosets;
  s.generators = fx.generators;
  s.monomial_bases = fx.monomial_bases;
  s.ring = fx.ring;
  for (auto& [m, basis] : s.monomial_bases) s.m_list.push_back(m);
  if (case_id == "E8:E7") s.extended_m = {24, 30};
  for (auto& [deg, basis] : s.monomial_bases)
    for (auto& mono : basis)
      for (auto& f : mono)
        if (!s.generators.count(f.degree))
          throw std::invalid_argument("case_spec: monomial uses unbound y_" +
                                      std::to_string(f.degree));
  return s;
}

CaseEngine::CaseEngine(const CaseSpec& spec, int threads)
    : spec_(spec),
      eng_(cartan_matrix(spec.group), spec.excluded_node),
      threads_(std::max(1, threads)) {
  const CosetTable& t = eng_.cosets();
  if (t.top_length != spec_.top_length)
    throw std::invalid_argument("CaseEngine: top length disagrees with spec");
  if ((int)spec_.cosets.size() != t.size() - 1)
    throw std::invalid_argument("CaseEngine: coset count disagrees with spec");
  ij_to_rep_.assign(t.size(), -1);
  ij_to_rep_[0] = 0;  // the identity coset, implicit in reference tables
  for (auto& row : spec_.cosets) {
    int idx = t.index_of(element_of(row.word, eng_.cartan()));
    if (idx < 0 || t.lengths[idx] != row.i)
      throw std::invalid_argument(
          "CaseEngine: reference word is not a minimal representative");
    int slot = t.first_at(row.i) + (row.j - 1);
    if (ij_to_rep_[slot] != -1)
      throw std::invalid_argument("CaseEngine: duplicate reference class");
    ij_to_rep_[slot] = idx;
  }
  for (int v : ij_to_rep_)
    if (v < 0)
      throw std::invalid_argument("CaseEngine: reference table misses a class");
  for (auto& [deg, cls] : spec_.generators) rep_of(cls.i, cls.j);
}

int CaseEngine::rep_of(int i, int j) const {
  const CosetTable& t = eng_.cosets();
  if (i < 0 || i > t.top_length || j < 1 || j > t.count_at(i))
    throw std::out_of_range("rep_of: no class s_{" + std::to_string(i) + "," +
                            std::to_string(j) + "}");
  return ij_to_rep_[t.first_at(i) + (j - 1)];
}

int CaseEngine::reference_j(int rep_index) const {
  const CosetTable& t = eng_.cosets();
  int i = t.lengths[rep_index];
  for (int j = 1; j <= t.count_at(i); ++j)
    if (ij_to_rep_[t.first_at(i) + (j - 1)] == rep_index) return j;
  throw std::logic_error("reference_j: index not found");
}

IntMatrix CaseEngine::euler_matrix(int k) const {
  IntMatrix A = eng_.euler_matrix(k);
  const CosetTable& t = eng_.cosets();
  IntMatrix out(A.rows, A.cols);
  int r0 = A.rows > 0 ? t.first_at(k - 1) : 0;
  int c0 = A.cols > 0 ? t.first_at(k) : 0;
  for (int r = 0; r < A.rows; ++r)
    for (int c = 0; c < A.cols; ++c)
      out.at(reference_j(r0 + r) - 1, reference_j(c0 + c) - 1) = A.at(r, c);
  for (int r = 0; r < A.rows; ++r)
    out.row_labels.push_back("s_{" + std::to_string(k - 1) + "," +
                             std::to_string(r + 1) + "}");
  for (int c = 0; c < A.cols; ++c)
    out.col_labels.push_back("s_{" + std::to_string(k) + "," +
                             std::to_string(c + 1) + "}");
  return out;
}

const AdditiveEntry& CaseEngine::additive_at(int degree) const {
  std::lock_guard<std::mutex> lock(amu_);
  auto it = additive_cache_.find(degree);
  if (it != additive_cache_.end()) return it->second;

  const CosetTable& t = eng_.cosets();
  if (degree < 0 || degree > 2 * t.top_length + 1)
    throw std::out_of_range("additive_at: degree out of range");
  AdditiveEntry e;
  e.degree = degree;
  e.even = degree % 2 == 0;
  if (e.even) {
    int k = degree / 2;
    IntMatrix rel =
        (k == 0) ? IntMatrix(0, t.count_at(0)) : euler_matrix(k);
    e.pres = cokernel(rel);
    e.factors = e.pres.invariant_factors;
  } else {
    int k = (degree - 1) / 2;
    e.kernel = kernel_basis(euler_matrix(k + 1), Side::left);
    e.factors.assign(e.kernel.rows.size(), 0);
  }
  return additive_cache_.emplace(degree, std::move(e)).first->second;
}

GradedGroupTable CaseEngine::additive_table() const {
  GradedGroupTable out;
  for (int d = 0; d <= 2 * eng_.cosets().top_length + 1; ++d)
    out.push_back(additive_at(d));
  return out;
}

CohomElement CaseEngine::monomial_expand(const Fixture::Monomial& mono,
                                         bool* overflow) const {
  if (overflow) *overflow = false;
  int total = 0;
  for (auto& f : mono) total += f.degree * f.exponent;
  if (total > eng_.cosets().top_length) {
    if (overflow) *overflow = true;
    CohomElement zero;
    zero.degree = total;
    return zero;
  }
  CohomElement acc = eng_.class_element(0);
  int e1 = 0;
  for (auto& f : mono) {
    if (f.degree == 1) {
      e1 += f.exponent;
      continue;
    }
    const Fixture::ClassRef& g = spec_.generators.at(f.degree);
    CohomElement cls = eng_.class_element(rep_of(g.i, g.j));
    for (int k = 0; k < f.exponent; ++k) acc = eng_.multiply(acc, cls);
  }
  for (int k = 0; k < e1; ++k) acc = eng_.chevalley_multiply(acc);
  return acc;
}

std::vector<mpz_class> CaseEngine::class_vector(const CohomElement& e) const {
  const CosetTable& t = eng_.cosets();
  std::vector<mpz_class> out(t.count_at(e.degree), 0);
  for (auto& [idx, c] : e.coeffs) out[reference_j(idx) - 1] = c;
  return out;
}

IntMatrix CaseEngine::structure_matrix(int m) const {
  auto it = spec_.monomial_bases.find(m);
  if (it == spec_.monomial_bases.end())
    throw std::out_of_range("structure_matrix: no basis for m=" +
                            std::to_string(m));
  const auto& basis = it->second;
  const CosetTable& t = eng_.cosets();
  IntMatrix M((int)basis.size(), t.count_at(m));

  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  auto work = [&] {
    for (;;) {
      size_t r = next.fetch_add(1);
      if (r >= basis.size()) return;
      auto vec = class_vector(monomial_expand(basis[r]));
      for (int c = 0; c < M.cols; ++c) M.at((int)r, c) = vec[c];
    }
  };
  int nt = std::min<int>(threads_, (int)basis.size());
  for (int i = 1; i < nt; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  for (auto& mono : basis) {
    std::string label;
    for (auto& f : mono) {
      if (!label.empty()) label += " ";
      label += "y_" + std::to_string(f.degree);
      if (f.exponent > 1) label += "^" + std::to_string(f.exponent);
    }
    M.row_labels.push_back(label.empty() ? "1" : label);
  }
  for (int c = 0; c < M.cols; ++c)
    M.col_labels.push_back("s_{" + std::to_string(m) + "," +
                           std::to_string(c + 1) + "}");
  return M;
}

LatticeBasis CaseEngine::nullspace_table(int m) const {
  return kernel_basis(structure_matrix(m), Side::left);
}

bool solve_scalar(const std::vector<mpz_class>& v,
                  const std::vector<mpz_class>& w, const CokerPresentation& P,
                  mpz_class* out) {
  if ((int)v.size() != P.ambient_rank || (int)w.size() != P.ambient_rank)
    throw std::invalid_argument("solve_scalar: dimension mismatch");
  std::vector<mpz_class> cv(P.ambient_rank, 0), cw(P.ambient_rank, 0);
  for (int k = 0; k < P.ambient_rank; ++k)
    for (int i = 0; i < P.ambient_rank; ++i) {
      cv[k] += v[i] * P.V.at(i, k);
      cw[k] += w[i] * P.V.at(i, k);
    }
  bool fixed = false;
  mpz_class fixed_c = 0;
  mpz_class res = 0, mod = 0;  // c == res (mod mod) accumulated constraints
  for (int k = 0; k < P.ambient_rank; ++k) {
    const mpz_class& d = P.all_factors[k];
    if (d == 1) continue;
    if (d == 0) {
      if (cw[k] == 0) {
        if (cv[k] != 0) return false;
        continue;
      }
      if (!mpz_divisible_p(cv[k].get_mpz_t(), cw[k].get_mpz_t())) return false;
      mpz_class c = cv[k] / cw[k];
      if (fixed && c != fixed_c) return false;
      fixed = true;
      fixed_c = c;
      continue;
    }
    // c * cw[k] == cv[k]  (mod d)
    mpz_class a, b, g;
    mpz_fdiv_r(a.get_mpz_t(), cw[k].get_mpz_t(), d.get_mpz_t());
    mpz_fdiv_r(b.get_mpz_t(), cv[k].get_mpz_t(), d.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    if (!mpz_divisible_p(b.get_mpz_t(), g.get_mpz_t())) return false;
    mpz_class m2 = d / g;
    if (m2 == 1) continue;
    mpz_class a2 = a / g, b2 = b / g, inv;
    if (mpz_invert(inv.get_mpz_t(), a2.get_mpz_t(), m2.get_mpz_t()) == 0)
      return false;
    mpz_class r2;
    mpz_fdiv_r(r2.get_mpz_t(), mpz_class(b2 * inv).get_mpz_t(), m2.get_mpz_t());
    // merge c == r2 (mod m2) into (res, mod)
    if (mod == 0) {
      res = r2;
      mod = m2;
    } else {
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), mod.get_mpz_t(), m2.get_mpz_t());
      if (!mpz_divisible_p(mpz_class(r2 - res).get_mpz_t(), gg.get_mpz_t()))
        return false;
      // CRT step: find t with res + mod * t == r2 (mod m2)
      mpz_class step = mod / gg, m2g = m2 / gg, inv2, t;
      if (mpz_invert(inv2.get_mpz_t(), mpz_class(mod / gg).get_mpz_t(),
                     m2g.get_mpz_t()) == 0)
        return false;
      mpz_class diff = (r2 - res) / gg;
      mpz_fdiv_r(t.get_mpz_t(), mpz_class(diff * inv2).get_mpz_t(),
                 m2g.get_mpz_t());
      res = res + mod * t;
      mod = mod * m2g;
      mpz_fdiv_r(res.get_mpz_t(), res.get_mpz_t(), mod.get_mpz_t());
    }
  }
  if (fixed) {
    if (mod != 0 &&
        !mpz_divisible_p(mpz_class(fixed_c - res).get_mpz_t(), mod.get_mpz_t()))
      return false;
    *out = fixed_c;
    return true;
  }
  *out = (mod == 0) ? mpz_class(0) : balanced_residue(res, mod);
  return true;
}

RingTable CaseEngine::ring_table() const {
  RingTable out;
  for (auto& id : spec_.ring) {
    RingEntry e;
    e.lhs = id.lhs;
    e.target = id.target;
    CohomElement prod = eng_.class_element(0);
    for (auto& f : id.lhs) {
      CohomElement cls = eng_.class_element(rep_of(f.i, f.j));
      for (int k = 0; k < f.exponent; ++k) prod = eng_.multiply(prod, cls);
    }
    if (prod.degree != id.target.i) {
      e.coef = id.coef + 1;  // degree clash; flagged by verification
      e.modulus = 0;
      out.push_back(std::move(e));
      continue;
    }
    const AdditiveEntry& add = additive_at(2 * id.target.i);
    std::vector<mpz_class> lhs_vec = class_vector(prod);
    std::vector<mpz_class> tgt_vec(lhs_vec.size(), 0);
    tgt_vec[id.target.j - 1] = 1;
    e.modulus = add.pres.order();
    if (!solve_scalar(lhs_vec, tgt_vec, add.pres, &e.coef))
      e.coef = id.coef + 1;  // provably different; flagged by verification
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace grastab
