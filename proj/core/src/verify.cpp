#include "grastab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <sstream>

namespace grastab {

int DiffReport::mismatches() const {
  int n = 0;
  for (auto& t : tables)
    if (t.state == TableStatus::State::mismatch) ++n;
  return n;
}

int DiffReport::skipped() const {
  int n = 0;
  for (auto& t : tables)
    if (t.state == TableStatus::State::skipped) ++n;
  return n;
}

namespace {

using Clock = std::chrono::steady_clock;

class Checker {
 public:
  explicit Checker(DiffReport& rep) : rep_(rep) {}

  void begin(const std::string& table) {
    cur_ = TableStatus{};
    cur_.table = table;
    start_ = Clock::now();
  }
  void mismatch(const std::string& detail) {
    if (cur_.state == TableStatus::State::mismatch) return;  // keep the first
    cur_.state = TableStatus::State::mismatch;
    cur_.detail = detail;
  }
  void skip(const std::string& why) {
    cur_.state = TableStatus::State::skipped;
    cur_.detail = why;
  }
  bool clean() const { return cur_.state == TableStatus::State::match; }
  void end() {
    cur_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    rep_.tables.push_back(cur_);
  }

 private:
  DiffReport& rep_;
  TableStatus cur_;
  Clock::time_point start_;
};

std::string str(const mpz_class& v) { return v.get_str(); }

std::string str_vec(const std::vector<mpz_class>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i)
    out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

std::string str_factors(const std::vector<mpz_class>& f) {
  if (f.empty()) return "0";
  std::string out;
  for (auto& d : f) {
    if (!out.empty()) out += " + ";
    out += (d == 0) ? "Z" : "Z_" + d.get_str();
  }
  return out;
}

// Monomial built from an additive relation's factor list.
Fixture::Monomial relation_monomial(const Fixture::Relation& rel) {
  Fixture::Monomial m;
  for (auto& c : rel.classes) m.push_back({c.degree, c.exponent});
  return m;
}

void check_cosets(Checker& ck, const CaseSpec& spec, const CartanMatrix& C,
                  const CosetTable& t) {
  ck.begin("cosets");
  std::map<int, std::set<WeylWord>> ours, theirs;
  for (int k = 1; k < t.size(); ++k) ours[t.lengths[k]].insert(t.words[k]);
  for (auto& row : spec.cosets) {
    WeylElement w = element_of(row.word, C);
    if (length(w, C) != row.i) {
      ck.mismatch("w_{" + std::to_string(row.i) + "," + std::to_string(row.j) +
                  "}: reference word is not reduced");
      continue;
    }
    theirs[row.i].insert(canonical_word(w, C));
  }
  for (int l = 1; l <= t.top_length; ++l) {
    if (ours[l] == theirs[l]) continue;
    ck.mismatch("degree " + std::to_string(l) + ": computed " +
                std::to_string(ours[l].size()) + " classes, reference lists " +
                std::to_string(theirs[l].size()) +
                " (as sets of canonical words they differ)");
  }
  ck.end();
}

}  // namespace

DiffReport verify_case(const std::string& case_id, const Fixture& fx,
                       const VerifyOptions& opt) {
  DiffReport rep;
  rep.case_id = case_id;
  Checker ck(rep);

  CaseSpec spec = case_spec(case_id, fx);
  // A reference word table that does not enumerate our minimal reps makes
  // the (i, j) class map unusable; report that as a coset mismatch rather
  // than propagating the construction failure.
  std::optional<CaseEngine> holder;
  try {
    holder.emplace(spec, opt.threads);
  } catch (const std::exception& ex) {
    CartanMatrix C = cartan_matrix(spec.group);
    CosetTable t = minimal_coset_reps(C, spec.excluded_node);
    check_cosets(ck, spec, C, t);
    ck.begin("class map");
    ck.mismatch(ex.what());
    ck.end();
    rep.bootstrap_ok = false;
    return rep;
  }
  CaseEngine& ce = *holder;
  const CosetTable& t = ce.engine().cosets();
  const int L = t.top_length;
  auto capped = [&](int k) { return opt.max_degree >= 0 && k > opt.max_degree; };

  check_cosets(ck, spec, ce.engine().cartan(), t);

  // Euler matrices; the low-degree ones double as the convention bootstrap.
  bool boot = true;
  for (auto& [k, A] : fx.euler) {
    ck.begin("A_" + std::to_string(k));
    if (capped(k)) {
      ck.skip("max-degree cap");
      ck.end();
      continue;
    }
    IntMatrix ours = ce.euler_matrix(k);
    if (ours.rows != (int)A.size() ||
        (ours.rows > 0 && ours.cols != (int)A[0].size())) {
      ck.mismatch("dimensions differ");
    } else {
      for (int r = 0; r < ours.rows && ck.clean(); ++r)
        for (int c = 0; c < ours.cols; ++c)
          if (ours.at(r, c) != A[r][c]) {
            ck.mismatch("cell (" + std::to_string(r + 1) + "," +
                        std::to_string(c + 1) + "): computed " +
                        str(ours.at(r, c)) + ", reference " + str(A[r][c]));
            break;
          }
    }
    if (k <= 5 && !ck.clean()) boot = false;
    ck.end();
  }
  rep.bootstrap_ok = boot;

  // Additive groups, generators, and (for E8) the relation identities.
  std::map<int, const Fixture::AdditiveRow*> add_rows;
  for (auto& row : fx.additive) add_rows[row.degree] = &row;
  const Fixture::AdditiveRow* d59_row = nullptr;
  for (auto& row : fx.additive)
    if (row.generator.alias == "d_59") d59_row = &row;

  for (int d = 0; d <= 2 * L + 1; ++d) {
    if (opt.max_degree >= 0 && (d + 1) / 2 > opt.max_degree) continue;
    bool listed = add_rows.count(d);
    if (!listed && d != 0 && d != 2 * L + 1) {
      // unlisted degrees must come out trivial; fold into one status below
      continue;
    }
    ck.begin("H^" + std::to_string(d));
    const AdditiveEntry& e = ce.additive_at(d);
    std::vector<mpz_class> ours = e.factors, theirs;
    if (listed) theirs = add_rows.at(d)->factors;
    if (!listed && (d == 0 || d == 2 * L + 1)) theirs = {0};  // Z, implicit
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    if (ours != theirs)
      ck.mismatch("computed " + str_factors(e.factors) + ", reference " +
                  str_factors(theirs));

    if (listed && ck.clean()) {
      const auto& row = *add_rows.at(d);
      if (row.generator.type == Fixture::Generator::Type::cls) {
        // generator check: relations plus the generator row present Z^n / all
        int k = d / 2;
        IntMatrix rel = (k == 0) ? IntMatrix(0, t.count_at(0))
                                 : ce.euler_matrix(k);
        IntMatrix stacked(rel.rows + 1, rel.cols);
        for (int r = 0; r < rel.rows; ++r)
          for (int c = 0; c < rel.cols; ++c) stacked.at(r, c) = rel.at(r, c);
        stacked.at(rel.rows, row.generator.cls.j - 1) = 1;
        CokerPresentation q = cokernel(stacked);
        bool trivial = q.invariant_factors.empty();
        if (!trivial)
          ck.mismatch("s_{" + std::to_string(row.generator.cls.i) + "," +
                      std::to_string(row.generator.cls.j) +
                      "} does not generate the computed group");
      } else if (row.generator.type == Fixture::Generator::Type::kernel) {
        int k = (d - 1) / 2;
        std::vector<mpz_class> v(t.count_at(k), 0);
        for (auto& term : row.generator.terms) v[term.j - 1] = term.coef;
        IntMatrix A = ce.euler_matrix(k + 1);
        bool annihilates = true;
        for (int c = 0; c < A.cols && annihilates; ++c) {
          mpz_class s = 0;
          for (int r = 0; r < A.rows; ++r) s += v[r] * A.at(r, c);
          annihilates = (s == 0);
        }
        if (!annihilates) {
          ck.mismatch("reference kernel vector " + str_vec(v) +
                      " does not annihilate A_" + std::to_string(k + 1));
        } else if (e.kernel.rows.size() == 1) {
          LatticeBasis single;
          single.ambient = (int)v.size();
          single.rows.push_back(v);
          if (!lattice_equal(single, e.kernel))
            ck.mismatch("reference kernel vector " + str_vec(v) +
                        " does not span the computed kernel " +
                        str_vec(e.kernel.rows[0]));
        }
      }
    }

    // E8-style relation column: the listed monomial equals the row's
    // generator up to sign (odd rows after multiplying by the d_59 class).
    if (listed && ck.clean() && add_rows.at(d)->relation) {
      const auto& row = *add_rows.at(d);
      const auto& rel = *row.relation;
      Fixture::Monomial mono = relation_monomial(rel);
      if (!rel.d59) {
        CohomElement p = ce.monomial_expand(mono);
        std::vector<mpz_class> lhs = ce.class_vector(p);
        std::vector<mpz_class> gen(lhs.size(), 0);
        gen[row.generator.cls.j - 1] = 1;
        // The monomial must be a unit multiple of the generator: each is an
        // integer multiple of the other.  On a free summand that forces +-1;
        // on Z_5 it also admits +-2 (the reference writes those as "+-").
        mpz_class c, u;
        bool okc = solve_scalar(lhs, gen, e.pres, &c);
        bool oku = okc && solve_scalar(gen, lhs, e.pres, &u);
        if (!oku)
          ck.mismatch("relation monomial reduces to " +
                      (okc ? c.get_str() : std::string("no")) +
                      " times the generator; expected a unit");
      } else if (d59_row) {
        CohomElement even_part = ce.monomial_expand(mono);
        CohomElement prod;
        prod.degree = even_part.degree + 29;
        for (auto& term : d59_row->generator.terms) {
          CohomElement part = ce.engine().multiply(
              even_part, ce.engine().class_element(ce.rep_of(term.i, term.j)));
          for (auto& [idx, cc] : part.coeffs) {
            auto [it, fresh] = prod.coeffs.emplace(idx, term.coef * cc);
            if (!fresh) it->second += term.coef * cc;
            if (it->second == 0) prod.coeffs.erase(it);
          }
        }
        std::vector<mpz_class> lhs = ce.class_vector(prod);
        std::vector<mpz_class> gen(lhs.size(), 0);
        for (auto& term : row.generator.terms) gen[term.j - 1] = term.coef;
        std::vector<mpz_class> neg(gen.size());
        for (size_t i = 0; i < gen.size(); ++i) neg[i] = -gen[i];
        if (lhs != gen && lhs != neg)
          ck.mismatch("monomial times d_59 gives " + str_vec(lhs) +
                      ", generator is " + str_vec(gen));
      } else {
        ck.mismatch("odd relation present but no d_59 class in the fixture");
      }
    }
    ck.end();
  }

  // Degrees the reference omits must be trivial.
  if (opt.max_degree < 0) {
    ck.begin("H^* completeness");
    for (int d = 1; d <= 2 * L && ck.clean(); ++d) {
      if (add_rows.count(d)) continue;
      const AdditiveEntry& e = ce.additive_at(d);
      if (!e.factors.empty())
        ck.mismatch("H^" + std::to_string(d) + " computed as " +
                    str_factors(e.factors) + " but the reference omits it");
    }
    ck.end();
  }

  // Ring identities.
  RingTable rt = ce.ring_table();
  for (size_t i = 0; i < rt.size(); ++i) {
    const auto& fid = fx.ring[i];
    if (opt.max_degree >= 0 && fid.target.i > opt.max_degree) continue;
    std::ostringstream name;
    name << "ring[" << i << "]";
    ck.begin(name.str());
    const auto& e = rt[i];
    bool same = (e.modulus == 0)
                    ? (e.coef == fid.coef)
                    : mpz_divisible_p(mpz_class(e.coef - fid.coef).get_mpz_t(),
                                      e.modulus.get_mpz_t());
    if (!same) {
      std::string lhs;
      for (auto& f : fid.lhs) {
        if (!lhs.empty()) lhs += " ";
        lhs += "s_{" + std::to_string(f.i) + "," + std::to_string(f.j) + "}";
        if (f.exponent > 1) lhs += "^" + std::to_string(f.exponent);
      }
      ck.mismatch(lhs + ": computed coefficient " + str(e.coef) +
                  ", reference " + str(fid.coef) + " (mod " +
                  str(e.modulus) + ")");
    }
    ck.end();
  }

  // Structure matrices and nullspaces.
  for (int m : spec.m_list) {
    bool gated = spec.extended_m.count(m) && !opt.extended;
    IntMatrix M;
    bool have_m = false;

    ck.begin("M(pi_" + std::to_string(m) + ")");
    if (gated) {
      ck.skip("extended gate");
    } else if (capped(m)) {
      ck.skip("max-degree cap");
    } else if (!fx.structure.count(m)) {
      ck.mismatch("reference table missing");
    } else {
      M = ce.structure_matrix(m);
      have_m = true;
      const auto& st = fx.structure.at(m);
      bool transposed = st.orientation == "classes_x_monomials";
      auto ref = [&](int r, int c) -> const mpz_class& {
        return transposed ? st.matrix[c][r] : st.matrix[r][c];
      };
      for (int r = 0; r < M.rows && ck.clean(); ++r)
        for (int c = 0; c < M.cols; ++c)
          if (M.at(r, c) != ref(r, c)) {
            int fr = transposed ? c + 1 : r + 1;
            int fc = transposed ? r + 1 : c + 1;
            ck.mismatch("cell (" + std::to_string(fr) + "," +
                        std::to_string(fc) + "): computed " +
                        str(M.at(r, c)) + ", reference " + str(ref(r, c)));
            break;
          }
    }
    ck.end();

    ck.begin("N(pi_" + std::to_string(m) + ")");
    if (gated) {
      ck.skip("extended gate");
    } else if (capped(m)) {
      ck.skip("max-degree cap");
    } else if (!fx.nullspace.count(m)) {
      ck.mismatch("reference table missing");
    } else if (!have_m) {
      ck.skip("structure matrix unavailable");
    } else {
      LatticeBasis kernel = kernel_basis(M, Side::left);
      const auto& rows = fx.nullspace.at(m);
      LatticeBasis ref;
      ref.ambient = M.rows;
      for (size_t ri = 0; ri < rows.size() && ck.clean(); ++ri) {
        ref.rows.push_back(rows[ri]);
        for (int c = 0; c < M.cols; ++c) {
          mpz_class s = 0;
          for (int r = 0; r < M.rows; ++r) s += rows[ri][r] * M.at(r, c);
          if (s != 0) {
            ck.mismatch("row " + std::to_string(ri + 1) +
                        " is not in the computed kernel");
            break;
          }
        }
      }
      if (ck.clean() && !lattice_equal(ref, kernel))
        ck.mismatch("reference rows span a different saturated lattice");
    }
    ck.end();
  }

  return rep;
}

}  // namespace grastab
