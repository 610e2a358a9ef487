// Command-line front end: table printers plus the fixture verifier.
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "grastab/report.hpp"
#include "json.hpp"

using namespace grastab;
using nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  std::string fixtures = "data/fixtures";
  std::string format = "text";
  bool extended = false;
  int threads = 1;
  int max_degree = -1;
};

bool structured(const GlobalOpts& g) { return g.format == "structured"; }

std::string word_str(const WeylWord& w) {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < w.size(); ++i) out << (i ? ", " : "") << w[i];
  out << "]";
  return out.str();
}

std::string group_str(const std::vector<mpz_class>& factors) {
  if (factors.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (i) out += " + ";
    out += factors[i] == 0 ? "Z" : "Z_" + factors[i].get_str();
  }
  return out;
}

Fixture load_case_fixture(const GlobalOpts& g, const std::string& case_id) {
  return load_fixture(g.fixtures + "/" + fixture_filename(case_id));
}

CaseEngine make_engine(const GlobalOpts& g, const std::string& case_id,
                       Fixture* fx_out = nullptr) {
  Fixture fx = load_case_fixture(g, case_id);
  CaseSpec spec = case_spec(case_id, fx);
  if (fx_out) *fx_out = std::move(fx);
  return CaseEngine(spec, g.threads);
}

int cmd_cartan(const GlobalOpts& g, const std::string& label) {
  CartanMatrix C = cartan_matrix(label);
  if (structured(g)) {
    json out;
    out["label"] = C.label;
    out["n"] = C.n;
    json rows = json::array();
    for (int i = 0; i < C.n; ++i) {
      json row = json::array();
      for (int j = 0; j < C.n; ++j) row.push_back(C.at(i, j));
      rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    std::cout << out.dump(1) << "\n";
    return 0;
  }
  for (int i = 0; i < C.n; ++i) {
    for (int j = 0; j < C.n; ++j)
      std::cout << C.at(i, j) << (j + 1 < C.n ? " " : "");
    std::cout << "\n";
  }
  return 0;
}

int cmd_roots(const GlobalOpts& g, const std::string& label) {
  CartanMatrix C = cartan_matrix(label);
  auto roots = positive_roots(C);
  if (structured(g)) {
    json out = json::array();
    for (auto& r : roots)
      out.push_back({{"root", r.root_coords}, {"coroot", r.coroot_coords}});
    std::cout << out.dump(1) << "\n";
    return 0;
  }
  std::cout << roots.size() << " positive roots\n";
  for (auto& r : roots) {
    for (size_t j = 0; j < r.root_coords.size(); ++j)
      std::cout << (j ? " " : "") << r.root_coords[j];
    std::cout << "\n";
  }
  return 0;
}

int cmd_cosets(const GlobalOpts& g, const std::string& label, int node) {
  CartanMatrix C = cartan_matrix(label);
  if (node < 1 || node > C.n)
    throw std::runtime_error("node out of range for " + label);
  CosetTable T = minimal_coset_reps(C, node);
  if (structured(g)) {
    json out = json::array();
    for (int k = 0; k < T.size(); ++k) {
      int j = k - T.first_at(T.lengths[k]) + 1;
      out.push_back(
          {{"i", T.lengths[k]}, {"j", j}, {"word", T.words[k]}});
    }
    std::cout << out.dump(1) << "\n";
    return 0;
  }
  for (int k = 0; k < T.size(); ++k) {
    int j = k - T.first_at(T.lengths[k]) + 1;
    std::cout << "w_{" << T.lengths[k] << "," << j
              << "} = " << word_str(T.words[k]) << "\n";
  }
  return 0;
}

int cmd_euler(const GlobalOpts& g, const std::string& case_id, int k) {
  CaseEngine eng = make_engine(g, case_id);
  if (k < 1 || k > eng.spec().top_length)
    throw std::runtime_error("degree out of range for " + case_id);
  IntMatrix A = eng.euler_matrix(k);
  std::cout << (structured(g) ? render_matrix_structured(A)
                              : render_matrix_text(A));
  return 0;
}

int cmd_additive(const GlobalOpts& g, const std::string& case_id) {
  CaseEngine eng = make_engine(g, case_id);
  GradedGroupTable table = eng.additive_table();
  if (structured(g)) {
    json out = json::array();
    for (auto& e : table) {
      json factors = json::array();
      for (auto& f : e.factors) factors.push_back(f.get_str());
      out.push_back({{"degree", e.degree}, {"factors", std::move(factors)}});
    }
    std::cout << out.dump(1) << "\n";
    return 0;
  }
  for (auto& e : table)
    std::cout << "H^" << e.degree << " = " << group_str(e.factors) << "\n";
  return 0;
}

int cmd_ring(const GlobalOpts& g, const std::string& case_id) {
  CaseEngine eng = make_engine(g, case_id);
  RingTable table = eng.ring_table();
  if (structured(g)) {
    json out = json::array();
    for (auto& e : table) {
      json lhs = json::array();
      for (auto& f : e.lhs)
        lhs.push_back({{"i", f.i}, {"j", f.j}, {"exponent", f.exponent}});
      out.push_back({{"lhs", std::move(lhs)},
                     {"coef", e.coef.get_str()},
                     {"target", {{"i", e.target.i}, {"j", e.target.j}}},
                     {"modulus", e.modulus.get_str()}});
    }
    std::cout << out.dump(1) << "\n";
    return 0;
  }
  for (auto& e : table) {
    for (auto& f : e.lhs) {
      std::cout << "s_{" << f.i << "," << f.j << "}";
      if (f.exponent != 1) std::cout << "^" << f.exponent;
      std::cout << " ";
    }
    std::cout << "= " << e.coef << " s_{" << e.target.i << "," << e.target.j
              << "}";
    if (e.modulus > 1) std::cout << "  (mod " << e.modulus << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_mpi(const GlobalOpts& g, const std::string& case_id, int m) {
  CaseEngine eng = make_engine(g, case_id);
  const CaseSpec& spec = eng.spec();
  if (!spec.monomial_bases.count(m))
    throw std::runtime_error(case_id + " has no structure table at degree " +
                             std::to_string(m));
  if (spec.extended_m.count(m) && !g.extended)
    throw std::runtime_error("degree " + std::to_string(m) + " of " + case_id +
                             " is gated; pass --extended to compute it");
  IntMatrix M = eng.structure_matrix(m);
  LatticeBasis N = eng.nullspace_table(m);
  if (structured(g)) {
    json out;
    out["M"] = json::parse(render_matrix_structured(M));
    json rows = json::array();
    for (auto& r : N.rows) {
      json row = json::array();
      for (auto& v : r) row.push_back(v.get_str());
      rows.push_back(std::move(row));
    }
    out["N"] = std::move(rows);
    std::cout << out.dump(1) << "\n";
    return 0;
  }
  std::cout << "M(pi_" << m << "):\n" << render_matrix_text(M);
  std::cout << "N(pi_" << m << "):\n";
  for (auto& r : N.rows) {
    std::cout << "(";
    for (size_t c = 0; c < r.size(); ++c)
      std::cout << (c ? ", " : "") << r[c];
    std::cout << ")\n";
  }
  if (N.rows.empty()) std::cout << "(trivial)\n";
  return 0;
}

int cmd_verify(const GlobalOpts& g, std::vector<std::string> cases) {
  if (cases.empty()) cases = builtin_case_ids();
  // Load everything first so missing or malformed files are all reported.
  std::map<std::string, Fixture> fixtures;
  std::vector<std::string> errors;
  for (auto& id : cases) {
    try {
      fixtures.emplace(id, load_case_fixture(g, id));
    } catch (const std::exception& e) {
      errors.push_back(id + ": " + e.what());
    }
  }
  if (!errors.empty()) {
    for (auto& e : errors) std::cerr << "fixture error: " << e << "\n";
    return kExitUsage;
  }
  VerifyOptions opt;
  opt.extended = g.extended;
  opt.threads = g.threads;
  opt.max_degree = g.max_degree;
  std::vector<DiffReport> reports;
  for (auto& id : cases) reports.push_back(verify_case(id, fixtures.at(id), opt));
  std::cout << render(reports, structured(g) ? ReportFormat::structured
                                             : ReportFormat::text);
  for (auto& r : reports)
    if (!r.ok() || !r.bootstrap_ok) return kExitMismatch;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert presentation tables for generalized Grassmannians"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags are accepted after the subcommand too

  GlobalOpts g;
  app.add_option("--fixtures", g.fixtures, "Fixture directory")
      ->envname("GRASTAB_FIXTURES")
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->envname("GRASTAB_FORMAT")
      ->capture_default_str();
  app.add_flag("--extended", g.extended,
               "Include the gated heavy E8 degrees (m = 24, 30)")
      ->envname("GRASTAB_EXTENDED");
  app.add_option("--threads", g.threads, "Worker thread count")
      ->check(CLI::PositiveNumber)
      ->envname("GRASTAB_THREADS")
      ->capture_default_str();
  app.add_option("--max-degree", g.max_degree,
                 "Debug cap on the verified coset degree (-1 = none)")
      ->envname("GRASTAB_MAX_DEGREE")
      ->capture_default_str();

  std::string label, case_id;
  int node = 0, degree = 0;
  std::vector<std::string> cases;

  auto* cartan = app.add_subcommand("cartan", "Print a Cartan matrix");
  cartan->add_option("group", label, "Group label, e.g. F4 or E8")->required();

  auto* roots = app.add_subcommand("roots", "Print the positive roots");
  roots->add_option("group", label)->required();

  auto* cosets =
      app.add_subcommand("cosets", "Minimal coset representative words");
  cosets->add_option("group", label)->required();
  cosets->add_option("node", node, "Excluded node (1-based)")->required();

  auto* euler = app.add_subcommand("euler", "Degree-k multiplication matrix");
  euler->add_option("case", case_id, "Case id, e.g. F4:C3")->required();
  euler->add_option("k", degree)->required();

  auto* additive =
      app.add_subcommand("additive", "Integral cohomology groups by degree");
  additive->add_option("case", case_id)->required();

  auto* ring = app.add_subcommand("ring", "Generator product identities");
  ring->add_option("case", case_id)->required();

  auto* mpi = app.add_subcommand(
      "mpi", "Structure matrix M(pi_m) and its nullspace N(pi_m)");
  mpi->add_option("case", case_id)->required();
  mpi->add_option("m", degree)->required();

  auto* verify =
      app.add_subcommand("verify", "Recompute every table and diff fixtures");
  verify->add_option("--case", cases, "Case ids (default: all seven)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*cartan) return cmd_cartan(g, label);
    if (*roots) return cmd_roots(g, label);
    if (*cosets) return cmd_cosets(g, label, node);
    if (*euler) return cmd_euler(g, case_id, degree);
    if (*additive) return cmd_additive(g, case_id);
    if (*ring) return cmd_ring(g, case_id);
    if (*mpi) return cmd_mpi(g, case_id, degree);
    if (*verify) return cmd_verify(g, cases);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
