#include "grastab/fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace grastab {

using nlohmann::json;

std::string fixture_filename(const std::string& case_id) {
  std::string out;
  for (char c : case_id) out += (c == ':') ? '_' : (char)tolower(c);
  return out + ".json";
}

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error("fixture: " + msg);
}

mpz_class to_mpz(const json& v) {
  if (!v.is_number_integer()) fail("expected an integer");
  return mpz_class((long)v.get<long long>());
}

std::vector<std::vector<mpz_class>> to_matrix(const json& v) {
  std::vector<std::vector<mpz_class>> out;
  for (auto& row : v) {
    std::vector<mpz_class> r;
    for (auto& x : row) r.push_back(to_mpz(x));
    out.push_back(std::move(r));
  }
  for (auto& r : out)
    if (r.size() != out[0].size()) fail("ragged matrix");
  return out;
}

Fixture::Generator parse_generator(const json& g) {
  Fixture::Generator out;
  std::string type = g.at("type").get<std::string>();
  if (type == "none") {
    out.type = Fixture::Generator::Type::none;
  } else if (type == "class") {
    out.type = Fixture::Generator::Type::cls;
    out.cls = {g.at("i").get<int>(), g.at("j").get<int>()};
  } else if (type == "kernel") {
    out.type = Fixture::Generator::Type::kernel;
    for (auto& t : g.at("terms"))
      out.terms.push_back(
          {to_mpz(t.at(0)), t.at(1).get<int>(), t.at(2).get<int>()});
  } else {
    fail("unknown generator type '" + type + "'");
  }
  if (g.contains("alias")) out.alias = g.at("alias").get<std::string>();
  return out;
}

void validate(const Fixture& fx) {
  if (fx.schema_version != 1) fail("unsupported schema_version");
  if (fx.excluded_node < 1) fail("missing excluded_node");
  if (fx.top_length < 1) fail("missing top_length");

  std::map<int, int> count;  // classes per degree, identity implicit
  count[0] = 1;
  int prev_i = 0, prev_j = 0;
  for (auto& c : fx.cosets) {
    if ((int)c.word.size() != c.i) fail("coset word length != degree");
    if (c.i == prev_i) {
      if (c.j != prev_j + 1) fail("coset j not consecutive");
    } else if (c.j != 1) {
      fail("coset j does not restart at 1");
    }
    prev_i = c.i;
    prev_j = c.j;
    ++count[c.i];
  }
  if (prev_i != fx.top_length) fail("cosets do not reach top_length");
  if (!fx.cosets.empty() && fx.cosets.front().word !=
                                WeylWord{fx.excluded_node})
    fail("w_{1,1} does not match excluded_node");

  for (auto& [k, A] : fx.euler) {
    int nr = count.count(k - 1) ? count.at(k - 1) : 0;
    int nc = count.count(k) ? count.at(k) : 0;
    if ((int)A.size() != nr) fail("A_" + std::to_string(k) + ": wrong row count");
    if (nr > 0 && (int)A[0].size() != nc)
      fail("A_" + std::to_string(k) + ": wrong column count");
  }
  for (auto& row : fx.additive) {
    if (row.degree < 0 || row.degree > 2 * fx.top_length + 1)
      fail("additive degree out of range");
    if (row.factors.empty()) fail("additive row without factors");
    if (row.relation) {
      int sum = 0;
      for (auto& c : row.relation->classes) sum += c.degree * c.exponent;
      int want = row.relation->d59 ? (row.degree - 59) / 2 : row.degree / 2;
      if (sum != want)
        fail("H^" + std::to_string(row.degree) +
             ": relation monomial has the wrong degree");
    }
  }
  for (auto& [deg, cls] : fx.generators)
    if (cls.i != deg) fail("generator degree does not match its class");
  for (auto& [m, basis] : fx.monomial_bases)
    for (auto& mono : basis) {
      int total = 0;
      for (auto& f : mono) total += f.degree * f.exponent;
      if (total != m) fail("monomial in B(" + std::to_string(2 * m) +
                           ") has degree " + std::to_string(total));
    }
  for (auto& [m, st] : fx.structure) {
    if (!fx.monomial_bases.count(m)) fail("structure without monomial basis");
    size_t nmono = fx.monomial_bases.at(m).size();
    size_t ncls = count.count(m) ? count.at(m) : 0;
    size_t er = st.orientation == "classes_x_monomials" ? ncls : nmono;
    size_t ec = st.orientation == "classes_x_monomials" ? nmono : ncls;
    if (st.orientation != "classes_x_monomials" &&
        st.orientation != "monomials_x_classes")
      fail("unknown structure orientation");
    if (st.matrix.size() != er || (er > 0 && st.matrix[0].size() != ec))
      fail("M(pi_" + std::to_string(m) + "): dimensions do not match orientation");
  }
  for (auto& [m, rows] : fx.nullspace) {
    if (!fx.monomial_bases.count(m)) fail("nullspace without monomial basis");
    for (auto& r : rows)
      if (r.size() != fx.monomial_bases.at(m).size())
        fail("N(pi_" + std::to_string(m) + "): wrong row width");
  }
}

}  // namespace

Fixture parse_fixture(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  Fixture fx;
  try {
    fx.schema_version = j.at("schema_version").get<int>();
    fx.case_id = j.at("case_id").get<std::string>();
    fx.group = j.at("group").get<std::string>();
    fx.subgroup_label = j.at("subgroup_label").get<std::string>();
    fx.excluded_node = j.at("excluded_node").get<int>();
    fx.top_length = j.at("top_length").get<int>();
    for (auto& c : j.at("cosets"))
      fx.cosets.push_back({c.at("i").get<int>(), c.at("j").get<int>(),
                           c.at("word").get<WeylWord>()});
    for (auto& [k, A] : j.at("euler").items())
      fx.euler.emplace(std::stoi(k), to_matrix(A));
    for (auto& row : j.at("additive")) {
      Fixture::AdditiveRow r;
      r.degree = row.at("degree").get<int>();
      for (auto& f : row.at("factors")) r.factors.push_back(to_mpz(f));
      r.generator = parse_generator(row.at("generator"));
      if (row.contains("relation")) {
        Fixture::Relation rel;
        for (auto& c : row.at("relation").at("classes"))
          rel.classes.push_back(
              {c.at(0).get<int>(), c.at(1).get<int>(), c.at(2).get<int>()});
        rel.d59 = row.at("relation").at("d59").get<bool>();
        r.relation = std::move(rel);
      }
      fx.additive.push_back(std::move(r));
    }
    for (auto& id : j.at("ring")) {
      Fixture::RingIdentity ri;
      for (auto& f : id.at("lhs"))
        ri.lhs.push_back(
            {f.at(0).get<int>(), f.at(1).get<int>(), f.at(2).get<int>()});
      ri.coef = to_mpz(id.at("coef"));
      ri.target = {id.at("target").at(0).get<int>(),
                   id.at("target").at(1).get<int>()};
      fx.ring.push_back(std::move(ri));
    }
    for (auto& [d, g] : j.at("generators").items())
      fx.generators.emplace(std::stoi(d),
                            Fixture::ClassRef{g.at(0).get<int>(),
                                              g.at(1).get<int>()});
    for (auto& [m, basis] : j.at("monomial_bases").items()) {
      std::vector<Fixture::Monomial> b;
      for (auto& mono : basis) {
        Fixture::Monomial mo;
        for (auto& f : mono)
          mo.push_back({f.at(0).get<int>(), f.at(1).get<int>()});
        b.push_back(std::move(mo));
      }
      fx.monomial_bases.emplace(std::stoi(m), std::move(b));
    }
    for (auto& [m, st] : j.at("structure").items()) {
      Fixture::StructureTable t;
      t.orientation = st.at("orientation").get<std::string>();
      t.matrix = to_matrix(st.at("matrix"));
      fx.structure.emplace(std::stoi(m), std::move(t));
    }
    for (auto& [m, rows] : j.at("nullspace").items())
      fx.nullspace.emplace(std::stoi(m), to_matrix(rows));
    if (j.contains("notes"))
      for (auto& n : j.at("notes")) fx.notes.push_back(n.get<std::string>());
  } catch (const json::exception& e) {
    fail(std::string("schema violation: ") + e.what());
  }
  validate(fx);
  return fx;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_fixture(ss.str());
}

namespace {

json from_mpz(const mpz_class& v) {
  if (!v.fits_slong_p()) fail("serialize: value out of int64 range");
  return (long long)v.get_si();
}

json from_matrix(const std::vector<std::vector<mpz_class>>& m) {
  json out = json::array();
  for (auto& row : m) {
    json r = json::array();
    for (auto& x : row) r.push_back(from_mpz(x));
    out.push_back(std::move(r));
  }
  return out;
}

json from_generator(const Fixture::Generator& g) {
  json out;
  switch (g.type) {
    case Fixture::Generator::Type::none:
      out["type"] = "none";
      break;
    case Fixture::Generator::Type::cls:
      out["type"] = "class";
      out["i"] = g.cls.i;
      out["j"] = g.cls.j;
      break;
    case Fixture::Generator::Type::kernel: {
      out["type"] = "kernel";
      json terms = json::array();
      for (auto& t : g.terms)
        terms.push_back(json::array({from_mpz(t.coef), t.i, t.j}));
      out["terms"] = std::move(terms);
      break;
    }
  }
  if (!g.alias.empty()) out["alias"] = g.alias;
  return out;
}

}  // namespace

std::string serialize_fixture(const Fixture& fx) {
  json j;
  j["schema_version"] = fx.schema_version;
  j["case_id"] = fx.case_id;
  j["group"] = fx.group;
  j["subgroup_label"] = fx.subgroup_label;
  j["excluded_node"] = fx.excluded_node;
  j["top_length"] = fx.top_length;
  j["cosets"] = json::array();
  for (auto& c : fx.cosets)
    j["cosets"].push_back({{"i", c.i}, {"j", c.j}, {"word", c.word}});
  j["euler"] = json::object();
  for (auto& [k, A] : fx.euler) j["euler"][std::to_string(k)] = from_matrix(A);
  j["additive"] = json::array();
  for (auto& row : fx.additive) {
    json r;
    r["degree"] = row.degree;
    r["factors"] = json::array();
    for (auto& f : row.factors) r["factors"].push_back(from_mpz(f));
    r["generator"] = from_generator(row.generator);
    if (row.relation) {
      json rel;
      rel["classes"] = json::array();
      for (auto& c : row.relation->classes)
        rel["classes"].push_back(json::array({c.degree, c.exponent, c.j}));
      rel["d59"] = row.relation->d59;
      r["relation"] = std::move(rel);
    }
    j["additive"].push_back(std::move(r));
  }
  j["ring"] = json::array();
  for (auto& id : fx.ring) {
    json r;
    r["lhs"] = json::array();
    for (auto& f : id.lhs)
      r["lhs"].push_back(json::array({f.i, f.j, f.exponent}));
    r["coef"] = from_mpz(id.coef);
    r["target"] = json::array({id.target.i, id.target.j});
    j["ring"].push_back(std::move(r));
  }
  j["generators"] = json::object();
  for (auto& [d, g] : fx.generators)
    j["generators"][std::to_string(d)] = json::array({g.i, g.j});
  j["monomial_bases"] = json::object();
  for (auto& [m, basis] : fx.monomial_bases) {
    json b = json::array();
    for (auto& mono : basis) {
      json mo = json::array();
      for (auto& f : mono) mo.push_back(json::array({f.degree, f.exponent}));
      b.push_back(std::move(mo));
    }
    j["monomial_bases"][std::to_string(m)] = std::move(b);
  }
  j["structure"] = json::object();
  for (auto& [m, st] : fx.structure)
    j["structure"][std::to_string(m)] = {{"orientation", st.orientation},
                                         {"matrix", from_matrix(st.matrix)}};
  j["nullspace"] = json::object();
  for (auto& [m, rows] : fx.nullspace)
    j["nullspace"][std::to_string(m)] = from_matrix(rows);
  j["notes"] = fx.notes;
  return j.dump(1);
}

FixtureSet load_fixtures(const std::string& dir,
                         const std::vector<std::string>& case_ids) {
  FixtureSet set;
  for (auto& id : case_ids) {
    Fixture fx = load_fixture(dir + "/" + fixture_filename(id));
    if (fx.case_id != id)
      fail("case_id mismatch in " + fixture_filename(id));
    set.by_case.emplace(id, std::move(fx));
  }
  return set;
}

}  // namespace grastab
