#include "vsym/io.hpp"

#include <fstream>
#include <sstream>

#include "vsym/errors.hpp"

namespace vsym {

namespace {

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const Presentation& p) {
  json j;
  j["name"] = p.name;
  j["generators"] = json::array();
  for (const auto& g : p.generators) j["generators"].push_back(to_string(g));
  j["relators"] = json::array();
  for (const auto& r : p.relators) j["relators"].push_back(to_string(r));
  return j;
}

Presentation presentation_from_json(const json& j) {
  const auto name = j.contains("name") ? field<std::string>(j, "name") : std::string("input");
  std::vector<GenSym> gens;
  for (const auto& g : field<std::vector<std::string>>(j, "generators")) gens.push_back(parse_gensym(g));
  std::vector<Word> rels;
  for (const auto& r : field<std::vector<std::string>>(j, "relators")) rels.push_back(parse_word(r));
  return make_presentation(name, std::move(gens), std::move(rels));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Presentation read_presentation(const std::string& path) { return presentation_from_json(read_json_file(path)); }

json to_json(const AbelianInvariants& a) {
  json j;
  j["torsion"] = json::array();
  for (const auto& d : a.torsion) j["torsion"].push_back(integer(d));
  j["freeRank"] = a.free_rank;
  return j;
}

json to_json(const Class2Quotient& q) {
  json j;
  j["abelian"] = to_json(q.abelian);
  j["central"] = to_json(q.central);
  j["order"] = q.order ? integer(*q.order) : json(nullptr);
  return j;
}

json to_json(const CrystoElement<long long>& e) {
  const PairIndexer idx(e.n());
  json v = json::object();
  for (int k = 0; k < idx.dim(); ++k)
    if (e.v(k) != 0) {
      auto [i, j] = idx.pair(k);
      v[std::to_string(i) + "," + std::to_string(j)] = e.v(k);
    }
  return json{{"v", v}, {"perm", e.sigma.one_line()}};
}

CrystoElement<long long> element_from_json(int n, const json& j) {
  const PairIndexer idx(n);
  auto e = CrystoElement<long long>::identity(n);
  if (j.contains("perm")) {
    const auto perm = field<std::vector<int>>(j, "perm");
    if (static_cast<int>(perm.size()) != n)
      throw ParseError("perm has " + std::to_string(perm.size()) + " entries, expected " + std::to_string(n));
    e.sigma = Permutation::from_one_line(perm);
  }
  if (j.contains("v")) {
    const auto& v = j.at("v");
    if (!v.is_object()) throw ParseError("'v' must be an object keyed by \"i,j\"");
    for (const auto& [key, val] : v.items()) {
      int a = 0, b = 0;
      char comma = 0;
      std::istringstream ks(key);
      if (!(ks >> a >> comma >> b) || comma != ',' || !ks.eof()) throw ParseError("bad pair key '" + key + "'");
      if (!val.is_number_integer()) throw ParseError("coefficient of " + key + " is not an integer");
      e.v(idx.index(a, b)) = val.get<long long>();
    }
  }
  return e;
}

ActionSpec action_from_json(const json& j) {
  const int n = field<int>(j, "n");
  std::vector<Eigen::MatrixXi> gens;
  for (const auto& rows : field<std::vector<std::vector<std::vector<int>>>>(j, "generators")) {
    Eigen::MatrixXi m(static_cast<Eigen::Index>(rows.size()), rows.empty() ? 0 : static_cast<Eigen::Index>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (static_cast<Eigen::Index>(rows[r].size()) != m.cols()) throw ParseError("ragged action matrix");
      for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    }
    gens.push_back(std::move(m));
  }
  return ActionSpec(n, std::move(gens));
}

json to_json(const SimpleGraph& g, const ChordalityResult& r) {
  auto labels = [&](const std::vector<int>& vs) {
    json a = json::array();
    for (int v : vs) a.push_back(g.label(v));
    return a;
  };
  json j;
  j["vertices"] = g.size();
  j["edges"] = g.edge_count();
  j["chordal"] = r.chordal;
  if (r.chordal)
    j["eliminationOrder"] = labels(r.elimination_order);
  else
    j["chordlessCycle"] = labels(r.chordless_cycle);
  return j;
}

json gamma_table(const SchreierRewriter& rw) {
  json j = json::object();
  for (const auto& g : rw.nontrivial())
    j[to_string(*g.symbol)] = json{{"rep", g.mu.empty() ? std::string("1") : to_string(g.mu)}, {"gen", to_string(g.a)}, {"value", to_string(g.value)}};
  return j;
}

}  // namespace vsym
