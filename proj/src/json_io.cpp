#include "hsp/json_io.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "hsp/bialgebra.hpp"
#include "hsp/comodule.hpp"
#include "hsp/rational.hpp"

namespace hsp {

using nlohmann::json;

json structure_to_json(const HStructure& x) {
  json edges = json::array();
  for (const auto& [a, b] : x.edges) edges.push_back(json::array({a, b}));
  return {{"species", x.species}, {"n", x.n}, {"edges", edges}};
}

HStructure structure_from_json(const json& j, const std::string& species) {
  if (!j.is_object()) throw std::runtime_error("a structure must be a JSON object");
  std::string sp = species;
  if (j.contains("species")) {
    sp = j.at("species").get<std::string>();
    if (!species.empty() && sp != species)
      throw std::runtime_error("structure species '" + sp + "' does not match --species '" +
                               species + "'");
  }
  if (sp.empty()) throw std::runtime_error("no species given for the structure");
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw std::runtime_error("a structure needs an integer carrier size \"n\"");
  const int n = j.at("n").get<int>();
  if (n < 0) throw std::runtime_error("the carrier size must be non-negative");

  HStructure x;
  x.species = sp;
  x.n = n;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::runtime_error("each edge must be a pair of vertices");
      int a = e[0].get<int>(), b = e[1].get<int>();
      if (a == b) throw std::runtime_error("edge endpoints must differ");
      if (a > b) std::swap(a, b);
      if (a < 1 || b > n)
        throw std::runtime_error("edge endpoint outside the carrier {1.." + std::to_string(n) +
                                 "}");
      x.edges.emplace_back(a, b);
    }
  }
  x = sort_edges(std::move(x));
  if (std::adjacent_find(x.edges.begin(), x.edges.end()) != x.edges.end())
    throw std::runtime_error("duplicate edge in structure");
  if (sp == "sets" && !x.edges.empty())
    throw std::runtime_error("structures of the species 'sets' carry no edges");
  return x;
}

namespace {

json side_to_json(const std::string& key) {
  json members = json::array();
  if (!key.empty() && key.front() == '[') {
    for (const auto& m : family_from_key(key).members) members.push_back(structure_to_json(m));
    return {{"side", "B"}, {"members", members}};
  }
  if (!key.empty() && key.front() == '{') {
    for (const auto& m : afamily_from_key(key).members) members.push_back(structure_to_json(m));
    return {{"side", "A"}, {"members", members}};
  }
  throw std::runtime_error("basis key with unknown bracket shape: " + key);
}

std::string side_from_json(const json& side) {
  const std::string kind = side.at("side").get<std::string>();
  std::vector<HStructure> members;
  for (const auto& m : side.at("members")) members.push_back(structure_from_json(m, ""));
  if (kind == "B") {
    if (members.empty()) return "[]";
    return family_key(make_family(species_by_name(members.front().species), members));
  }
  if (kind == "A") {
    if (members.empty()) return "{}";
    return afamily_key(make_afamily(species_by_name(members.front().species), members));
  }
  throw std::runtime_error("side must be \"B\" or \"A\", got: " + kind);
}

}  // namespace

json lincomb_to_json(const LinComb& lc) {
  json terms = json::array();
  for (const auto& [key, coeff] : lc.terms) {
    if (key.size() != 2)
      throw std::runtime_error("only two-factor terms have a JSON form, key has " +
                               std::to_string(key.size()));
    terms.push_back({{"coefficient", rat_to_string(coeff)},
                     {"left", side_to_json(key[0])},
                     {"right", side_to_json(key[1])}});
  }
  return terms;
}

LinComb lincomb_from_json(const json& terms) {
  LinComb lc;
  for (const auto& t : terms)
    lc.add({side_from_json(t.at("left")), side_from_json(t.at("right"))},
           rat_from_string(t.at("coefficient").get<std::string>()));
  return lc;
}

LinComb lincomb_from_text(const std::string& text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  LinComb lc;
  if (s.empty() || s == "0") return lc;

  const std::string term_sep = " + ", coeff_sep = "·", tensor = " ⊗ ";
  size_t pos = 0;
  while (pos <= s.size()) {
    const size_t next = s.find(term_sep, pos);
    const std::string term =
        s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    const size_t d = term.find(coeff_sep);
    if (d == std::string::npos)
      throw std::runtime_error("term without a coefficient separator: " + term);
    const Rat coeff = rat_from_string(term.substr(0, d));
    const std::string rest = term.substr(d + coeff_sep.size());
    BasisKey key;
    size_t kpos = 0;
    while (true) {
      const size_t t = rest.find(tensor, kpos);
      if (t == std::string::npos) {
        key.push_back(rest.substr(kpos));
        break;
      }
      key.push_back(rest.substr(kpos, t - kpos));
      kpos = t + tensor.size();
    }
    lc.add(key, coeff);
    if (next == std::string::npos) break;
    pos = next + term_sep.size();
  }
  return lc;
}

json groupoid_to_json(const FiniteGroupoid& G) {
  json objects = json::array();
  for (const auto& o : G.objects) objects.push_back(o);
  json morphisms = json::array();
  for (int i = 0; i < G.num_morphisms(); ++i)
    morphisms.push_back(json::array({G.morphisms[i].src, G.morphisms[i].tgt, i}));
  json composition = json::array();
  for (int f = 0; f < G.num_morphisms(); ++f)
    for (int g = 0; g < G.num_morphisms(); ++g)
      if (G.morphisms[f].tgt == G.morphisms[g].src)
        composition.push_back(json::array({f, g, G.compose(g, f)}));
  return {{"objects", objects}, {"morphisms", morphisms}, {"composition", composition}};
}

json gmap_to_json(const GroupoidMap& f) {
  return {{"name", f.name}, {"objects", f.obj_map}, {"morphisms", f.mor_map}};
}

}  // namespace hsp
