#include "hsp/bialgebra.hpp"

#include "hsp/util.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace hsp {

IsoClass canonical_form(const HereditarySpecies& H, const HStructure& x) {
  return IsoClass{canonical_structure(H, x), structure_aut_order(H, x)};
}

int Family::total() const {
  int t = 0;
  for (auto& m : members) t += m.n;
  return t;
}

Family make_family(const HereditarySpecies& H, std::vector<HStructure> members) {
  Family F;
  F.members.reserve(members.size());
  for (auto& m : members) {
    if (m.n == 0) throw std::runtime_error("family member with empty carrier");
    F.members.push_back(canonical_structure(H, m));
  }
  std::sort(F.members.begin(), F.members.end());
  return F;
}

std::string family_key(const Family& F) {
  std::string s = "[";
  for (size_t i = 0; i < F.members.size(); ++i) {
    if (i) s += " · ";
    s += F.members[i].key();
  }
  return s + "]";
}

Family family_from_key(const std::string& key) {
  if (key.size() < 2 || key.front() != '[' || key.back() != ']')
    throw std::runtime_error("malformed family key: " + key);
  Family F;
  std::string inner = key.substr(1, key.size() - 2);
  size_t pos = 0;
  const std::string sep = " · ";
  while (pos < inner.size()) {
    size_t next = inner.find(sep, pos);
    if (next == std::string::npos) next = inner.size();
    F.members.push_back(structure_from_key(inner.substr(pos, next - pos)));
    pos = next == inner.size() ? next : next + sep.size();
  }
  return F;
}

Family multiply(const Family& F, const Family& G) {
  Family P;
  P.members = F.members;
  P.members.insert(P.members.end(), G.members.begin(), G.members.end());
  std::sort(P.members.begin(), P.members.end());
  return P;
}

Rat counit(const Family& F) {
  for (auto& m : F.members)
    if (m.n != 1) return 0;
  return 1;
}

namespace {

using FamPair = std::pair<Family, Family>;
using TypedComb = std::map<FamPair, Rat>;

// comultiplication of one structure: one term per partition of its carrier
TypedComb comultiply_single(const HereditarySpecies& H, const HStructure& x) {
  TypedComb out;
  for (auto& pi : enumerate_partitions(x.n)) {
    std::vector<HStructure> parts;
    for (auto& block : pi.blocks()) parts.push_back(restrict_to(H, x, block));
    Family left = make_family(H, std::move(parts));
    Family right = make_family(H, {quotient_by(H, x, pi)});
    out[{std::move(left), std::move(right)}] += 1;
  }
  return out;
}

LinComb to_lincomb(const TypedComb& t) {
  LinComb out;
  for (auto& [fp, c] : t) out.add({family_key(fp.first), family_key(fp.second)}, c);
  return out;
}

}  // namespace

LinComb comultiply(const HereditarySpecies& H, const Family& F) {
  TypedComb acc;
  acc[{Family{}, Family{}}] = 1;
  for (auto& member : F.members) {
    TypedComb term = comultiply_single(H, member);
    TypedComb next;
    for (auto& [fp1, c1] : acc)
      for (auto& [fp2, c2] : term)
        next[{multiply(fp1.first, fp2.first), multiply(fp1.second, fp2.second)}] += c1 * c2;
    acc = std::move(next);
  }
  return to_lincomb(acc);
}

std::vector<HStructure> iso_class_reps(const HereditarySpecies& H, int n) {
  std::vector<HStructure> reps;
  for (auto& x : H.structures(n)) reps.push_back(canonical_structure(H, x));
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

std::vector<Family> enumerate_families(const HereditarySpecies& H, int n_max) {
  std::vector<HStructure> pool;
  for (int n = 1; n <= n_max; ++n)
    for (auto& r : iso_class_reps(H, n)) pool.push_back(r);
  std::sort(pool.begin(), pool.end());
  std::vector<Family> out;
  std::vector<HStructure> current;
  // multisets as non-decreasing index sequences into the pool
  auto rec = [&](auto&& self, size_t start, int budget) -> void {
    Family F;
    F.members = current;
    out.push_back(std::move(F));
    for (size_t i = start; i < pool.size(); ++i) {
      if (pool[i].n > budget) continue;
      current.push_back(pool[i]);
      self(self, i, budget - pool[i].n);
      current.pop_back();
    }
  };
  rec(rec, 0, n_max);
  return out;
}

CheckReport check_coassociativity(const HereditarySpecies& H, int n_max) {
  auto delta_of_key = [&H](const std::string& key) {
    return comultiply(H, family_from_key(key));
  };
  auto counit_of_key = [](const std::string& key) { return counit(family_from_key(key)); };
  for (auto& F : enumerate_families(H, n_max)) {
    LinComb d = comultiply(H, F);
    LinComb lhs = apply_to_factor(d, 0, delta_of_key);
    LinComb rhs = apply_to_factor(d, 1, delta_of_key);
    if (!(lhs == rhs))
      return CheckReport::fail("coassociativity fails on " + family_key(F) + ": " +
                               lhs.to_string() + " vs " + rhs.to_string());
    LinComb self = LinComb::single({family_key(F)});
    if (!(contract_factor(d, 0, counit_of_key) == self))
      return CheckReport::fail("left counit law fails on " + family_key(F));
    if (!(contract_factor(d, 1, counit_of_key) == self))
      return CheckReport::fail("right counit law fails on " + family_key(F));
  }
  return CheckReport::pass("coassociativity and counit laws hold up to total size " +
                           std::to_string(n_max));
}

CheckReport check_bialgebra(const HereditarySpecies& H, int n_max) {
  auto co = check_coassociativity(H, n_max);
  if (!co.ok) return co;
  auto fams = enumerate_families(H, n_max);
  for (auto& F : fams)
    for (auto& G : fams) {
      if (F.total() + G.total() > n_max) continue;
      if (counit(multiply(F, G)) != counit(F) * counit(G))
        return CheckReport::fail("counit not multiplicative on " + family_key(F) + ", " +
                                 family_key(G));
      LinComb dF = comultiply(H, F);
      LinComb dG = comultiply(H, G);
      LinComb prod;
      for (auto& [kF, cF] : dF.terms)
        for (auto& [kG, cG] : dG.terms)
          prod.add({family_key(multiply(family_from_key(kF[0]), family_from_key(kG[0]))),
                    family_key(multiply(family_from_key(kF[1]), family_from_key(kG[1])))},
                   cF * cG);
      if (!(prod == comultiply(H, multiply(F, G))))
        return CheckReport::fail("Δ not multiplicative on " + family_key(F) + ", " +
                                 family_key(G));
    }
  return CheckReport::pass("bialgebra laws hold up to total size " + std::to_string(n_max));
}

}  // namespace hsp
