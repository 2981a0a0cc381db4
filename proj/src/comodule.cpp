#include "hsp/comodule.hpp"

#include "hsp/util.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace hsp {

int AFamily::total() const {
  int t = 0;
  for (auto& m : members) t += m.n;
  return t;
}

AFamily make_afamily(const HereditarySpecies& H, std::vector<HStructure> members) {
  AFamily F;
  F.members.reserve(members.size());
  for (auto& m : members) F.members.push_back(canonical_structure(H, m));
  std::sort(F.members.begin(), F.members.end());
  return F;
}

std::string afamily_key(const AFamily& F) {
  std::string s = "{";
  for (size_t i = 0; i < F.members.size(); ++i) {
    if (i) s += " · ";
    s += F.members[i].key();
  }
  return s + "}";
}

AFamily afamily_from_key(const std::string& key) {
  if (key.size() < 2 || key.front() != '{' || key.back() != '}')
    throw std::runtime_error("malformed A-family key: " + key);
  AFamily F;
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

AFamily multiply_A(const AFamily& F, const AFamily& G) {
  AFamily P;
  P.members = F.members;
  P.members.insert(P.members.end(), G.members.begin(), G.members.end());
  std::sort(P.members.begin(), P.members.end());
  return P;
}

Rat counit_A(const AFamily& F) {
  for (auto& m : F.members)
    if (m.n != 0) return 0;
  return 1;
}

namespace {

using APair = std::pair<AFamily, AFamily>;

std::vector<int> complement_of(const std::vector<int>& U, int n) {
  std::vector<int> C;
  std::vector<char> in(n + 1, 0);
  for (int u : U) in[u] = 1;
  for (int v = 1; v <= n; ++v)
    if (!in[v]) C.push_back(v);
  return C;
}

// one ordered 2-layering term per subset of the carrier
std::map<APair, Rat> comultiply_A_single(const HereditarySpecies& H, const HStructure& x) {
  std::map<APair, Rat> out;
  for (auto& U : all_subsets(x.n)) {
    AFamily left = make_afamily(H, {restrict_to(H, x, U)});
    AFamily right = make_afamily(H, {restrict_to(H, x, complement_of(U, x.n))});
    out[{std::move(left), std::move(right)}] += 1;
  }
  return out;
}

}  // namespace

LinComb comultiply_A(const HereditarySpecies& H, const AFamily& F) {
  std::map<APair, Rat> acc;
  acc[{AFamily{}, AFamily{}}] = 1;
  for (auto& member : F.members) {
    auto term = comultiply_A_single(H, member);
    std::map<APair, Rat> next;
    for (auto& [p1, c1] : acc)
      for (auto& [p2, c2] : term)
        next[{multiply_A(p1.first, p2.first), multiply_A(p1.second, p2.second)}] += c1 * c2;
    acc = std::move(next);
  }
  LinComb out;
  for (auto& [p, c] : acc) out.add({afamily_key(p.first), afamily_key(p.second)}, c);
  return out;
}

LinComb coact(const HereditarySpecies& H, const HStructure& G) {
  LinComb out;
  if (G.n == 0) {
    out.add({family_key(Family{}), afamily_key(make_afamily(H, {G}))}, 1);
    return out;
  }
  for (auto& pi : enumerate_partitions(G.n)) {
    std::vector<HStructure> parts;
    for (auto& block : pi.blocks()) parts.push_back(restrict_to(H, G, block));
    Family left = make_family(H, std::move(parts));
    AFamily right = make_afamily(H, {quotient_by(H, G, pi)});
    out.add({family_key(left), afamily_key(right)}, 1);
  }
  return out;
}

LinComb coact_free_with(const HereditarySpecies& H, const AFamily& F,
                        const SingleCoaction& single) {
  std::map<std::pair<Family, AFamily>, Rat> acc;
  acc[{Family{}, AFamily{}}] = 1;
  for (auto& member : F.members) {
    LinComb term = single(H, member);
    std::map<std::pair<Family, AFamily>, Rat> next;
    for (auto& [p1, c1] : acc)
      for (auto& [k2, c2] : term.terms) {
        Family b = multiply(p1.first, family_from_key(k2[0]));
        AFamily a = multiply_A(p1.second, afamily_from_key(k2[1]));
        next[{std::move(b), std::move(a)}] += c1 * c2;
      }
    acc = std::move(next);
  }
  LinComb out;
  for (auto& [p, c] : acc) out.add({family_key(p.first), afamily_key(p.second)}, c);
  return out;
}

LinComb coact_free(const HereditarySpecies& H, const AFamily& F) {
  return coact_free_with(H, F, [](const HereditarySpecies& Hs, const HStructure& G) {
    return coact(Hs, G);
  });
}

std::vector<AFamily> enumerate_afamilies(const HereditarySpecies& H, int n_max) {
  std::vector<HStructure> pool;
  for (int n = 0; n <= n_max; ++n)
    for (auto& r : iso_class_reps(H, n)) pool.push_back(r);
  std::sort(pool.begin(), pool.end());
  std::vector<AFamily> out;
  std::vector<HStructure> current;
  auto rec = [&](auto&& self, size_t start, int budget, int empties) -> void {
    AFamily F;
    F.members = current;
    out.push_back(std::move(F));
    for (size_t i = start; i < pool.size(); ++i) {
      if (pool[i].n > budget) continue;
      if (pool[i].n == 0 && empties >= 2) continue;
      current.push_back(pool[i]);
      self(self, i, budget - pool[i].n, empties + (pool[i].n == 0 ? 1 : 0));
      current.pop_back();
    }
  };
  rec(rec, 0, n_max, 0);
  return out;
}

CheckReport check_A_bialgebra(const HereditarySpecies& H, int n_max) {
  auto delta_of = [&H](const std::string& k) { return comultiply_A(H, afamily_from_key(k)); };
  auto counit_of = [](const std::string& k) { return counit_A(afamily_from_key(k)); };
  auto fams = enumerate_afamilies(H, n_max);
  for (auto& F : fams) {
    LinComb d = comultiply_A(H, F);
    if (!(apply_to_factor(d, 0, delta_of) == apply_to_factor(d, 1, delta_of)))
      return CheckReport::fail("Δ_A not coassociative on " + afamily_key(F));
    LinComb self = LinComb::single({afamily_key(F)});
    if (!(contract_factor(d, 0, counit_of) == self))
      return CheckReport::fail("left counit law fails on " + afamily_key(F));
    if (!(contract_factor(d, 1, counit_of) == self))
      return CheckReport::fail("right counit law fails on " + afamily_key(F));
  }
  for (auto& F : fams)
    for (auto& G : fams) {
      if (F.total() + G.total() > n_max) continue;
      LinComb dF = comultiply_A(H, F);
      LinComb dG = comultiply_A(H, G);
      LinComb prod;
      for (auto& [kF, cF] : dF.terms)
        for (auto& [kG, cG] : dG.terms)
          prod.add(
              {afamily_key(multiply_A(afamily_from_key(kF[0]), afamily_from_key(kG[0]))),
               afamily_key(multiply_A(afamily_from_key(kF[1]), afamily_from_key(kG[1])))},
              cF * cG);
      if (!(prod == comultiply_A(H, multiply_A(F, G))))
        return CheckReport::fail("Δ_A not multiplicative on " + afamily_key(F) + ", " +
                                 afamily_key(G));
      if (counit_A(multiply_A(F, G)) != counit_A(F) * counit_A(G))
        return CheckReport::fail("ε_A not multiplicative on " + afamily_key(F) + ", " +
                                 afamily_key(G));
    }
  return CheckReport::pass("A is a bialgebra up to total size " + std::to_string(n_max));
}

CheckReport check_comodule_with(const HereditarySpecies& H, int n_max,
                                const SingleCoaction& single) {
  auto deltaB_of = [&H](const std::string& k) { return comultiply(H, family_from_key(k)); };
  auto gamma_of = [&](const std::string& k) {
    return coact_free_with(H, afamily_from_key(k), single);
  };
  auto counitB_of = [](const std::string& k) { return counit(family_from_key(k)); };
  for (auto& F : enumerate_afamilies(H, n_max)) {
    LinComb g = coact_free_with(H, F, single);
    LinComb lhs = apply_to_factor(g, 0, deltaB_of);
    LinComb rhs = apply_to_factor(g, 1, gamma_of);
    if (!(lhs == rhs))
      return CheckReport::fail("comodule coassociativity fails on " + afamily_key(F) +
                               ": " + lhs.to_string() + " vs " + rhs.to_string());
    if (!(contract_factor(g, 0, counitB_of) == LinComb::single({afamily_key(F)})))
      return CheckReport::fail("comodule counit law fails on " + afamily_key(F));
  }
  return CheckReport::pass("left comodule axioms hold up to total size " +
                           std::to_string(n_max));
}

CheckReport check_comodule(const HereditarySpecies& H, int n_max) {
  return check_comodule_with(
      H, n_max,
      [](const HereditarySpecies& Hs, const HStructure& G) { return coact(Hs, G); });
}

namespace {

// (B1, A1, B2, A2) -> (B1·B2, A1, A2)
LinComb swap_and_multiply(const LinComb& four) {
  LinComb out;
  for (auto& [k, c] : four.terms) {
    Family b = multiply(family_from_key(k[0]), family_from_key(k[2]));
    out.add({family_key(b), k[1], k[3]}, c);
  }
  return out;
}

}  // namespace

CheckReport check_comodule_bialgebra_with(const HereditarySpecies& H, int n_max,
                                          const SingleCoaction& single) {
  auto gamma_of = [&](const std::string& k) {
    return coact_free_with(H, afamily_from_key(k), single);
  };
  auto deltaA_of = [&H](const std::string& k) {
    return comultiply_A(H, afamily_from_key(k));
  };
  auto counitA_of = [](const std::string& k) { return counit_A(afamily_from_key(k)); };

  if (!(coact_free_with(H, AFamily{}, single) ==
        LinComb::single({family_key(Family{}), afamily_key(AFamily{})})))
    return CheckReport::fail("unit of A is not coinvariant");

  auto fams = enumerate_afamilies(H, n_max);
  for (auto& F : fams) {
    // Δ_A is a comodule map: coact both factors, swap middle, multiply in B
    LinComb dA = comultiply_A(H, F);
    LinComb lhs = swap_and_multiply(
        apply_to_factor(apply_to_factor(dA, 0, gamma_of), 2, gamma_of));
    LinComb rhs = apply_to_factor(coact_free_with(H, F, single), 1, deltaA_of);
    if (!(lhs == rhs))
      return CheckReport::fail("Δ_A is not a comodule map on " + afamily_key(F) + ": " +
                               lhs.to_string() + " vs " + rhs.to_string());
    // ε_A is a comodule map
    LinComb eps_then_unit = LinComb::single({family_key(Family{})}).scaled(counit_A(F));
    LinComb gamma_then_eps =
        contract_factor(coact_free_with(H, F, single), 1, counitA_of);
    if (!(eps_then_unit == gamma_then_eps))
      return CheckReport::fail("ε_A is not a comodule map on " + afamily_key(F));
  }
  for (auto& F : fams)
    for (auto& G : fams) {
      if (F.total() + G.total() > n_max) continue;
      LinComb gF = coact_free_with(H, F, single);
      LinComb gG = coact_free_with(H, G, single);
      LinComb merged;
      for (auto& [kF, cF] : gF.terms)
        for (auto& [kG, cG] : gG.terms)
          merged.add(
              {family_key(multiply(family_from_key(kF[0]), family_from_key(kG[0]))),
               afamily_key(multiply_A(afamily_from_key(kF[1]), afamily_from_key(kG[1])))},
              cF * cG);
      if (!(merged == coact_free_with(H, multiply_A(F, G), single)))
        return CheckReport::fail("γ is not multiplicative on " + afamily_key(F) + ", " +
                                 afamily_key(G));
    }
  return CheckReport::pass("A is a bialgebra in B-comodules up to total size " +
                           std::to_string(n_max));
}

CheckReport check_comodule_bialgebra(const HereditarySpecies& H, int n_max) {
  return check_comodule_bialgebra_with(
      H, n_max,
      [](const HereditarySpecies& Hs, const HStructure& G) { return coact(Hs, G); });
}

}  // namespace hsp
