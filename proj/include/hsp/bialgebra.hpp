#ifndef HSP_BIALGEBRA_HPP
#define HSP_BIALGEBRA_HPP

#include "hsp/lincomb.hpp"
#include "hsp/report.hpp"
#include "hsp/species.hpp"

#include <string>
#include <vector>

namespace hsp {

// Isomorphism class of a structure: the least relabelling together with the
// order of its automorphism group.
struct IsoClass {
  HStructure rep;
  long long aut = 1;
};

IsoClass canonical_form(const HereditarySpecies& H, const HStructure& x);

// A multiset of non-empty structures, stored as sorted canonical
// representatives.  The basis of the incidence bialgebra.
struct Family {
  std::vector<HStructure> members;

  bool operator==(const Family&) const = default;
  bool operator<(const Family& o) const { return members < o.members; }
  int total() const;
};

// Canonicalizes every member and sorts; rejects members with empty carrier.
Family make_family(const HereditarySpecies& H, std::vector<HStructure> members);

// e.g. "[graphs:1: · graphs:2:1-2]"; the empty family is "[]".
std::string family_key(const Family& F);
Family family_from_key(const std::string& key);

// Concatenation product: multiset union.
Family multiply(const Family& F, const Family& G);

// 1 if every member is a singleton (vacuously on the empty family), else 0.
Rat counit(const Family& F);

// For a single structure G on V: sum over partitions pi of V of
// (family of blockwise restrictions) ⊗ (singleton family of the quotient);
// extended multiplicatively to families.  Keys are pairs of family keys.
LinComb comultiply(const HereditarySpecies& H, const Family& F);

// One canonical representative per iso-class of structures on n points.
std::vector<HStructure> iso_class_reps(const HereditarySpecies& H, int n);

// Every family (including the empty one) of total carrier size <= n_max.
std::vector<Family> enumerate_families(const HereditarySpecies& H, int n_max);

// (Δ⊗id)Δ = (id⊗Δ)Δ and both counit laws, on all families of total <= n_max.
CheckReport check_coassociativity(const HereditarySpecies& H, int n_max);

// Coassociativity plus Δ(F·G) = Δ(F)·Δ(G) and ε(F·G) = ε(F)ε(G).
CheckReport check_bialgebra(const HereditarySpecies& H, int n_max);

// Groupoid-level comultiplication: the homotopy fibre of the chain-forgetting
// face map over the singleton family of G, pushed forward along the
// fibre-restriction and quotient faces, with coefficients by map cardinality.
// Independent of comultiply; the two must agree.
LinComb groupoid_comultiply(const HereditarySpecies& H, const HStructure& G);

}  // namespace hsp

#endif
