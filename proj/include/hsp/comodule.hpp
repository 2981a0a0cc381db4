#ifndef HSP_COMODULE_HPP
#define HSP_COMODULE_HPP

#include "hsp/bialgebra.hpp"
#include "hsp/lincomb.hpp"
#include "hsp/report.hpp"
#include "hsp/species.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hsp {

// A multiset of structures with empty carriers allowed; basis of the
// restriction-species bialgebra A.  Keys use braces to keep the two sides
// apart: "{graphs:0: · graphs:2:1-2}", empty family "{}".
struct AFamily {
  std::vector<HStructure> members;

  bool operator==(const AFamily&) const = default;
  bool operator<(const AFamily& o) const { return members < o.members; }
  int total() const;
};

AFamily make_afamily(const HereditarySpecies& H, std::vector<HStructure> members);
std::string afamily_key(const AFamily& F);
AFamily afamily_from_key(const std::string& key);

// Concatenation product.
AFamily multiply_A(const AFamily& F, const AFamily& G);

// 1 iff every member has empty carrier.
Rat counit_A(const AFamily& F);

// Sum over ordered complementary subset pairs (U, V∖U) of G|U ⊗ G|(V∖U) per
// member, multiplied out.  Keys are pairs of AFamily keys.
LinComb comultiply_A(const HereditarySpecies& H, const AFamily& F);

// Coaction of the incidence bialgebra on one structure: sum over partitions of
// (blockwise restrictions, a B-family) ⊗ (quotient, a singleton AFamily); the
// empty-carrier structure coacts as (empty B-family) ⊗ itself.
LinComb coact(const HereditarySpecies& H, const HStructure& G);

// One coaction term per member, B-factors multiplied in B, A-factors collected
// into a single family.
LinComb coact_free(const HereditarySpecies& H, const AFamily& F);

// Same, with the single-structure coaction swapped out (negative controls).
using SingleCoaction = std::function<LinComb(const HereditarySpecies&, const HStructure&)>;
LinComb coact_free_with(const HereditarySpecies& H, const AFamily& F,
                        const SingleCoaction& single);

// Every AFamily of total size <= n_max with at most two empty-carrier members.
std::vector<AFamily> enumerate_afamilies(const HereditarySpecies& H, int n_max);

// A is itself a bialgebra: coassociativity and counit laws for Δ_A, and
// compatibility with concatenation, exhaustively on the enumerated range.
CheckReport check_A_bialgebra(const HereditarySpecies& H, int n_max);

// Left-comodule axioms for γ: (Δ_B ⊗ id)∘γ = (id ⊗ γ)∘γ and (ε_B ⊗ id)∘γ = id.
CheckReport check_comodule(const HereditarySpecies& H, int n_max);
CheckReport check_comodule_with(const HereditarySpecies& H, int n_max,
                                const SingleCoaction& single);

// A is a bialgebra in B-comodules: Δ_A, ε_A, μ_A, η_A are comodule maps.
CheckReport check_comodule_bialgebra(const HereditarySpecies& H, int n_max);
CheckReport check_comodule_bialgebra_with(const HereditarySpecies& H, int n_max,
                                          const SingleCoaction& single);

}  // namespace hsp

#endif
