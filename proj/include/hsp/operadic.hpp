#ifndef HSP_OPERADIC_HPP
#define HSP_OPERADIC_HPP

#include "hsp/partition.hpp"
#include "hsp/report.hpp"
#include "hsp/species.hpp"

#include <functional>
#include <string>
#include <vector>

namespace hsp {

// Morphism y -> x between structures on ordinals: a surjection of carriers
// whose quotient of the source payload is literally the target payload.
struct OpMorphism {
  HStructure src, tgt;
  Surjection carrier;

  bool operator==(const OpMorphism&) const = default;
  std::string to_string() const;  // e.g. "graphs:3:1-2 --1,1,2--> graphs:2:"
};

// The category of all structures of H on the ordinals {1..n}, n <= n_max,
// with quotient-lifted surjections as morphisms.  Forgetting payloads is a
// discrete opfibration over finite ordinals and surjections: each source
// structure lifts each carrier surjection exactly once.
struct OperadicCategory {
  HereditarySpecies species;
  int n_max = 0;
  std::vector<HStructure> objects;  // sorted by (carrier size, payload)
  HStructure terminal;              // the unique structure on one point

  // All morphisms y -> x (carrier surjections in lexicographic order).
  std::vector<OpMorphism> hom(const HStructure& y, const HStructure& x) const;
  // All morphisms out of y, by target carrier size then carrier map.
  std::vector<OpMorphism> out_of(const HStructure& y) const;
  long long num_morphisms() const;

  OpMorphism identity(const HStructure& x) const;
  // The unique morphism to the one-point structure.
  OpMorphism to_terminal(const HStructure& x) const;
};

// Requires a unique structure on a one-point carrier.
OperadicCategory build_opcat(const HereditarySpecies& H, int n_max);

// Carrier size of an object.
int cardinality(const HStructure& x);

// g after f (f first); requires f.tgt == g.src.
OpMorphism compose(const OperadicCategory& C, const OpMorphism& g, const OpMorphism& f);

// Restriction of the source payload to the i-th carrier fibre, relabelled
// along its monotone inclusion; i ranges over 1..cardinality(f.tgt).
HStructure fibre(const OperadicCategory& C, const OpMorphism& f, int i);

// For g: z -> y, f: y -> x, i in 1..cardinality(x): the induced morphism
// fibre(f∘g, i) -> fibre(f, i) whose carrier is the fibre map of the carriers.
OpMorphism fibre_morphism(const OperadicCategory& C, const OpMorphism& g, const OpMorphism& f,
                          int i);

// Swappable fibre computation so tests can exercise deliberately broken
// variants; empty means the canonical `fibre`.
using FibreFunction = std::function<HStructure(const OperadicCategory&, const OpMorphism&, int)>;

// The axioms of an operadic category, verified exhaustively:
//   (A1) each connected component has a local terminal object receiving
//        exactly one morphism from every object of the component, and the
//        chosen terminal is the one of its component;
//   (A2) every fibre of an identity equals the chosen terminal;
//   (A3) every fibre is a valid object: its carrier size matches the carrier
//        fibre and its payload is listed by the species on that ordinal;
//   (A4) the fibre of the morphism to the terminal is the source itself, and
//        the fibre morphism of g over the terminal is g;
//   (A5) fibres of fibre morphisms are the matching fibres of the inner
//        morphism, and iterated fibre morphisms collapse to fibre morphisms
//        (the latter over composable chains of length chain_len >= 3).
CheckReport check_axioms(const OperadicCategory& C, int chain_len,
                         const FibreFunction& fibre_fn = {});

// A map of species: one payload map per carrier size, natural for both
// restrictions along injections and quotients along surjections.
struct SpeciesMorphism {
  HereditarySpecies src, tgt;
  std::function<HStructure(const HStructure&)> map;
  std::string name;
};

// Forgets payloads down to the plain sets species.
SpeciesMorphism underlying_sets_morphism(const HereditarySpecies& H);

// Naturality of phi against all quotients and restrictions on carriers
// <= n_max, then preservation of terminal, cardinality, morphisms, fibres and
// fibre morphisms by the induced functor between the categories at n_max.
CheckReport check_operadic_functor(const SpeciesMorphism& phi, int n_max);

}  // namespace hsp

#endif
