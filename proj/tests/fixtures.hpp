#ifndef HSP_TEST_FIXTURES_HPP
#define HSP_TEST_FIXTURES_HPP

#include "hsp/comodule.hpp"
#include "hsp/operadic.hpp"
#include "hsp/species.hpp"

#include <algorithm>

namespace hsp_fixtures {

// Deliberately wrong variant of the graphs species: after the true quotient it
// deletes every edge incident to vertex 1 of the target.  Label-sensitive, so
// it violates the identity law, the refinement compatibilities, and
// coassociativity, while still typechecking as a species.
inline hsp::HereditarySpecies broken_quotient_species() {
  hsp::HereditarySpecies H = hsp::graphs_species();
  H.name = "broken-quotient";
  auto good = H.quotient_along;
  H.quotient_along = [good](const hsp::HStructure& x, const hsp::Surjection& p) {
    hsp::HStructure y = good(x, p);
    y.edges.erase(std::remove_if(y.edges.begin(), y.edges.end(),
                                 [](auto& e) { return e.first == 1 || e.second == 1; }),
                  y.edges.end());
    return y;
  };
  return H;
}

// Coaction with the quotient step omitted: the right-hand factor is the
// structure itself rather than its quotient by the partition.  Breaks the
// comodule coassociativity diagram (the quotient is what makes the second
// coaction act on the collapsed structure).
inline hsp::LinComb broken_coaction(const hsp::HereditarySpecies& H,
                                    const hsp::HStructure& G) {
  using namespace hsp;
  LinComb out;
  if (G.n == 0) {
    out.add({family_key(Family{}), afamily_key(make_afamily(H, {G}))}, 1);
    return out;
  }
  for (auto& pi : enumerate_partitions(G.n)) {
    std::vector<HStructure> parts;
    for (auto& block : pi.blocks()) parts.push_back(restrict_to(H, G, block));
    out.add({family_key(make_family(H, std::move(parts))),
             afamily_key(make_afamily(H, {G}))},
            1);
  }
  return out;
}

// Fibre computation that forgets to relabel: it keeps the edges of the source
// restricted to the carrier fibre under their ORIGINAL labels, so any edge not
// sitting inside an initial segment yields endpoints outside {1..k}.  Valid
// per-object data that is not an object of the category.
inline hsp::FibreFunction unrelabeled_fibre() {
  return [](const hsp::OperadicCategory&, const hsp::OpMorphism& f, int i) {
    auto inj = hsp::fibres(f.carrier)[static_cast<size_t>(i) - 1];
    hsp::HStructure out{f.src.species, inj.src_n, {}};
    auto in_fibre = [&](int v) {
      return std::find(inj.values.begin(), inj.values.end(), v) != inj.values.end();
    };
    for (auto& e : f.src.edges)
      if (in_fibre(e.first) && in_fibre(e.second)) out.edges.push_back(e);
    return hsp::sort_edges(out);
  };
}

// Payload map sending each graph to its complement.  It commutes with
// restrictions but not with quotients (an edge between two blocks survives a
// quotient iff SOME cross edge exists, which is not complement-invariant), so
// it does not induce a functor of the operadic categories.
inline hsp::SpeciesMorphism edge_complement_morphism() {
  hsp::SpeciesMorphism phi;
  phi.src = hsp::graphs_species();
  phi.tgt = hsp::graphs_species();
  phi.name = "edge-complement";
  phi.map = [](const hsp::HStructure& x) {
    hsp::HStructure out{x.species, x.n, {}};
    for (int a = 1; a <= x.n; ++a)
      for (int b = a + 1; b <= x.n; ++b) {
        auto e = std::make_pair(a, b);
        if (std::find(x.edges.begin(), x.edges.end(), e) == x.edges.end())
          out.edges.push_back(e);
      }
    return out;
  };
  return phi;
}

}  // namespace hsp_fixtures

#endif
