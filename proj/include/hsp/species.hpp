#ifndef HSP_SPECIES_HPP
#define HSP_SPECIES_HPP

#include "hsp/partition.hpp"
#include "hsp/report.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hsp {

// A structure on the carrier {1..n}.  The payload is an edge set; the sets
// species keeps it empty.  Edges are stored sorted with a < b.
struct HStructure {
  std::string species;
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  bool operator==(const HStructure&) const = default;
  bool operator<(const HStructure& o) const {
    return std::tie(n, edges) < std::tie(o.n, o.edges);
  }
  std::string key() const;  // canonical serialization, e.g. "graphs:3:1-2,2-3"
};

HStructure sort_edges(HStructure x);

// Inverse of HStructure::key().
HStructure structure_from_key(const std::string& key);

// A species with quotients along surjections and restrictions along injections.
// Instances are plain values, so tests can build deliberately broken variants.
struct HereditarySpecies {
  std::string name;
  std::function<std::vector<HStructure>(int)> structures;
  // x on V, i: U >-> V; result on U with payload pulled back along i.
  std::function<HStructure(const HStructure&, const Injection&)> restrict_along;
  // x on V, p: V ->> W; result on W.
  std::function<HStructure(const HStructure&, const Surjection&)> quotient_along;
};

HereditarySpecies sets_species();
HereditarySpecies graphs_species();
const HereditarySpecies& species_by_name(const std::string& name);

// A span V <- U -> W with U monotonically embedded in V: the canonical
// representative of its span-isomorphism class.
struct PartialSurjection {
  int src_n = 0;                // |V|
  int tgt_n = 0;                // |W|
  std::vector<int> subset;      // U as an increasing subset of {1..src_n}
  Surjection sur;               // {1..|U|} ->> {1..tgt_n}

  bool operator==(const PartialSurjection&) const = default;
};

PartialSurjection make_partial_surjection(int src_n, std::vector<int> subset, Surjection sur);
PartialSurjection identity_span(int n);

// Composite "first a, then b", computed by set-level pullback of a's outgoing
// surjection against b's incoming injection.
PartialSurjection compose_partial_surjections(const PartialSurjection& a,
                                              const PartialSurjection& b);

// Restriction to the subset (monotone relabelling), then quotient.
HStructure act(const HereditarySpecies& H, const PartialSurjection& a, const HStructure& x);

// Restriction to a subset U of the carrier.
HStructure restrict_to(const HereditarySpecies& H, const HStructure& x, const std::vector<int>& U);

// Quotient by a partition of the carrier (blocks ordered by least element).
HStructure quotient_by(const HereditarySpecies& H, const HStructure& x, const Partition& pi);

// Identity and composition laws for both functorialities and for spans,
// exhaustively on carriers of size <= n_max.
CheckReport check_functoriality(const HereditarySpecies& H, int n_max);

// For every square: p: U ->> V a surjection, j: V' >-> V a monotone subset
// inclusion, U' = p^{-1}(im j) with induced i: U' >-> U and p': U' ->> V',
// and every structure x on U with |U| <= n_max, checks that
// quotient-then-restrict equals restrict-then-quotient.
CheckReport check_beck_chevalley(const HereditarySpecies& H, int n_max);

// The three compatibilities of blockwise restriction and quotient along a
// refinement pair tau <= sigma, as canonical iso-classes, |V| <= n_max.
CheckReport check_schmitt_identities(const HereditarySpecies& H, int n_max);

// Least relabelling of x over all permutations of its carrier; representatives
// of isomorphism classes throughout the library.
HStructure canonical_structure(const HereditarySpecies& H, const HStructure& x);

// Number of carrier permutations fixing x.
long long structure_aut_order(const HereditarySpecies& H, const HStructure& x);

}  // namespace hsp

#endif
