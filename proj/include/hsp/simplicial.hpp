#pragma once

// Truncated simplicial groupoids of surjection chains, plain or decorated,
// in two presentations:
//
//   - chain style: one chain  A_0 ->> A_1 ->> ... ->> A_n  per level-n object
//     (sets may be empty), faces compose or drop end maps, degeneracies
//     duplicate a set;
//   - family style: a level-n object is a finite family of chains of n sets
//     with non-empty sets; besides dropping or composing, the bottom face
//     forgets the first sets and the top face splits a family into the fibres
//     over its last sets, while the top degeneracy appends the map to the
//     terminal set memberwise.
//
// Either presentation can carry a decoration by structures of a hereditary
// species on the first set of each chain; faces transport the decoration by
// quotienting (bottom) or restricting (top).  The checkers at the end verify
// the strict simplicial identities, the pullback conditions that make the
// comultiplications coassociative, the Segal condition, culf-ness of the
// comparison functors, completeness/local finiteness, and the levelwise
// equivalence between the two presentations.

#include <memory>
#include <string>
#include <vector>

#include "hsp/groupoid.hpp"
#include "hsp/report.hpp"
#include "hsp/species.hpp"

namespace hsp {

// A chain of finite sets {1..sizes[0]} ->> {1..sizes[1]} ->> ... and the
// surjections between consecutive ones (values 1-based).  A chain may have
// zero sets (the empty chain, key "e"); family members always have non-empty
// sets, chain-style objects may have empty ones.
struct SChain {
  std::vector<int> sizes;
  std::vector<std::vector<int>> arrows;  // arrows[t][v-1] in 1..sizes[t+1]

  int num_sets() const { return static_cast<int>(sizes.size()); }
  std::string key() const;
  bool operator==(const SChain& o) const = default;
  bool operator<(const SChain& o) const;
};

// One member of a level object: a chain, optionally decorated with a species
// structure on its first set.
struct SimpMember {
  SChain chain;
  bool decorated = false;
  HStructure structure;  // meaningful only when decorated

  std::string key() const;
  bool operator==(const SimpMember& o) const;
  bool operator<(const SimpMember& o) const;
};

// A level object: a sorted family of members (family style) or a single
// member (chain style).
struct SimpObj {
  bool family = true;
  std::vector<SimpMember> members;

  std::string key() const;
  int first_total() const;  // total size of the first sets (empty chains count 1)
};

// A truncated simplicial groupoid: levels 0..N, faces d(n,i): X_n -> X_{n-1}
// and degeneracies s(n,i): X_n -> X_{n+1}.
struct TruncatedSimplicialGroupoid {
  std::string name;
  bool family = true;
  bool decorated = false;
  const HereditarySpecies* species = nullptr;
  int k = 0;  // bound on the size of the first set(s)
  int N = 0;  // truncation level

  std::vector<GroupoidPtr> level;              // 0..N
  std::vector<std::vector<SimpObj>> objs;      // decoded objects per level
  std::vector<std::vector<GroupoidMap>> face;  // face[n][i], n in 1..N
  std::vector<std::vector<GroupoidMap>> degen; // degen[n][i], n in 0..N-1

  const GroupoidMap& d(int n, int i) const { return face[n][i]; }
  const GroupoidMap& s(int n, int i) const { return degen[n][i]; }
};

// Chains of n+1 possibly-empty sets, first set of size <= k.
TruncatedSimplicialGroupoid build_NSur(int k, int N);
// As build_NSur, decorated on the first set (bottom face pushes forward).
TruncatedSimplicialGroupoid build_M(const HereditarySpecies& H, int k, int N);
// Families of chains of n non-empty sets, total first size <= k.
TruncatedSimplicialGroupoid build_S(int k, int N);
// As build_S, each member decorated on its first set; level 0 is undecorated
// and the top degeneracy decorates new singletons with the canonical
// structure (the species must have exactly one structure on a point).
TruncatedSimplicialGroupoid build_H(const HereditarySpecies& H, int k, int N);

// All strict face/degeneracy identities inside the truncation.  For family
// style the exchange of the two top faces is excluded here (it only holds up
// to isomorphism); check_pseudo_identity certifies that one.
CheckReport check_simplicial_identities(const TruncatedSimplicialGroupoid& X);

// The two ways of applying top faces twice from level n agree up to a
// natural isomorphism given by a permutation of family members.
CheckReport check_pseudo_identity(const TruncatedSimplicialGroupoid& X, int n);

// The squares expressing that faces interact with sections and inner faces
// by pullbacks; these are what make the induced comultiplication counital
// and coassociative up to the symmetry of the fibre construction.
CheckReport check_decomposition(const TruncatedSimplicialGroupoid& X);

// The Segal squares: level n maps to the fibre product of two copies of
// level n-1 over level n-2.  On failure for a decorated family space the
// report pinpoints the first fibre mismatch in (total size, key) order.
CheckReport check_segal(const TruncatedSimplicialGroupoid& X);

// Completeness (the section at level 0 is fully faithful with empty or
// contractible fibres), discreteness and finiteness of the fibres of that
// section and of the middle face at level 2, and the bound: an object whose
// long edge has total size t admits no non-degenerate simplices above
// dimension t.
CheckReport check_finiteness(const TruncatedSimplicialGroupoid& X);

// A levelwise functor between truncated simplicial groupoids.
struct SimplicialMap {
  const TruncatedSimplicialGroupoid* src = nullptr;
  const TruncatedSimplicialGroupoid* tgt = nullptr;
  std::vector<GroupoidMap> level;
  std::string name;
};

// Strip decorations (decorated -> plain, same style).
SimplicialMap forget_decorations(const TruncatedSimplicialGroupoid& D,
                                 const TruncatedSimplicialGroupoid& P);
// Send a chain to its family of fibres over the last set (chain -> family).
SimplicialMap fibres_map(const TruncatedSimplicialGroupoid& C,
                         const TruncatedSimplicialGroupoid& F);

// Naturality squares of all inner faces and all degeneracies are pullbacks.
CheckReport check_culf(const SimplicialMap& f);

// The fibres functor and the concatenation functor are levelwise
// equivalences and mutually inverse up to explicit natural isomorphisms.
CheckReport check_equivalence_NSur_S(int k, int N);

}  // namespace hsp
