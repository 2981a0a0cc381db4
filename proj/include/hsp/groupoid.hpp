#ifndef HSP_GROUPOID_HPP
#define HSP_GROUPOID_HPP

#include "hsp/rational.hpp"
#include "hsp/report.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace hsp {

// A finite groupoid stored extensionally: object table plus the table of all
// morphisms (every one invertible, identities included).  Morphisms carry flat
// integer data; composition is evaluated structurally by the composer closure
// and resolved through the morphism index, so no ternary table is stored.
class FiniteGroupoid {
 public:
  struct Mor {
    int src = 0, tgt = 0;
    std::vector<int> data;
  };

  using Composer =
      std::function<std::vector<int>(const FiniteGroupoid&, const Mor&, const Mor&)>;
  using IdentityData = std::function<std::vector<int>(const FiniteGroupoid&, int)>;

  std::vector<std::string> objects;
  std::vector<Mor> morphisms;
  Composer compose_data;
  IdentityData identity_data;

  int add_object(const std::string& key);
  int add_morphism(int src, int tgt, std::vector<int> data);
  void freeze();  // build hom adjacency, identities, iso-classes

  int object_id(const std::string& key) const;
  bool has_object(const std::string& key) const;
  int morphism_id(int src, int tgt, const std::vector<int>& data) const;

  int num_objects() const { return int(objects.size()); }
  int num_morphisms() const { return int(morphisms.size()); }

  int identity(int obj) const;
  int compose(int g, int f) const;  // g ∘ f
  int inverse(int f) const;
  const std::vector<int>& out_morphisms(int obj) const;
  std::vector<int> hom(int a, int b) const;

  int class_of(int obj) const;
  const std::vector<int>& class_reps() const;  // one object per iso-class
  long long aut_order(int obj) const;
  // A chosen morphism from the class representative of obj to obj (identity
  // on representatives); fixed once in freeze().
  int iso_to_rep(int obj) const;

 private:
  std::unordered_map<std::string, int> object_index_;
  std::map<std::tuple<int, int, std::vector<int>>, int> morphism_index_;
  std::vector<std::vector<int>> out_;        // object -> outgoing morphism ids
  std::vector<int> identities_;              // object -> identity morphism id
  std::vector<int> class_of_;                // object -> class id
  std::vector<int> reps_;                    // class id -> representative object
  std::vector<int> to_rep_;                  // object -> chosen morphism rep -> object
  bool frozen_ = false;
};

using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

// A functor between finite groupoids, with fully materialized assignments.
struct GroupoidMap {
  GroupoidPtr src, tgt;
  std::vector<int> obj_map;
  std::vector<int> mor_map;
  std::string name;
};

GroupoidMap identity_gmap(const GroupoidPtr& G);
GroupoidMap compose_gmaps(const GroupoidMap& g, const GroupoidMap& f);

// Functor laws on the materialized tables (endpoints, identities, and
// composites of all composable pairs when check_composition is set).
CheckReport check_functor(const GroupoidMap& F, bool check_composition = false);

// Sum over iso-classes of 1/|Aut|.
Rat homotopy_cardinality(const FiniteGroupoid& X);

// The groupoid of pairs (x, alpha: p(x) -> s); morphisms are u: x -> x' with
// alpha' ∘ p(u) = alpha.  points[i] records (x, alpha) for fibre object i.
struct Fibre {
  GroupoidPtr gpd;
  std::vector<std::pair<int, int>> points;
};
Fibre homotopy_fibre(const GroupoidMap& p, int s);

// Iso-comma construction: objects (x, y, alpha: f(x) -> g(y)), morphisms the
// pairs compatible with alpha.  Projections and the witness come along.
struct IsoComma {
  GroupoidPtr gpd;
  std::vector<std::tuple<int, int, int>> points;
  GroupoidMap pr1, pr2;
  std::vector<int> witness;  // object id in the base -> alpha as morphism id
};
IsoComma homotopy_pullback(const GroupoidMap& f, const GroupoidMap& g);

// Fully faithful + essentially surjective, with a certificate on failure.
struct EquivalenceReport {
  bool ok = true;
  std::string certificate;
};
EquivalenceReport is_equivalence(const GroupoidMap& F);

//        top
//     P ----> Y
// left|       | right
//     v       v
//     X ----> S
//       bottom
// witness[p]: bottom(left(p)) -> right(top(p)), natural in p.
struct SquareWithWitness {
  GroupoidMap top, left, bottom, right;
  std::vector<int> witness;
};

// Square with literally commuting legs; throws if they do not commute.
SquareWithWitness strict_square(GroupoidMap top, GroupoidMap left, GroupoidMap bottom,
                                GroupoidMap right);

// Square whose legs commute up to a canonical natural isomorphism.  Legs must
// agree on objects.  When they also agree on morphisms this is strict_square;
// otherwise a natural witness is constructed component by component (an
// intertwiner for the automorphisms of each class representative, transported
// along a spanning tree).  Throws if no natural witness exists.
SquareWithWitness witnessed_square(GroupoidMap top, GroupoidMap left, GroupoidMap bottom,
                                   GroupoidMap right);

// Horizontal pasting: the right leg of `lhs` must be the left leg of `rhs`.
SquareWithWitness paste_squares(const SquareWithWitness& lhs, const SquareWithWitness& rhs);

CheckReport witness_is_natural(const SquareWithWitness& sq);

// Primary path: the induced comparison between the homotopy fibre of the left
// leg over x and the fibre of the right leg over bottom(x) must be an
// equivalence for every x (one representative per iso-class of the bottom-left
// corner; isomorphic bases have conjugate comparisons).
CheckReport is_pullback_square(const SquareWithWitness& sq);

// Alternative path: comparison map from the corner into the iso-comma of the
// cospan; used to cross-check the fibre-wise criterion.
CheckReport is_pullback_square_via_comparison(const SquareWithWitness& sq);

// Coefficients of |p|: class representative s of the target gets
// |homotopy fibre over s| / |Aut(s)|.
std::map<int, Rat> map_cardinality(const GroupoidMap& p);

// ------------------------------------------------------------ small builders

std::shared_ptr<FiniteGroupoid> discrete_groupoid(int n);
// One object with automorphism group Z/k (data: residues, composition mod k).
std::shared_ptr<FiniteGroupoid> cyclic_group_groupoid(int k);
// One object per size in 0..max_n, morphisms all bijections (data: permutation).
std::shared_ptr<FiniteGroupoid> sets_groupoid(int max_n);
// One object, morphisms the full symmetric group S_n.
std::shared_ptr<FiniteGroupoid> symmetric_group_groupoid(int n);
// Exactly one morphism between any two objects.
std::shared_ptr<FiniteGroupoid> codiscrete_groupoid(int n);

// The unique map to the one-point groupoid.
GroupoidMap to_point(const GroupoidPtr& G, const GroupoidPtr& point);
// The point of G at obj: a map from a one-object discrete groupoid.
GroupoidMap name_of(const GroupoidPtr& G, int obj);

}  // namespace hsp

#endif
