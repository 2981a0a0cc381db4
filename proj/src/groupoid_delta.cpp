#include "hsp/bialgebra.hpp"
#include "hsp/groupoid.hpp"
#include "hsp/simplicial.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hsp {

namespace {

// A level-1 object of the decorated family space is a family of one-set
// chains; its members are exactly the decorating structures.
Family family_of_level1(const HereditarySpecies& H, const SimpObj& obj) {
  std::vector<HStructure> members;
  members.reserve(obj.members.size());
  for (const auto& m : obj.members) members.push_back(m.structure);
  return make_family(H, std::move(members));
}

}  // namespace

LinComb groupoid_comultiply(const HereditarySpecies& H, const HStructure& G) {
  if (G.n < 1)
    throw std::invalid_argument("groupoid_comultiply: carrier must be non-empty");

  // Two-level truncation of the decorated family space, big enough to hold
  // every chain out of the carrier of G.
  auto X = build_H(H, G.n, 2);

  std::string base_key =
      "(" + std::to_string(G.n) + "@" + canonical_form(H, G).rep.key() + ")";
  int base = X.level[1]->object_id(base_key);

  // Points of the fibre over G of the face that forgets the chain are the
  // one-step chains out of G's carrier; pushing forward along the
  // fibre-restriction face (left factor) and the quotient face (right factor)
  // weights each iso-class by the inverse of its stabilizer.
  auto fib = homotopy_fibre(X.d(2, 1), base);
  const auto& restrict_face = X.d(2, 2);
  const auto& quotient_face = X.d(2, 0);

  LinComb out;
  for (int r : fib.gpd->class_reps()) {
    int x2 = fib.points[r].first;
    Family left = family_of_level1(H, X.objs[1][restrict_face.obj_map[x2]]);
    Family right = family_of_level1(H, X.objs[1][quotient_face.obj_map[x2]]);
    out.add({family_key(left), family_key(right)},
            Rat(Int(1), Int(fib.gpd->aut_order(r))));
  }
  return out;
}

}  // namespace hsp
