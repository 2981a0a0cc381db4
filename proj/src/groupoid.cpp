#include "hsp/groupoid.hpp"

#include "hsp/util.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hsp {

namespace {

int find_root(std::vector<int>& uf, int x) {
  while (uf[x] != x) x = uf[x] = uf[uf[x]];
  return x;
}

}  // namespace

int FiniteGroupoid::add_object(const std::string& key) {
  auto [it, inserted] = object_index_.insert({key, int(objects.size())});
  if (!inserted) throw std::runtime_error("duplicate object key: " + key);
  objects.push_back(key);
  return it->second;
}

int FiniteGroupoid::add_morphism(int src, int tgt, std::vector<int> data) {
  auto key = std::make_tuple(src, tgt, data);
  auto [it, inserted] = morphism_index_.insert({key, int(morphisms.size())});
  if (!inserted) return it->second;
  morphisms.push_back(Mor{src, tgt, std::move(data)});
  return it->second;
}

void FiniteGroupoid::freeze() {
  identities_.resize(objects.size());
  for (int o = 0; o < num_objects(); ++o)
    identities_[o] = add_morphism(o, o, identity_data(*this, o));
  out_.assign(objects.size(), {});
  for (int m = 0; m < num_morphisms(); ++m) out_[morphisms[m].src].push_back(m);
  // iso-classes by union-find over morphism endpoints
  std::vector<int> uf(objects.size());
  std::iota(uf.begin(), uf.end(), 0);
  for (auto& m : morphisms) uf[find_root(uf, m.src)] = find_root(uf, m.tgt);
  class_of_.assign(objects.size(), -1);
  reps_.clear();
  for (int o = 0; o < num_objects(); ++o) {
    int r = find_root(uf, o);
    if (class_of_[r] == -1) {
      class_of_[r] = int(reps_.size());
      reps_.push_back(r);
    }
    class_of_[o] = class_of_[r];
  }
  // chosen isos rep -> object, one compose per object along a BFS tree
  to_rep_.assign(objects.size(), -1);
  for (int r : reps_) {
    to_rep_[r] = identities_[r];
    std::vector<int> queue{r};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (int m : out_[x]) {
        int y = morphisms[m].tgt;
        if (to_rep_[y] != -1) continue;
        to_rep_[y] = compose(m, to_rep_[x]);
        queue.push_back(y);
      }
    }
  }
  frozen_ = true;
}

int FiniteGroupoid::object_id(const std::string& key) const {
  auto it = object_index_.find(key);
  if (it == object_index_.end()) throw std::runtime_error("unknown object: " + key);
  return it->second;
}

bool FiniteGroupoid::has_object(const std::string& key) const {
  return object_index_.count(key) != 0;
}

int FiniteGroupoid::morphism_id(int src, int tgt, const std::vector<int>& data) const {
  auto it = morphism_index_.find(std::make_tuple(src, tgt, data));
  if (it == morphism_index_.end())
    throw std::runtime_error("morphism not in groupoid: " + objects[src] + " -> " +
                             objects[tgt]);
  return it->second;
}

int FiniteGroupoid::identity(int obj) const { return identities_[obj]; }

int FiniteGroupoid::compose(int g, int f) const {
  const Mor& gm = morphisms[g];
  const Mor& fm = morphisms[f];
  if (fm.tgt != gm.src) throw std::runtime_error("compose: endpoints do not match");
  return morphism_id(fm.src, gm.tgt, compose_data(*this, gm, fm));
}

int FiniteGroupoid::inverse(int f) const {
  const Mor& fm = morphisms[f];
  int id_src = identity(fm.src);
  for (int g : out_[fm.tgt])
    if (morphisms[g].tgt == fm.src && compose(g, f) == id_src) return g;
  throw std::runtime_error("morphism has no inverse; not a groupoid");
}

const std::vector<int>& FiniteGroupoid::out_morphisms(int obj) const { return out_[obj]; }

std::vector<int> FiniteGroupoid::hom(int a, int b) const {
  std::vector<int> hs;
  for (int m : out_[a])
    if (morphisms[m].tgt == b) hs.push_back(m);
  return hs;
}

int FiniteGroupoid::class_of(int obj) const { return class_of_[obj]; }

const std::vector<int>& FiniteGroupoid::class_reps() const { return reps_; }

long long FiniteGroupoid::aut_order(int obj) const {
  long long n = 0;
  for (int m : out_[obj])
    if (morphisms[m].tgt == obj) ++n;
  return n;
}

int FiniteGroupoid::iso_to_rep(int obj) const { return to_rep_[obj]; }

GroupoidMap identity_gmap(const GroupoidPtr& G) {
  GroupoidMap F;
  F.src = F.tgt = G;
  F.obj_map.resize(G->num_objects());
  std::iota(F.obj_map.begin(), F.obj_map.end(), 0);
  F.mor_map.resize(G->num_morphisms());
  std::iota(F.mor_map.begin(), F.mor_map.end(), 0);
  F.name = "id";
  return F;
}

GroupoidMap compose_gmaps(const GroupoidMap& g, const GroupoidMap& f) {
  if (f.tgt.get() != g.src.get())
    throw std::runtime_error("compose_gmaps: middle groupoid mismatch");
  GroupoidMap h;
  h.src = f.src;
  h.tgt = g.tgt;
  h.obj_map.reserve(f.obj_map.size());
  for (int o : f.obj_map) h.obj_map.push_back(g.obj_map[o]);
  h.mor_map.reserve(f.mor_map.size());
  for (int m : f.mor_map) h.mor_map.push_back(g.mor_map[m]);
  h.name = g.name + "∘" + f.name;
  return h;
}

CheckReport check_functor(const GroupoidMap& F, bool check_composition) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  if (int(F.obj_map.size()) != A.num_objects() || int(F.mor_map.size()) != A.num_morphisms())
    return CheckReport::fail(F.name + ": assignment tables of wrong size");
  for (int m = 0; m < A.num_morphisms(); ++m) {
    const auto& mor = A.morphisms[m];
    const auto& img = B.morphisms[F.mor_map[m]];
    if (img.src != F.obj_map[mor.src] || img.tgt != F.obj_map[mor.tgt])
      return CheckReport::fail(F.name + ": endpoints not preserved at morphism " +
                               std::to_string(m));
  }
  for (int o = 0; o < A.num_objects(); ++o)
    if (F.mor_map[A.identity(o)] != B.identity(F.obj_map[o]))
      return CheckReport::fail(F.name + ": identity not preserved at " + A.objects[o]);
  if (check_composition) {
    for (int m1 = 0; m1 < A.num_morphisms(); ++m1)
      for (int m2 : A.out_morphisms(A.morphisms[m1].tgt))
        if (F.mor_map[A.compose(m2, m1)] != B.compose(F.mor_map[m2], F.mor_map[m1]))
          return CheckReport::fail(F.name + ": composition not preserved");
  }
  return CheckReport::pass(F.name + ": functor laws hold");
}

Rat homotopy_cardinality(const FiniteGroupoid& X) {
  Rat total = 0;
  for (int rep : X.class_reps()) total += Rat(Int(1), Int(X.aut_order(rep)));
  return total;
}

namespace {

// composition/identity closures for groupoids whose morphism data is a single
// morphism id of a parent groupoid
FiniteGroupoid::Composer parent_composer(GroupoidPtr parent) {
  return [parent](const FiniteGroupoid&, const FiniteGroupoid::Mor& g,
                  const FiniteGroupoid::Mor& f) {
    return std::vector<int>{parent->compose(g.data[0], f.data[0])};
  };
}

std::string pair_key(int a, int b) { return std::to_string(a) + "#" + std::to_string(b); }
std::string triple_key(int a, int b, int c) {
  return pair_key(a, b) + "#" + std::to_string(c);
}

}  // namespace

Fibre homotopy_fibre(const GroupoidMap& p, int s) {
  const auto& X = *p.src;
  const auto& S = *p.tgt;
  auto points = std::make_shared<std::vector<std::pair<int, int>>>();
  auto G = std::make_shared<FiniteGroupoid>();
  // objects: (x, alpha: p(x) -> s)
  for (int x = 0; x < X.num_objects(); ++x)
    for (int alpha : S.hom(p.obj_map[x], s)) {
      G->add_object(pair_key(x, alpha));
      points->push_back({x, alpha});
    }
  // morphisms: u: x -> x' with alpha' ∘ p(u) = alpha
  for (int u = 0; u < X.num_morphisms(); ++u) {
    const auto& um = X.morphisms[u];
    for (int alpha2 : S.hom(p.obj_map[um.tgt], s)) {
      int alpha1 = S.compose(alpha2, p.mor_map[u]);
      G->add_morphism(G->object_id(pair_key(um.src, alpha1)),
                      G->object_id(pair_key(um.tgt, alpha2)), {u});
    }
  }
  GroupoidPtr xsrc = p.src;
  G->compose_data = parent_composer(xsrc);
  G->identity_data = [xsrc, points](const FiniteGroupoid&, int obj) {
    return std::vector<int>{xsrc->identity((*points)[obj].first)};
  };
  G->freeze();
  return Fibre{G, *points};
}

IsoComma homotopy_pullback(const GroupoidMap& f, const GroupoidMap& g) {
  if (f.tgt.get() != g.tgt.get())
    throw std::runtime_error("homotopy_pullback: targets differ");
  const auto& X = *f.src;
  const auto& Y = *g.src;
  const auto& S = *f.tgt;
  auto G = std::make_shared<FiniteGroupoid>();
  IsoComma Q;
  for (int x = 0; x < X.num_objects(); ++x)
    for (int y = 0; y < Y.num_objects(); ++y)
      for (int alpha : S.hom(f.obj_map[x], g.obj_map[y])) {
        G->add_object(triple_key(x, y, alpha));
        Q.points.push_back({x, y, alpha});
        Q.witness.push_back(alpha);
      }
  // morphisms: (u, v) with alpha' ∘ f(u) = g(v) ∘ alpha, i.e. alpha' determined
  for (int u = 0; u < X.num_morphisms(); ++u) {
    const auto& um = X.morphisms[u];
    int fu_inv = S.inverse(f.mor_map[u]);
    for (int v = 0; v < Y.num_morphisms(); ++v) {
      const auto& vm = Y.morphisms[v];
      for (int alpha : S.hom(f.obj_map[um.src], g.obj_map[vm.src])) {
        int alpha2 = S.compose(S.compose(g.mor_map[v], alpha), fu_inv);
        G->add_morphism(G->object_id(triple_key(um.src, vm.src, alpha)),
                        G->object_id(triple_key(um.tgt, vm.tgt, alpha2)), {u, v});
      }
    }
  }
  GroupoidPtr xs = f.src, ys = g.src;
  auto pts = std::make_shared<std::vector<std::tuple<int, int, int>>>(Q.points);
  G->compose_data = [xs, ys](const FiniteGroupoid&, const FiniteGroupoid::Mor& b,
                             const FiniteGroupoid::Mor& a) {
    return std::vector<int>{xs->compose(b.data[0], a.data[0]),
                            ys->compose(b.data[1], a.data[1])};
  };
  G->identity_data = [xs, ys, pts](const FiniteGroupoid&, int obj) {
    auto [x, y, alpha] = (*pts)[obj];
    (void)alpha;
    return std::vector<int>{xs->identity(x), ys->identity(y)};
  };
  G->freeze();
  Q.gpd = G;
  Q.pr1.src = G;
  Q.pr1.tgt = f.src;
  Q.pr2.src = G;
  Q.pr2.tgt = g.src;
  Q.pr1.name = "pr1";
  Q.pr2.name = "pr2";
  for (auto& [x, y, alpha] : Q.points) {
    (void)alpha;
    Q.pr1.obj_map.push_back(x);
    Q.pr2.obj_map.push_back(y);
  }
  for (auto& m : G->morphisms) {
    Q.pr1.mor_map.push_back(m.data[0]);
    Q.pr2.mor_map.push_back(m.data[1]);
  }
  return Q;
}

EquivalenceReport is_equivalence(const GroupoidMap& F) {
  const auto& A = *F.src;
  const auto& B = *F.tgt;
  // fully faithful on every ordered pair of source objects
  for (int a = 0; a < A.num_objects(); ++a)
    for (int b = 0; b < A.num_objects(); ++b) {
      auto ha = A.hom(a, b);
      auto hb = B.hom(F.obj_map[a], F.obj_map[b]);
      if (ha.size() != hb.size())
        return {false, "hom-set size " + std::to_string(ha.size()) + " vs " +
                           std::to_string(hb.size()) + " at (" + A.objects[a] + " -> " +
                           A.objects[b] + ")"};
      std::vector<int> image;
      for (int m : ha) image.push_back(F.mor_map[m]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end())
        return {false, "hom-map not injective at (" + A.objects[a] + " -> " +
                           A.objects[b] + ")"};
    }
  // essentially surjective
  std::vector<char> hit(B.class_reps().size(), 0);
  for (int img : F.obj_map) hit[B.class_of(img)] = 1;
  for (size_t c = 0; c < hit.size(); ++c)
    if (!hit[c])
      return {false, "object " + B.objects[B.class_reps()[c]] + " not reached up to iso"};
  return {true, "equivalence"};
}

SquareWithWitness strict_square(GroupoidMap top, GroupoidMap left, GroupoidMap bottom,
                                GroupoidMap right) {
  const auto& P = *top.src;
  SquareWithWitness sq;
  for (int p = 0; p < P.num_objects(); ++p) {
    int via_bottom = bottom.obj_map[left.obj_map[p]];
    int via_right = right.obj_map[top.obj_map[p]];
    if (via_bottom != via_right)
      throw std::runtime_error("strict_square: legs do not commute on objects");
    sq.witness.push_back(bottom.tgt->identity(via_bottom));
  }
  for (int m = 0; m < P.num_morphisms(); ++m)
    if (bottom.mor_map[left.mor_map[m]] != right.mor_map[top.mor_map[m]])
      throw std::runtime_error("strict_square: legs do not commute on morphisms");
  sq.top = std::move(top);
  sq.left = std::move(left);
  sq.bottom = std::move(bottom);
  sq.right = std::move(right);
  return sq;
}

SquareWithWitness witnessed_square(GroupoidMap top, GroupoidMap left, GroupoidMap bottom,
                                   GroupoidMap right) {
  const auto& P = *top.src;
  const auto& S = *bottom.tgt;
  auto leg_down_obj = [&](int p) { return bottom.obj_map[left.obj_map[p]]; };
  auto leg_over_obj = [&](int p) { return right.obj_map[top.obj_map[p]]; };
  auto leg_down_mor = [&](int m) { return bottom.mor_map[left.mor_map[m]]; };
  auto leg_over_mor = [&](int m) { return right.mor_map[top.mor_map[m]]; };

  for (int p = 0; p < P.num_objects(); ++p)
    if (leg_down_obj(p) != leg_over_obj(p))
      throw std::runtime_error("witnessed_square: legs do not commute on objects");

  SquareWithWitness sq;
  sq.witness.assign(P.num_objects(), -1);

  bool strict = true;
  for (int m = 0; m < P.num_morphisms() && strict; ++m)
    strict = leg_down_mor(m) == leg_over_mor(m);

  if (strict) {
    for (int p = 0; p < P.num_objects(); ++p)
      sq.witness[p] = S.identity(leg_down_obj(p));
  } else {
    for (int r : P.class_reps()) {
      // An intertwiner at the representative extends uniquely over its
      // component; if none exists, no natural witness exists at all.
      int beta = -1;
      for (int cand : S.hom(leg_down_obj(r), leg_over_obj(r))) {
        bool natural_on_loops = true;
        for (int a : P.hom(r, r))
          if (S.compose(cand, leg_down_mor(a)) != S.compose(leg_over_mor(a), cand)) {
            natural_on_loops = false;
            break;
          }
        if (natural_on_loops) {
          beta = cand;
          break;
        }
      }
      if (beta < 0)
        throw std::runtime_error("witnessed_square: no natural witness over object " +
                                 P.objects[r]);
      sq.witness[r] = beta;
      std::vector<int> frontier{r};
      while (!frontier.empty()) {
        int x = frontier.back();
        frontier.pop_back();
        for (int m : P.out_morphisms(x)) {
          int y = P.morphisms[m].tgt;
          if (sq.witness[y] != -1) continue;
          sq.witness[y] =
              S.compose(S.compose(leg_over_mor(m), sq.witness[x]), S.inverse(leg_down_mor(m)));
          frontier.push_back(y);
        }
      }
    }
  }

  sq.top = std::move(top);
  sq.left = std::move(left);
  sq.bottom = std::move(bottom);
  sq.right = std::move(right);
  auto nat = witness_is_natural(sq);
  if (!nat.ok)
    throw std::runtime_error("witnessed_square: " + nat.detail);
  return sq;
}

SquareWithWitness paste_squares(const SquareWithWitness& lhs, const SquareWithWitness& rhs) {
  if (lhs.right.src.get() != rhs.left.src.get() ||
      lhs.right.obj_map != rhs.left.obj_map || lhs.right.mor_map != rhs.left.mor_map)
    throw std::runtime_error("paste_squares: shared leg differs");
  SquareWithWitness outer;
  outer.top = compose_gmaps(rhs.top, lhs.top);
  outer.left = lhs.left;
  outer.bottom = compose_gmaps(rhs.bottom, lhs.bottom);
  outer.right = rhs.right;
  const auto& S2 = *rhs.bottom.tgt;
  for (size_t p = 0; p < lhs.witness.size(); ++p) {
    int w1_pushed = rhs.bottom.mor_map[lhs.witness[p]];
    int w2 = rhs.witness[lhs.top.obj_map[p]];
    outer.witness.push_back(S2.compose(w2, w1_pushed));
  }
  return outer;
}

CheckReport witness_is_natural(const SquareWithWitness& sq) {
  const auto& P = *sq.top.src;
  const auto& S = *sq.bottom.tgt;
  bool identities = true;
  for (int p = 0; p < P.num_objects(); ++p)
    if (sq.witness[p] != S.identity(S.morphisms[sq.witness[p]].src)) {
      identities = false;
      break;
    }
  for (int m = 0; m < P.num_morphisms(); ++m) {
    const auto& mor = P.morphisms[m];
    int down = sq.bottom.mor_map[sq.left.mor_map[m]];
    int over = sq.right.mor_map[sq.top.mor_map[m]];
    if (identities) {
      if (down != over)
        return CheckReport::fail("witness not natural at morphism " + std::to_string(m));
      continue;
    }
    if (S.compose(sq.witness[mor.tgt], down) != S.compose(over, sq.witness[mor.src]))
      return CheckReport::fail("witness not natural at morphism " + std::to_string(m));
  }
  return CheckReport::pass("witness natural");
}

namespace {

// One iso-class of the homotopy fibre of `leg` over target object s,
// represented by (obj, alpha) with obj a class representative of the source
// and alpha the minimal morphism id in its orbit under Aut(obj).
struct FibreClassRep {
  int obj = 0;
  int alpha = 0;
  long long aut = 1;  // |Aut(obj, alpha)| inside the fibre = orbit stabilizer
};

// The homotopy fibre of `leg` over s is equivalent to its full subgroupoid on
// objects (q0, alpha) with q0 a class representative; its iso-classes are the
// orbits of Hom(leg(q0), s) under precomposition with leg(Aut(q0)).
std::vector<FibreClassRep> reduced_fibre_classes(const GroupoidMap& leg, int s) {
  const auto& Src = *leg.src;
  const auto& T = *leg.tgt;
  std::vector<FibreClassRep> out;
  for (int q0 : Src.class_reps()) {
    if (T.class_of(leg.obj_map[q0]) != T.class_of(s)) continue;
    auto alphas = T.hom(leg.obj_map[q0], s);
    auto auts = Src.hom(q0, q0);
    std::map<int, int> seen;  // alpha -> orbit slot, filled orbit by orbit
    for (int a0 : alphas) {
      if (seen.count(a0)) continue;
      std::vector<int> orbit{a0};
      seen[a0] = int(out.size());
      int rep = a0;
      for (size_t i = 0; i < orbit.size(); ++i)
        for (int a : auts) {
          int moved = T.compose(orbit[i], leg.mor_map[a]);
          if (seen.emplace(moved, int(out.size())).second) orbit.push_back(moved);
          rep = std::min(rep, moved);
        }
      out.push_back({q0, rep, (long long)(auts.size() / orbit.size())});
    }
  }
  return out;
}

// Canonical (obj, alpha) pair of the fibre class containing (y, beta): carry y
// back to its class representative and minimize over its automorphisms.
std::pair<int, int> canonical_fibre_class(const GroupoidMap& leg, int y, int beta) {
  const auto& Src = *leg.src;
  const auto& T = *leg.tgt;
  int y0 = Src.class_reps()[Src.class_of(y)];
  int beta0 = T.compose(beta, leg.mor_map[Src.iso_to_rep(y)]);
  int best = beta0;
  for (int a : Src.hom(y0, y0)) best = std::min(best, T.compose(beta0, leg.mor_map[a]));
  return {y0, best};
}

Rat classes_cardinality(const std::vector<FibreClassRep>& cls) {
  Rat total(0);
  for (auto& c : cls) total += Rat(1) / Rat(Int(c.aut));
  return total;
}

// Fibre-wise comparison over x without materializing the fibres: both sides
// are replaced by equivalent full subgroupoids on class-representative
// objects, where essential surjectivity and full faithfulness are finite
// orbit/hom-set checks.
CheckReport compare_fibres_at(const SquareWithWitness& sq, int x, Rat& lcard, Rat& rcard) {
  const auto& P = *sq.left.src;
  const auto& Y = *sq.right.src;
  const auto& S = *sq.bottom.tgt;
  int s = sq.bottom.obj_map[x];
  auto lcls = reduced_fibre_classes(sq.left, x);
  auto rcls = reduced_fibre_classes(sq.right, s);
  lcard = classes_cardinality(lcls);
  rcard = classes_cardinality(rcls);

  std::map<std::pair<int, int>, int> rindex;
  for (size_t i = 0; i < rcls.size(); ++i) rindex[{rcls[i].obj, rcls[i].alpha}] = int(i);

  // comparison images of the left class representatives
  std::vector<std::pair<int, int>> image;  // (top(q), beta)
  std::vector<bool> hit(rcls.size(), false);
  for (auto& c : lcls) {
    int beta = S.compose(sq.bottom.mor_map[c.alpha], S.inverse(sq.witness[c.obj]));
    image.push_back({sq.top.obj_map[c.obj], beta});
    auto can = canonical_fibre_class(sq.right, image.back().first, beta);
    auto it = rindex.find(can);
    if (it == rindex.end())
      return CheckReport::fail("comparison image escapes the right fibre");
    hit[it->second] = true;
  }
  for (size_t i = 0; i < rcls.size(); ++i)
    if (!hit[i])
      return CheckReport::fail("right-fibre class (" + Y.objects[rcls[i].obj] +
                               ", morphism " + std::to_string(rcls[i].alpha) +
                               ") not reached up to iso");

  // full faithfulness on all pairs of left class representatives
  const auto& X = *sq.left.tgt;
  for (size_t i = 0; i < lcls.size(); ++i)
    for (size_t j = 0; j < lcls.size(); ++j) {
      std::vector<int> dom;
      for (int u : P.hom(lcls[i].obj, lcls[j].obj))
        if (X.compose(lcls[j].alpha, sq.left.mor_map[u]) == lcls[i].alpha)
          dom.push_back(u);
      std::vector<int> codom;
      for (int t : Y.hom(image[i].first, image[j].first))
        if (S.compose(image[j].second, sq.right.mor_map[t]) == image[i].second)
          codom.push_back(t);
      std::vector<int> mapped;
      for (int u : dom) mapped.push_back(sq.top.mor_map[u]);
      std::sort(mapped.begin(), mapped.end());
      if (std::adjacent_find(mapped.begin(), mapped.end()) != mapped.end())
        return CheckReport::fail("comparison not faithful between fibre classes " +
                                 std::to_string(i) + " and " + std::to_string(j));
      if (mapped.size() != codom.size())
        return CheckReport::fail(
            "hom-set size " + std::to_string(mapped.size()) + " vs " +
            std::to_string(codom.size()) + " between fibre classes (" +
            P.objects[lcls[i].obj] + ") and (" + P.objects[lcls[j].obj] + ")");
    }
  return CheckReport::pass("fibres equivalent");
}

}  // namespace

CheckReport is_pullback_square(const SquareWithWitness& sq) {
  auto nat = witness_is_natural(sq);
  if (!nat.ok) return nat;
  const auto& X = *sq.bottom.src;
  for (int x : X.class_reps()) {
    Rat lcard, rcard;
    auto verdict = compare_fibres_at(sq, x, lcard, rcard);
    if (!verdict.ok)
      return CheckReport::fail("fibre comparison fails over " + X.objects[x] +
                               ": cardinality " + rat_to_string(lcard) + " vs " +
                               rat_to_string(rcard) + " (" + verdict.detail + ")");
  }
  return CheckReport::pass("pullback square (fibre-wise criterion)");
}

CheckReport is_pullback_square_via_comparison(const SquareWithWitness& sq) {
  auto nat = witness_is_natural(sq);
  if (!nat.ok) return nat;
  auto Q = homotopy_pullback(sq.bottom, sq.right);
  const auto& P = *sq.top.src;
  GroupoidMap cmp;
  cmp.src = sq.top.src;
  cmp.tgt = Q.gpd;
  cmp.name = "corner-comparison";
  for (int p = 0; p < P.num_objects(); ++p)
    cmp.obj_map.push_back(Q.gpd->object_id(
        triple_key(sq.left.obj_map[p], sq.top.obj_map[p], sq.witness[p])));
  for (int m = 0; m < P.num_morphisms(); ++m)
    cmp.mor_map.push_back(
        Q.gpd->morphism_id(cmp.obj_map[P.morphisms[m].src], cmp.obj_map[P.morphisms[m].tgt],
                           {sq.left.mor_map[m], sq.top.mor_map[m]}));
  auto eq = is_equivalence(cmp);
  if (eq.ok) return CheckReport::pass("pullback square (comparison map)");
  return CheckReport::fail("comparison into iso-comma: " + eq.certificate);
}

std::map<int, Rat> map_cardinality(const GroupoidMap& p) {
  std::map<int, Rat> out;
  for (int s : p.tgt->class_reps()) {
    auto fib = homotopy_fibre(p, s);
    out[s] = homotopy_cardinality(*fib.gpd) / Rat(Int(p.tgt->aut_order(s)));
  }
  return out;
}

// ------------------------------------------------------------ small builders

namespace {

FiniteGroupoid::Composer trivial_composer() {
  return [](const FiniteGroupoid&, const FiniteGroupoid::Mor&, const FiniteGroupoid::Mor&) {
    return std::vector<int>{};
  };
}

}  // namespace

std::shared_ptr<FiniteGroupoid> discrete_groupoid(int n) {
  auto G = std::make_shared<FiniteGroupoid>();
  for (int i = 0; i < n; ++i) G->add_object(std::to_string(i));
  G->compose_data = trivial_composer();
  G->identity_data = [](const FiniteGroupoid&, int) { return std::vector<int>{}; };
  G->freeze();
  return G;
}

std::shared_ptr<FiniteGroupoid> cyclic_group_groupoid(int k) {
  auto G = std::make_shared<FiniteGroupoid>();
  G->add_object("pt");
  for (int g = 0; g < k; ++g) G->add_morphism(0, 0, {g});
  G->compose_data = [k](const FiniteGroupoid&, const FiniteGroupoid::Mor& g,
                        const FiniteGroupoid::Mor& f) {
    return std::vector<int>{(g.data[0] + f.data[0]) % k};
  };
  G->identity_data = [](const FiniteGroupoid&, int) { return std::vector<int>{0}; };
  G->freeze();
  return G;
}

std::shared_ptr<FiniteGroupoid> symmetric_group_groupoid(int n) {
  auto G = std::make_shared<FiniteGroupoid>();
  G->add_object("set" + std::to_string(n));
  for (auto& perm : all_permutations(n)) G->add_morphism(0, 0, perm);
  G->compose_data = [](const FiniteGroupoid&, const FiniteGroupoid::Mor& g,
                       const FiniteGroupoid::Mor& f) {
    return compose_maps(g.data, f.data);
  };
  G->identity_data = [n](const FiniteGroupoid&, int) {
    std::vector<int> idv(n);
    std::iota(idv.begin(), idv.end(), 1);
    return idv;
  };
  G->freeze();
  return G;
}

std::shared_ptr<FiniteGroupoid> sets_groupoid(int max_n) {
  auto G = std::make_shared<FiniteGroupoid>();
  for (int n = 0; n <= max_n; ++n) G->add_object(std::to_string(n));
  for (int n = 0; n <= max_n; ++n)
    for (auto& perm : all_permutations(n)) G->add_morphism(n, n, perm);
  G->compose_data = [](const FiniteGroupoid&, const FiniteGroupoid::Mor& g,
                       const FiniteGroupoid::Mor& f) {
    return compose_maps(g.data, f.data);
  };
  G->identity_data = [](const FiniteGroupoid&, int obj) {
    std::vector<int> idv(obj);
    std::iota(idv.begin(), idv.end(), 1);
    return idv;
  };
  G->freeze();
  return G;
}

std::shared_ptr<FiniteGroupoid> codiscrete_groupoid(int n) {
  auto G = std::make_shared<FiniteGroupoid>();
  for (int i = 0; i < n; ++i) G->add_object(std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G->add_morphism(i, j, {});
  G->compose_data = trivial_composer();
  G->identity_data = [](const FiniteGroupoid&, int) { return std::vector<int>{}; };
  G->freeze();
  return G;
}

GroupoidMap to_point(const GroupoidPtr& G, const GroupoidPtr& point) {
  if (point->num_objects() != 1 || point->num_morphisms() != 1)
    throw std::runtime_error("to_point: target is not the point groupoid");
  GroupoidMap F;
  F.src = G;
  F.tgt = point;
  F.obj_map.assign(G->num_objects(), 0);
  F.mor_map.assign(G->num_morphisms(), point->identity(0));
  F.name = "!";
  return F;
}

GroupoidMap name_of(const GroupoidPtr& G, int obj) {
  GroupoidMap F;
  F.src = discrete_groupoid(1);
  F.tgt = G;
  F.obj_map = {obj};
  F.mor_map = {G->identity(obj)};
  F.name = "name(" + G->objects[obj] + ")";
  return F;
}

}  // namespace hsp
