#include "hsp/operadic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsp {

namespace {

std::string join_values(const std::vector<int>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

// All surjections {1..a} ->> {1..b} in lexicographic order of value vectors.
std::vector<Surjection> all_surjections(int a, int b) {
  std::vector<Surjection> out;
  if (a < b || b < 1 || a < 1) return out;
  std::vector<int> v(a, 1);
  while (true) {
    std::vector<char> hit(b + 1, 0);
    for (int x : v) hit[x] = 1;
    bool onto = true;
    for (int t = 1; t <= b && onto; ++t) onto = hit[t] != 0;
    if (onto) out.push_back(make_surjection(a, b, v));
    int i = a - 1;
    while (i >= 0 && v[i] == b) v[i--] = 1;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

// All injections {1..b} >-> {1..a} (ordered tuples of distinct values) in
// lexicographic order.
std::vector<Injection> all_injections(int b, int a) {
  std::vector<Injection> out;
  if (b > a || b < 0) return out;
  std::vector<int> v;
  std::vector<char> used(a + 1, 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == b) {
      out.push_back(make_injection(b, a, v));
      return;
    }
    for (int x = 1; x <= a; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      v.push_back(x);
      self(self, depth + 1);
      v.pop_back();
      used[x] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

HStructure canonical_fibre(const OperadicCategory& C, const OpMorphism& f, int i) {
  return C.species.restrict_along(f.src, fibres(f.carrier)[static_cast<size_t>(i) - 1]);
}

OpMorphism fibre_morphism_with(const OperadicCategory& C, const FibreFunction& fib,
                               const OpMorphism& g, const OpMorphism& f, int i) {
  if (!(g.tgt == f.src))
    throw std::invalid_argument("fibre_morphism: morphisms are not composable");
  OpMorphism composite = compose(C, f, g);
  return OpMorphism{fib(C, composite, i), fib(C, f, i),
                    fibre_map(g.carrier, f.carrier, i)};
}

}  // namespace

std::string OpMorphism::to_string() const {
  return src.key() + " --" + join_values(carrier.values) + "--> " + tgt.key();
}

std::vector<OpMorphism> OperadicCategory::hom(const HStructure& y, const HStructure& x) const {
  std::vector<OpMorphism> out;
  for (auto& s : all_surjections(y.n, x.n))
    if (species.quotient_along(y, s) == x) out.push_back(OpMorphism{y, x, s});
  return out;
}

std::vector<OpMorphism> OperadicCategory::out_of(const HStructure& y) const {
  std::vector<OpMorphism> out;
  for (int b = 1; b <= y.n; ++b)
    for (auto& s : all_surjections(y.n, b))
      out.push_back(OpMorphism{y, species.quotient_along(y, s), s});
  return out;
}

long long OperadicCategory::num_morphisms() const {
  long long total = 0;
  for (auto& y : objects) total += static_cast<long long>(out_of(y).size());
  return total;
}

OpMorphism OperadicCategory::identity(const HStructure& x) const {
  std::vector<int> v(x.n);
  std::iota(v.begin(), v.end(), 1);
  return OpMorphism{x, x, make_surjection(x.n, x.n, v)};
}

OpMorphism OperadicCategory::to_terminal(const HStructure& x) const {
  return OpMorphism{x, terminal, make_surjection(x.n, 1, std::vector<int>(x.n, 1))};
}

OperadicCategory build_opcat(const HereditarySpecies& H, int n_max) {
  if (n_max < 1) throw std::invalid_argument("build_opcat: n_max must be at least 1");
  if (H.structures(1).size() != 1)
    throw std::invalid_argument(
        "build_opcat: the species must have a unique structure on one point");
  OperadicCategory C;
  C.species = H;
  C.n_max = n_max;
  C.terminal = H.structures(1).front();
  for (int n = 1; n <= n_max; ++n)
    for (auto& x : H.structures(n)) C.objects.push_back(x);
  std::sort(C.objects.begin(), C.objects.end());
  return C;
}

int cardinality(const HStructure& x) { return x.n; }

OpMorphism compose(const OperadicCategory&, const OpMorphism& g, const OpMorphism& f) {
  if (!(f.tgt == g.src))
    throw std::invalid_argument("compose: morphisms are not composable");
  return OpMorphism{f.src, g.tgt, compose(g.carrier, f.carrier)};
}

HStructure fibre(const OperadicCategory& C, const OpMorphism& f, int i) {
  return canonical_fibre(C, f, i);
}

OpMorphism fibre_morphism(const OperadicCategory& C, const OpMorphism& g, const OpMorphism& f,
                          int i) {
  return fibre_morphism_with(C, &canonical_fibre, g, f, i);
}

CheckReport check_axioms(const OperadicCategory& C, int chain_len,
                         const FibreFunction& fibre_fn) {
  const FibreFunction fib = fibre_fn ? fibre_fn : FibreFunction(&canonical_fibre);

  std::vector<OpMorphism> all;
  for (auto& y : C.objects)
    for (auto& f : C.out_of(y)) all.push_back(f);

  std::map<HStructure, int> index;
  for (size_t i = 0; i < C.objects.size(); ++i) index[C.objects[i]] = static_cast<int>(i);

  // (A1) every connected component has a local terminal; the chosen terminal
  // serves its own component.
  std::vector<int> root(C.objects.size());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };
  for (auto& f : all) root[find(index[f.src])] = find(index[f.tgt]);
  std::map<int, std::vector<int>> components;
  for (size_t i = 0; i < C.objects.size(); ++i)
    components[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  for (auto& [r, members] : components) {
    std::vector<int> locals;
    for (int t : members) {
      bool ok = true;
      for (int o : members)
        if (C.hom(C.objects[o], C.objects[t]).size() != 1) {
          ok = false;
          break;
        }
      if (ok) locals.push_back(t);
    }
    if (locals.empty())
      return CheckReport::fail("local terminals (A1): the component of " +
                               C.objects[members.front()].key() + " has no local terminal");
    bool chosen_here =
        std::find(members.begin(), members.end(), index[C.terminal]) != members.end();
    if (chosen_here &&
        std::find(locals.begin(), locals.end(), index[C.terminal]) == locals.end())
      return CheckReport::fail("local terminals (A1): the chosen terminal " +
                               C.terminal.key() + " is not local terminal in its component");
  }

  // (A2) fibres of identities are the terminal.
  for (auto& x : C.objects) {
    OpMorphism id = C.identity(x);
    for (int i = 1; i <= x.n; ++i)
      if (!(fib(C, id, i) == C.terminal))
        return CheckReport::fail("identity fibres (A2): fibre " + std::to_string(i) +
                                 " of the identity of " + x.key() + " is not the terminal");
  }

  // (A3) every fibre is an object: carrier size matches and the payload is
  // listed by the species.
  for (auto& f : all)
    for (int i = 1; i <= f.tgt.n; ++i) {
      HStructure fx = fib(C, f, i);
      int expected = fibres(f.carrier)[static_cast<size_t>(i) - 1].src_n;
      bool listed = false;
      if (fx.n == expected && fx.n >= 1) {
        auto xs = C.species.structures(fx.n);
        listed = std::find(xs.begin(), xs.end(), fx) != xs.end();
      }
      if (!listed)
        return CheckReport::fail("fibre objecthood (A3): fibre " + std::to_string(i) +
                                 " of " + f.to_string() + " is " + fx.key() +
                                 ", which is not an object");
    }

  // (A4) the fibre over the terminal is the source; the fibre morphism over
  // the terminal is the morphism itself.
  for (auto& y : C.objects)
    if (!(fib(C, C.to_terminal(y), 1) == y))
      return CheckReport::fail("terminal fibres (A4): the fibre of the collapse of " +
                               y.key() + " is not the object itself");
  for (auto& g : all) {
    OpMorphism lifted = fibre_morphism_with(C, fib, g, C.to_terminal(g.tgt), 1);
    if (!(lifted == g))
      return CheckReport::fail("terminal fibres (A4): the fibre morphism of " +
                               g.to_string() + " over the terminal is " +
                               lifted.to_string());
  }

  // (A5) fibres of fibre morphisms are fibres ...
  for (auto& g : all)
    for (auto& f : C.out_of(g.tgt))
      for (int i = 1; i <= f.tgt.n; ++i) {
        OpMorphism gi = fibre_morphism_with(C, fib, g, f, i);
        const Injection eps = fibres(f.carrier)[static_cast<size_t>(i) - 1];
        for (int j = 1; j <= gi.tgt.n; ++j)
          if (!(fib(C, gi, j) == fib(C, g, eps.values[static_cast<size_t>(j) - 1])))
            return CheckReport::fail(
                "fibre coherence (A5): fibre " + std::to_string(j) +
                " of the fibre morphism of " + g.to_string() + " over " + std::to_string(i) +
                " differs from the matching fibre of the morphism");
      }

  // ... and iterated fibre morphisms collapse, over chains of length >= 3.
  long long triples = 0;
  if (chain_len >= 3)
    for (auto& h : all)
      for (auto& g : C.out_of(h.tgt))
        for (auto& f : C.out_of(g.tgt)) {
          ++triples;
          OpMorphism fg = compose(C, f, g);
          for (int i = 1; i <= f.tgt.n; ++i) {
            OpMorphism h_fg_i = fibre_morphism_with(C, fib, h, fg, i);
            OpMorphism g_f_i = fibre_morphism_with(C, fib, g, f, i);
            const Injection eps = fibres(f.carrier)[static_cast<size_t>(i) - 1];
            for (int j = 1; j <= g_f_i.tgt.n; ++j) {
              OpMorphism lhs = fibre_morphism_with(C, fib, h_fg_i, g_f_i, j);
              OpMorphism rhs =
                  fibre_morphism_with(C, fib, h, g, eps.values[static_cast<size_t>(j) - 1]);
              if (!(lhs == rhs))
                return CheckReport::fail(
                    "fibre coherence (A5): iterated fibre morphisms of the chain " +
                    h.to_string() + " ; " + g.to_string() + " ; " + f.to_string() +
                    " do not collapse at (" + std::to_string(i) + ", " + std::to_string(j) +
                    ")");
            }
          }
        }

  return CheckReport::pass(
      "local terminals, identity fibres, fibre objecthood, terminal fibres, and fibre "
      "coherence verified on " +
      std::to_string(C.objects.size()) + " objects and " + std::to_string(all.size()) +
      " morphisms (" + std::to_string(triples) + " composable triples)");
}

SpeciesMorphism underlying_sets_morphism(const HereditarySpecies& H) {
  SpeciesMorphism phi;
  phi.src = H;
  phi.tgt = sets_species();
  phi.name = H.name + "-to-sets";
  phi.map = [](const HStructure& x) { return HStructure{"sets", x.n, {}}; };
  return phi;
}

CheckReport check_operadic_functor(const SpeciesMorphism& phi, int n_max) {
  const HereditarySpecies& A = phi.src;
  const HereditarySpecies& B = phi.tgt;

  for (int n = 1; n <= n_max; ++n) {
    auto xs = A.structures(n);
    std::sort(xs.begin(), xs.end());
    for (auto& x : xs) {
      for (int b = 1; b <= n; ++b)
        for (auto& s : all_surjections(n, b))
          if (!(B.quotient_along(phi.map(x), s) == phi.map(A.quotient_along(x, s))))
            return CheckReport::fail(phi.name + ": quotient naturality fails at " + x.key() +
                                     " along " + join_values(s.values));
      for (int b = 1; b <= n; ++b)
        for (auto& j : all_injections(b, n))
          if (!(B.restrict_along(phi.map(x), j) == phi.map(A.restrict_along(x, j))))
            return CheckReport::fail(phi.name + ": restriction naturality fails at " +
                                     x.key() + " along " + join_values(j.values));
    }
  }

  OperadicCategory CA = build_opcat(A, n_max);
  OperadicCategory CB = build_opcat(B, n_max);
  auto lift = [&](const OpMorphism& m) {
    return OpMorphism{phi.map(m.src), phi.map(m.tgt), m.carrier};
  };

  if (!(phi.map(CA.terminal) == CB.terminal))
    return CheckReport::fail(phi.name + ": the terminal is not preserved");

  std::vector<OpMorphism> all;
  for (auto& y : CA.objects) {
    if (phi.map(y).n != y.n)
      return CheckReport::fail(phi.name + ": cardinality changes at " + y.key());
    for (auto& f : CA.out_of(y)) all.push_back(f);
  }

  for (auto& f : all) {
    OpMorphism Ff = lift(f);
    if (!(B.quotient_along(Ff.src, Ff.carrier) == Ff.tgt))
      return CheckReport::fail(phi.name + ": the image of " + f.to_string() +
                               " is not a morphism");
    for (int i = 1; i <= f.tgt.n; ++i)
      if (!(phi.map(fibre(CA, f, i)) == fibre(CB, Ff, i)))
        return CheckReport::fail(phi.name + ": fibre " + std::to_string(i) + " of " +
                                 f.to_string() + " is not preserved");
  }

  for (auto& g : all)
    for (auto& f : CA.out_of(g.tgt))
      for (int i = 1; i <= f.tgt.n; ++i) {
        OpMorphism inner = fibre_morphism(CA, g, f, i);
        OpMorphism outer = fibre_morphism(CB, lift(g), lift(f), i);
        if (!(lift(inner) == outer))
          return CheckReport::fail(phi.name + ": the fibre morphism of " + g.to_string() +
                                   " over " + std::to_string(i) + " is not preserved");
      }

  return CheckReport::pass(phi.name + ": natural for all restrictions and quotients on <= " +
                           std::to_string(n_max) +
                           " points; the induced functor preserves the terminal, "
                           "cardinalities, fibres, and fibre morphisms");
}

}  // namespace hsp
