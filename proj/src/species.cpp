#include "hsp/species.hpp"

#include "hsp/util.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hsp {

std::string HStructure::key() const {
  std::string s = species + ":" + std::to_string(n) + ":";
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
  }
  return s;
}

HStructure sort_edges(HStructure x) {
  for (auto& [a, b] : x.edges)
    if (a > b) std::swap(a, b);
  std::sort(x.edges.begin(), x.edges.end());
  x.edges.erase(std::unique(x.edges.begin(), x.edges.end()), x.edges.end());
  return x;
}

HStructure structure_from_key(const std::string& key) {
  auto c1 = key.find(':');
  auto c2 = key.find(':', c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw std::runtime_error("malformed structure key: " + key);
  HStructure x;
  x.species = key.substr(0, c1);
  x.n = std::stoi(key.substr(c1 + 1, c2 - c1 - 1));
  std::string rest = key.substr(c2 + 1);
  size_t pos = 0;
  while (pos < rest.size()) {
    size_t comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    std::string edge = rest.substr(pos, comma - pos);
    size_t dash = edge.find('-');
    if (dash == std::string::npos)
      throw std::runtime_error("malformed edge in structure key: " + key);
    x.edges.push_back({std::stoi(edge.substr(0, dash)), std::stoi(edge.substr(dash + 1))});
    pos = comma + 1;
  }
  return sort_edges(x);
}

namespace {

void validate_graph(const HStructure& x) {
  for (auto& [a, b] : x.edges)
    if (a < 1 || b < 1 || a > x.n || b > x.n || a == b)
      throw std::runtime_error("invalid edge in structure " + x.key());
}

// edge image under a total map; loops dropped, duplicates merged by sort_edges
HStructure map_edges(const HStructure& x, const std::vector<int>& f, int m,
                     const std::string& species) {
  HStructure y;
  y.species = species;
  y.n = m;
  for (auto& [a, b] : x.edges) {
    int u = f[a - 1], v = f[b - 1];
    if (u != v) y.edges.push_back({u, v});
  }
  return sort_edges(y);
}

}  // namespace

HereditarySpecies sets_species() {
  HereditarySpecies H;
  H.name = "sets";
  H.structures = [](int n) {
    return std::vector<HStructure>{HStructure{"sets", n, {}}};
  };
  H.restrict_along = [](const HStructure& x, const Injection& i) {
    (void)x;
    return HStructure{"sets", i.src_n, {}};
  };
  H.quotient_along = [](const HStructure& x, const Surjection& p) {
    (void)x;
    return HStructure{"sets", p.tgt_n, {}};
  };
  return H;
}

HereditarySpecies graphs_species() {
  HereditarySpecies H;
  H.name = "graphs";
  H.structures = [](int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) pairs.push_back({a, b});
    std::vector<HStructure> out;
    for (size_t mask = 0; mask < (size_t(1) << pairs.size()); ++mask) {
      HStructure x{"graphs", n, {}};
      for (size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1) x.edges.push_back(pairs[e]);
      out.push_back(x);
    }
    return out;
  };
  H.restrict_along = [](const HStructure& x, const Injection& i) {
    validate_graph(x);
    // position of each carrier element of x inside U, if any
    std::vector<int> back(x.n + 1, 0);
    for (int u = 1; u <= i.src_n; ++u) back[i.values[u - 1]] = u;
    HStructure y{"graphs", i.src_n, {}};
    for (auto& [a, b] : x.edges)
      if (back[a] && back[b]) y.edges.push_back({back[a], back[b]});
    return sort_edges(y);
  };
  H.quotient_along = [](const HStructure& x, const Surjection& p) {
    validate_graph(x);
    return map_edges(x, p.values, p.tgt_n, "graphs");
  };
  return H;
}

const HereditarySpecies& species_by_name(const std::string& name) {
  static const std::map<std::string, HereditarySpecies> registry = {
      {"sets", sets_species()},
      {"graphs", graphs_species()},
  };
  auto it = registry.find(name);
  if (it == registry.end()) throw std::runtime_error("unknown species: " + name);
  return it->second;
}

PartialSurjection make_partial_surjection(int src_n, std::vector<int> subset, Surjection sur) {
  if (!std::is_sorted(subset.begin(), subset.end()) ||
      std::adjacent_find(subset.begin(), subset.end()) != subset.end())
    throw std::runtime_error("span subset must be strictly increasing");
  if (!subset.empty() && (subset.front() < 1 || subset.back() > src_n))
    throw std::runtime_error("span subset outside carrier");
  if (sur.src_n != int(subset.size())) throw std::runtime_error("span legs disagree on apex");
  PartialSurjection a;
  a.src_n = src_n;
  a.tgt_n = sur.tgt_n;
  a.subset = std::move(subset);
  a.sur = std::move(sur);
  return a;
}

PartialSurjection identity_span(int n) {
  std::vector<int> all(n), idv(n);
  for (int i = 0; i < n; ++i) all[i] = idv[i] = i + 1;
  return make_partial_surjection(n, all, make_surjection(n, n, idv));
}

PartialSurjection compose_partial_surjections(const PartialSurjection& a,
                                              const PartialSurjection& b) {
  if (a.tgt_n != b.src_n) throw std::runtime_error("span composition: middle object mismatch");
  // pull back a.sur against the inclusion of b.subset
  std::set<int> mid(b.subset.begin(), b.subset.end());
  std::map<int, int> mid_pos;  // element of b.subset -> 1-based apex position of b
  for (size_t i = 0; i < b.subset.size(); ++i) mid_pos[b.subset[i]] = int(i) + 1;
  std::vector<int> U;
  std::vector<int> out_values;
  for (size_t u = 0; u < a.subset.size(); ++u) {
    int w = a.sur.values[u];
    if (mid.count(w)) {
      U.push_back(a.subset[u]);
      out_values.push_back(b.sur.values[mid_pos[w] - 1]);
    }
  }
  // legs of spans here are surjective, so an empty apex forces an empty target
  return make_partial_surjection(a.src_n, U,
                                 make_surjection(int(U.size()), b.tgt_n, out_values));
}

HStructure act(const HereditarySpecies& H, const PartialSurjection& a, const HStructure& x) {
  if (x.n != a.src_n) throw std::runtime_error("act: carrier mismatch");
  auto restricted = H.restrict_along(x, subset_injection(a.subset, a.src_n));
  return H.quotient_along(restricted, a.sur);
}

HStructure restrict_to(const HereditarySpecies& H, const HStructure& x,
                       const std::vector<int>& U) {
  return H.restrict_along(x, subset_injection(U, x.n));
}

HStructure quotient_by(const HereditarySpecies& H, const HStructure& x, const Partition& pi) {
  if (pi.n != x.n) throw std::runtime_error("quotient_by: partition of wrong set");
  return H.quotient_along(x, canonical_surjection(pi));
}

CheckReport check_functoriality(const HereditarySpecies& H, int n_max) {
  // identity laws
  for (int n = 0; n <= n_max; ++n) {
    std::vector<int> idv(n);
    for (int i = 0; i < n; ++i) idv[i] = i + 1;
    for (auto& x : H.structures(n)) {
      if (H.restrict_along(x, make_injection(n, n, idv)) != x)
        return CheckReport::fail("restriction along identity changed " + x.key());
      if (H.quotient_along(x, make_surjection(n, n, idv)) != x)
        return CheckReport::fail("quotient along identity changed " + x.key());
      if (act(H, identity_span(n), x) != x)
        return CheckReport::fail("identity span changed " + x.key());
    }
  }
  // contravariant composition for injections
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= n; ++m)
      for (auto& iv : all_maps(m, n)) {
        std::set<int> dup(iv.begin(), iv.end());
        if (int(dup.size()) != m) continue;
        auto i = make_injection(m, n, iv);
        for (int l = 0; l <= m; ++l)
          for (auto& jv : all_maps(l, m)) {
            std::set<int> dup2(jv.begin(), jv.end());
            if (int(dup2.size()) != l) continue;
            auto j = make_injection(l, m, jv);
            for (auto& x : H.structures(n))
              if (H.restrict_along(H.restrict_along(x, i), j) !=
                  H.restrict_along(x, compose(i, j)))
                return CheckReport::fail("restriction not functorial at " + x.key());
          }
      }
  // covariant composition for surjections
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= n; ++m)
      for (auto& pv : all_surjections(n, m)) {
        auto p = make_surjection(n, m, pv);
        for (int l = 0; l <= m; ++l)
          for (auto& qv : all_surjections(m, l)) {
            auto q = make_surjection(m, l, qv);
            for (auto& x : H.structures(n))
              if (H.quotient_along(H.quotient_along(x, p), q) !=
                  H.quotient_along(x, compose(q, p)))
                return CheckReport::fail("quotient not functorial at " + x.key());
          }
      }
  // span composition law
  std::vector<std::vector<PartialSurjection>> spans(n_max + 1);
  for (int v = 0; v <= n_max; ++v)
    for (auto& U : all_subsets(v))
      for (int w = 0; w <= int(U.size()); ++w)
        for (auto& sv : all_surjections(int(U.size()), w))
          spans[v].push_back(
              make_partial_surjection(v, U, make_surjection(int(U.size()), w, sv)));
  for (int v = 0; v <= n_max; ++v)
    for (auto& a : spans[v]) {
      if (a.tgt_n > n_max) continue;
      for (auto& b : spans[a.tgt_n])
        for (auto& x : H.structures(v))
          if (act(H, b, act(H, a, x)) != act(H, compose_partial_surjections(a, b), x))
            return CheckReport::fail("span action not functorial at " + x.key());
    }
  return CheckReport::pass("functor laws hold up to " + std::to_string(n_max));
}

CheckReport check_beck_chevalley(const HereditarySpecies& H, int n_max) {
  for (int u = 0; u <= n_max; ++u)
    for (int v = 0; v <= u; ++v)
      for (auto& pv : all_surjections(u, v)) {
        auto p = make_surjection(u, v, pv);
        for (auto& S : all_subsets(v)) {
          auto j = subset_injection(S, v);
          // U' = p^{-1}(S), monotone in U
          std::vector<int> Up;
          std::set<int> Sset(S.begin(), S.end());
          for (int e = 1; e <= u; ++e)
            if (Sset.count(p.values[e - 1])) Up.push_back(e);
          auto i = subset_injection(Up, u);
          std::map<int, int> spos;
          for (size_t k = 0; k < S.size(); ++k) spos[S[k]] = int(k) + 1;
          std::vector<int> ppv;
          for (int e : Up) ppv.push_back(spos[p.values[e - 1]]);
          auto pp = make_surjection(int(Up.size()), int(S.size()), ppv);
          for (auto& x : H.structures(u)) {
            auto lhs = H.quotient_along(H.restrict_along(x, i), pp);
            auto rhs = H.restrict_along(H.quotient_along(x, p), j);
            if (lhs != rhs)
              return CheckReport::fail("base change fails at x=" + x.key() + " p=[" +
                                       join_ints(p.values) + "] subset {" + join_ints(S) +
                                       "}: " + lhs.key() + " vs " + rhs.key());
          }
        }
      }
  return CheckReport::pass("base change holds up to " + std::to_string(n_max));
}

HStructure canonical_structure(const HereditarySpecies& H, const HStructure& x) {
  HStructure best = sort_edges(x);
  for (auto& perm : all_permutations(x.n)) {
    auto y = H.restrict_along(x, make_injection(x.n, x.n, inverse_permutation(perm)));
    y = sort_edges(y);
    if (y < best) best = y;
  }
  return best;
}

long long structure_aut_order(const HereditarySpecies& H, const HStructure& x) {
  long long count = 0;
  auto xs = sort_edges(x);
  for (auto& perm : all_permutations(x.n))
    if (sort_edges(H.restrict_along(x, make_injection(x.n, x.n, perm))) == xs) ++count;
  return count;
}

CheckReport check_schmitt_identities(const HereditarySpecies& H, int n_max) {
  for (int n = 0; n <= n_max; ++n) {
    auto partitions = enumerate_partitions(n);
    for (auto& x : H.structures(n))
      for (auto& sigma : partitions)
        for (auto& tau : partitions) {
          if (!refines(tau, sigma)) continue;
          auto q_tau = canonical_surjection(tau);
          auto G_tau = H.quotient_along(x, q_tau);
          auto st = induced_partition(sigma, tau);
          // (G/tau)/(sigma/tau) = G/sigma
          if (canonical_structure(H, quotient_by(H, G_tau, st)) !=
              canonical_structure(H, quotient_by(H, x, sigma)))
            return CheckReport::fail("double quotient fails at " + x.key() + " tau=" +
                                     tau.to_string() + " sigma=" + sigma.to_string());
          auto sblocks = sigma.blocks();
          auto stblocks = st.blocks();
          for (size_t bi = 0; bi < sblocks.size(); ++bi) {
            auto& B = sblocks[bi];
            auto xB = restrict_to(H, x, B);
            auto tauB = restrict_partition(tau, B);
            // (G|B)|T = G|T for each tau-block T inside B
            std::map<int, int> pos;
            for (size_t k = 0; k < B.size(); ++k) pos[B[k]] = int(k) + 1;
            for (auto& T : tau.blocks()) {
              if (sigma.rgs[T[0] - 1] != int(bi)) continue;
              std::vector<int> Trel;
              for (int e : T) Trel.push_back(pos[e]);
              if (canonical_structure(H, restrict_to(H, xB, Trel)) !=
                  canonical_structure(H, restrict_to(H, x, T)))
                return CheckReport::fail("nested restriction fails at " + x.key());
            }
            // (G/tau)|(sigma/tau-block) = (G|B)/(tau|B)
            auto lhs = restrict_to(H, G_tau, stblocks[bi]);
            auto rhs = quotient_by(H, xB, tauB);
            if (canonical_structure(H, lhs) != canonical_structure(H, rhs))
              return CheckReport::fail("restricted quotient fails at " + x.key() + " tau=" +
                                       tau.to_string() + " sigma=" + sigma.to_string());
          }
        }
  }
  return CheckReport::pass("blockwise identities hold up to " + std::to_string(n_max));
}

}  // namespace hsp
