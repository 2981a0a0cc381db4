#include "hsp/partition.hpp"

#include "hsp/util.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace hsp {

Surjection make_surjection(int src_n, int tgt_n, std::vector<int> values) {
  Surjection s;
  s.src_n = src_n;
  s.tgt_n = tgt_n;
  s.values = std::move(values);
  if (int(s.values.size()) != src_n) throw std::runtime_error("surjection: wrong arity");
  if (!is_surjective(s.values, tgt_n) && !(src_n == 0 && tgt_n == 0))
    throw std::runtime_error("surjection: target not covered");
  return s;
}

Injection make_injection(int src_n, int tgt_n, std::vector<int> values) {
  Injection j;
  j.src_n = src_n;
  j.tgt_n = tgt_n;
  j.values = std::move(values);
  if (int(j.values.size()) != src_n) throw std::runtime_error("injection: wrong arity");
  std::set<int> seen;
  for (int v : j.values) {
    if (v < 1 || v > tgt_n || !seen.insert(v).second)
      throw std::runtime_error("injection: not injective into target");
  }
  return j;
}

Injection subset_injection(const std::vector<int>& U, int n) {
  return make_injection(int(U.size()), n, U);
}

Surjection compose(const Surjection& g, const Surjection& f) {
  if (f.tgt_n != g.src_n) throw std::runtime_error("compose: arity mismatch");
  return make_surjection(f.src_n, g.tgt_n, compose_maps(g.values, f.values));
}

Injection compose(const Injection& g, const Injection& f) {
  if (f.tgt_n != g.src_n) throw std::runtime_error("compose: arity mismatch");
  return make_injection(f.src_n, g.tgt_n, compose_maps(g.values, f.values));
}

int Partition::num_blocks() const {
  int m = 0;
  for (int b : rgs) m = std::max(m, b + 1);
  return m;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> bs(num_blocks());
  for (int i = 0; i < n; ++i) bs[rgs[i]].push_back(i + 1);
  return bs;
}

std::string Partition::to_string() const {
  std::string s = "{";
  auto bs = blocks();
  for (size_t b = 0; b < bs.size(); ++b) {
    if (b) s += "|";
    s += join_ints(bs[b]);
  }
  return s + "}";
}

Partition partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  std::vector<int> owner(n, -1);
  // blocks get their restricted-growth numbers by minimal element
  std::vector<std::pair<int, const std::vector<int>*>> order;
  for (auto& b : blocks) {
    if (b.empty()) throw std::runtime_error("partition: empty block");
    order.push_back({*std::min_element(b.begin(), b.end()), &b});
  }
  std::sort(order.begin(), order.end());
  int next = 0;
  for (auto& [mn, b] : order) {
    (void)mn;
    for (int e : *b) {
      if (e < 1 || e > n || owner[e - 1] != -1)
        throw std::runtime_error("partition: blocks do not partition the set");
      owner[e - 1] = next;
    }
    ++next;
  }
  for (int o : owner)
    if (o == -1) throw std::runtime_error("partition: element not covered");
  Partition p;
  p.n = n;
  p.rgs = owner;
  return p;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  if (n == 0) {
    out.push_back(Partition{0, {}});
    return out;
  }
  // lexicographic restricted-growth strings: rgs[i] <= 1 + max(rgs[0..i-1])
  for (;;) {
    Partition p;
    p.n = n;
    p.rgs = rgs;
    out.push_back(p);
    int i = n - 1;
    for (; i > 0; --i) {
      int mx = 0;
      for (int j = 0; j < i; ++j) mx = std::max(mx, rgs[j]);
      if (rgs[i] <= mx) break;
      rgs[i] = 0;
    }
    if (i == 0) break;
    ++rgs[i];
  }
  return out;
}

Surjection canonical_surjection(const Partition& p) {
  std::vector<int> v(p.n);
  for (int i = 0; i < p.n; ++i) v[i] = p.rgs[i] + 1;
  return make_surjection(p.n, p.num_blocks(), v);
}

Partition partition_of_surjection(const Surjection& s) {
  // renumber fibres by first appearance to get a restricted-growth string
  std::vector<int> seen(s.tgt_n, -1);
  Partition p;
  p.n = s.src_n;
  p.rgs.resize(s.src_n);
  int next = 0;
  for (int i = 0; i < s.src_n; ++i) {
    int t = s.values[i] - 1;
    if (seen[t] == -1) seen[t] = next++;
    p.rgs[i] = seen[t];
  }
  return p;
}

bool refines(const Partition& fine, const Partition& coarse) {
  if (fine.n != coarse.n) return false;
  // the coarse block index must be constant on each fine block
  std::map<int, int> rep;  // fine block -> coarse block of its first element
  for (int i = 0; i < fine.n; ++i) {
    auto [it, inserted] = rep.insert({fine.rgs[i], coarse.rgs[i]});
    if (!inserted && it->second != coarse.rgs[i]) return false;
  }
  return true;
}

Partition induced_partition(const Partition& sigma, const Partition& tau) {
  if (!refines(tau, sigma)) throw std::runtime_error("induced_partition: tau must refine sigma");
  int k = tau.num_blocks();
  std::vector<int> owner(k, -1);  // tau block -> sigma block
  for (int i = 0; i < tau.n; ++i) owner[tau.rgs[i]] = sigma.rgs[i];
  // renumber by first appearance over tau-block order
  std::map<int, int> renum;
  Partition q;
  q.n = k;
  q.rgs.resize(k);
  int next = 0;
  for (int b = 0; b < k; ++b) {
    auto [it, inserted] = renum.insert({owner[b], next});
    if (inserted) ++next;
    q.rgs[b] = it->second;
  }
  return q;
}

Partition restrict_partition(const Partition& p, const std::vector<int>& U) {
  std::map<int, int> renum;
  Partition q;
  q.n = int(U.size());
  q.rgs.resize(U.size());
  int next = 0;
  for (size_t i = 0; i < U.size(); ++i) {
    int b = p.rgs[U[i] - 1];
    auto [it, inserted] = renum.insert({b, next});
    if (inserted) ++next;
    q.rgs[i] = it->second;
  }
  return q;
}

std::vector<Injection> fibres(const Surjection& s) {
  std::vector<std::vector<int>> els(s.tgt_n);
  for (int i = 0; i < s.src_n; ++i) els[s.values[i] - 1].push_back(i + 1);
  std::vector<Injection> out;
  for (auto& e : els) out.push_back(subset_injection(e, s.src_n));
  return out;
}

Surjection fibre_map(const Surjection& rho, const Surjection& psi, int i) {
  if (rho.tgt_n != psi.src_n) throw std::runtime_error("fibre_map: arity mismatch");
  auto composite = compose(psi, rho);
  std::vector<int> big, small;  // fibre of psi∘rho at i, fibre of psi at i
  for (int x = 1; x <= composite.src_n; ++x)
    if (composite.values[x - 1] == i) big.push_back(x);
  for (int y = 1; y <= psi.src_n; ++y)
    if (psi.values[y - 1] == i) small.push_back(y);
  std::map<int, int> pos;  // element of psi-fibre -> 1-based position
  for (size_t k = 0; k < small.size(); ++k) pos[small[k]] = int(k) + 1;
  std::vector<int> v;
  for (int x : big) v.push_back(pos.at(rho.values[x - 1]));
  return make_surjection(int(big.size()), int(small.size()), v);
}

}  // namespace hsp
