#ifndef HSP_UTIL_HPP
#define HSP_UTIL_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace hsp {

// Values throughout are 1-based: a map n -> m is a vector of length n with
// entries in 1..m.  Subsets of {1..n} are strictly increasing vectors.

// All permutations of {1..n} as 1-based value vectors, lexicographic.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// All maps {1..n} -> {1..m}, lexicographic.  n = 0 gives the single empty map.
inline std::vector<std::vector<int>> all_maps(int n, int m) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  if (m == 0) return out;  // no map from nonempty to empty
  std::vector<int> f(n, 1);
  for (;;) {
    out.push_back(f);
    int i = n - 1;
    while (i >= 0 && f[i] == m) f[i--] = 1;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

inline bool is_surjective(const std::vector<int>& f, int m) {
  std::vector<char> hit(m, 0);
  for (int v : f) hit[v - 1] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

// All surjections {1..n} ->> {1..m}.
inline std::vector<std::vector<int>> all_surjections(int n, int m) {
  std::vector<std::vector<int>> out;
  for (auto& f : all_maps(n, m))
    if (is_surjective(f, m)) out.push_back(f);
  return out;
}

// All strictly increasing subsets of {1..n} of size k.
inline std::vector<std::vector<int>> all_subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 1);
  if (k > n) return out;
  for (;;) {
    out.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// All subsets of {1..n}, every size, smaller sizes first.
inline std::vector<std::vector<int>> all_subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= n; ++k)
    for (auto& s : all_subsets_of_size(n, k)) out.push_back(s);
  return out;
}

inline std::vector<int> compose_maps(const std::vector<int>& g, const std::vector<int>& f) {
  // (g ∘ f)(i) = g(f(i))
  std::vector<int> h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = g[f[i] - 1];
  return h;
}

inline std::vector<int> inverse_permutation(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i] - 1] = int(i) + 1;
  return q;
}

inline std::string join_ints(const std::vector<int>& v, char sep = ',') {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

}  // namespace hsp

#endif
