#ifndef HSP_PARTITION_HPP
#define HSP_PARTITION_HPP

#include <string>
#include <vector>

namespace hsp {

// A map of finite ordinals {1..src_n} -> {1..tgt_n}; values[i-1] = image of i.
struct FiniteMap {
  int src_n = 0;
  int tgt_n = 0;
  std::vector<int> values;

  bool operator==(const FiniteMap&) const = default;
};

struct Surjection : FiniteMap {};  // every target value attained
struct Injection : FiniteMap {};   // values pairwise distinct

Surjection make_surjection(int src_n, int tgt_n, std::vector<int> values);
Injection make_injection(int src_n, int tgt_n, std::vector<int> values);

// Monotone injection with image U ⊆ {1..n} (U strictly increasing).
Injection subset_injection(const std::vector<int>& U, int n);

Surjection compose(const Surjection& g, const Surjection& f);
Injection compose(const Injection& g, const Injection& f);

// Set partition of {1..n}, stored as a restricted-growth string:
// rgs[i-1] is the 0-based block index of element i, blocks numbered by first appearance.
struct Partition {
  int n = 0;
  std::vector<int> rgs;

  int num_blocks() const;
  // Blocks ordered by minimal element, elements increasing.
  std::vector<std::vector<int>> blocks() const;
  std::string to_string() const;

  bool operator==(const Partition&) const = default;
  bool operator<(const Partition& o) const { return rgs < o.rgs; }
};

Partition partition_from_blocks(int n, const std::vector<std::vector<int>>& blocks);

// All partitions of {1..n} in lexicographic restricted-growth order.
std::vector<Partition> enumerate_partitions(int n);

// The order-preserving surjection {1..n} ->> {1..k} collapsing each block
// (blocks numbered by minimal element).
Surjection canonical_surjection(const Partition& p);

// Kernel partition of a surjection.
Partition partition_of_surjection(const Surjection& s);

// True iff every block of fine is contained in a block of coarse.
bool refines(const Partition& fine, const Partition& coarse);

// For tau refining sigma: the partition sigma/tau of the tau-block set {1..k_tau}
// whose blocks collect the tau-blocks lying in one sigma-block.
Partition induced_partition(const Partition& sigma, const Partition& tau);

// Restriction of p to the subset U (relabelled along the monotone bijection U -> {1..|U|}).
Partition restrict_partition(const Partition& p, const std::vector<int>& U);

// Monotone inclusions of the fibres of s: result[i-1] embeds s^{-1}(i) into {1..src_n}.
std::vector<Injection> fibres(const Surjection& s);

// For composable surjections rho: a ->> b and psi: b ->> c and i in {1..c}:
// the surjection (psi∘rho)^{-1}(i) ->> psi^{-1}(i) induced by rho, with both
// fibres relabelled along their monotone inclusions.
Surjection fibre_map(const Surjection& rho, const Surjection& psi, int i);

}  // namespace hsp

#endif
