#include "hsp/partition.hpp"
#include "hsp/util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace hsp;

namespace {

// Independent oracle for partition counts: Bell numbers via the binomial
// recurrence B_{n+1} = sum_k C(n,k) B_k, no partition enumeration involved.
long long bell_number(int n) {
  std::vector<std::vector<long long>> C(n + 1, std::vector<long long>(n + 1, 0));
  for (int i = 0; i <= n; ++i) {
    C[i][0] = 1;
    for (int j = 1; j <= i; ++j) C[i][j] = C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0);
  }
  std::vector<long long> B(n + 1, 0);
  B[0] = 1;
  for (int m = 0; m < n; ++m) {
    long long s = 0;
    for (int k = 0; k <= m; ++k) s += C[m][k] * B[k];
    B[m + 1] = s;
  }
  return B[n];
}

}  // namespace

TEST_CASE("partition counts match the Bell recurrence", "[partition]") {
  REQUIRE(enumerate_partitions(3).size() == 5);
  REQUIRE(enumerate_partitions(4).size() == 15);
  for (int n = 0; n <= 8; ++n)
    REQUIRE(enumerate_partitions(n).size() == size_t(bell_number(n)));
}

TEST_CASE("partitions come out in restricted-growth lexicographic order", "[partition]") {
  auto ps = enumerate_partitions(3);
  REQUIRE(ps.front().rgs == std::vector<int>{0, 0, 0});
  REQUIRE(ps.back().rgs == std::vector<int>{0, 1, 2});
  for (size_t i = 0; i + 1 < ps.size(); ++i) REQUIRE(ps[i].rgs < ps[i + 1].rgs);
  // every enumerate result is a valid restricted-growth string
  for (auto& p : ps) {
    int mx = -1;
    for (int b : p.rgs) {
      REQUIRE(b <= mx + 1);
      mx = std::max(mx, b);
    }
  }
}

TEST_CASE("canonical surjection of {{1,2},{3}}", "[partition]") {
  auto p = partition_from_blocks(3, {{1, 2}, {3}});
  auto s = canonical_surjection(p);
  REQUIRE(s.src_n == 3);
  REQUIRE(s.tgt_n == 2);
  REQUIRE(s.values == std::vector<int>{1, 1, 2});
  REQUIRE(partition_of_surjection(s) == p);
}

TEST_CASE("induced partition sigma/tau", "[partition]") {
  auto sigma = partition_from_blocks(3, {{1, 2, 3}});
  auto tau = partition_from_blocks(3, {{1, 2}, {3}});
  REQUIRE(refines(tau, sigma));
  auto q = induced_partition(sigma, tau);
  REQUIRE(q.n == 2);
  REQUIRE(q.blocks() == std::vector<std::vector<int>>{{1, 2}});
}

TEST_CASE("fibres of the surjection 1,2->1, 3->2", "[partition]") {
  auto s = make_surjection(3, 2, {1, 1, 2});
  auto fs = fibres(s);
  REQUIRE(fs.size() == 2);
  REQUIRE(fs[0].src_n == 2);
  REQUIRE(fs[0].values == std::vector<int>{1, 2});
  REQUIRE(fs[1].src_n == 1);
  REQUIRE(fs[1].values == std::vector<int>{3});
}

TEST_CASE("fibre map of a composable pair", "[partition]") {
  auto psi = make_surjection(4, 3, {1, 1, 2, 3});
  auto phi = make_surjection(3, 2, {1, 1, 2});
  auto m = fibre_map(psi, phi, 1);
  // (phi∘psi)^{-1}(1) = {1,2,3}, phi^{-1}(1) = {1,2}; induced map sends 1,2->1, 3->2
  REQUIRE(m.src_n == 3);
  REQUIRE(m.tgt_n == 2);
  REQUIRE(m.values == std::vector<int>{1, 1, 2});
}

TEST_CASE("refinement is a partial order", "[partition]") {
  for (int n = 0; n <= 5; ++n) {
    auto ps = enumerate_partitions(n);
    for (auto& a : ps) REQUIRE(refines(a, a));
    for (auto& a : ps)
      for (auto& b : ps) {
        if (refines(a, b) && refines(b, a)) REQUIRE(a == b);
        // independent characterization: a refines b iff the b-block index is
        // constant on every a-block
        bool expect = true;
        auto cb = canonical_surjection(b);
        for (auto& blk : a.blocks())
          for (size_t i = 1; i < blk.size(); ++i)
            if (cb.values[blk[i] - 1] != cb.values[blk[0] - 1]) expect = false;
        REQUIRE(refines(a, b) == expect);
      }
    for (auto& a : ps)
      for (auto& b : ps)
        for (auto& c : ps)
          if (refines(a, b) && refines(b, c)) REQUIRE(refines(a, c));
  }
}

TEST_CASE("fibre maps compose along composable triples", "[partition]") {
  // fibre_map(psi∘rho, tau, i) = fibre_map(psi, tau, i) ∘ fibre_map(rho, tau∘psi, i)
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= a; ++b)
      for (int c = 1; c <= b; ++c)
        for (int d = 1; d <= c; ++d)
          for (auto& rv : all_surjections(a, b))
            for (auto& pv : all_surjections(b, c))
              for (auto& tv : all_surjections(c, d)) {
                auto rho = make_surjection(a, b, rv);
                auto psi = make_surjection(b, c, pv);
                auto tau = make_surjection(c, d, tv);
                for (int i = 1; i <= d; ++i) {
                  auto lhs = fibre_map(compose(psi, rho), tau, i);
                  auto outer = fibre_map(psi, tau, i);
                  auto inner = fibre_map(rho, compose(tau, psi), i);
                  REQUIRE(lhs == compose(outer, inner));
                }
              }
}

TEST_CASE("restriction of a partition relabels monotonically", "[partition]") {
  auto p = partition_from_blocks(4, {{1, 3}, {2}, {4}});
  auto r = restrict_partition(p, {2, 3, 4});
  REQUIRE(r.n == 3);
  REQUIRE(r.blocks() == std::vector<std::vector<int>>{{1}, {2}, {3}});
  auto r2 = restrict_partition(p, {1, 3});
  REQUIRE(r2.blocks() == std::vector<std::vector<int>>{{1, 2}});
}
