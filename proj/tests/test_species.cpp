#include "hsp/species.hpp"
#include "hsp/util.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hsp;

namespace {

HStructure graph(int n, std::vector<std::pair<int, int>> edges) {
  return sort_edges(HStructure{"graphs", n, std::move(edges)});
}

}  // namespace

TEST_CASE("structure enumeration", "[species]") {
  auto sets = sets_species();
  auto graphs = graphs_species();
  for (int n = 0; n <= 4; ++n) REQUIRE(sets.structures(n).size() == 1);
  REQUIRE(graphs.structures(0).size() == 1);
  REQUIRE(graphs.structures(1).size() == 1);
  REQUIRE(graphs.structures(2).size() == 2);
  REQUIRE(graphs.structures(3).size() == 8);   // 2^C(3,2)
  REQUIRE(graphs.structures(4).size() == 64);  // 2^C(4,2)
}

TEST_CASE("restriction is the induced subgraph", "[species]") {
  auto graphs = graphs_species();
  auto triangle = graph(3, {{1, 2}, {1, 3}, {2, 3}});
  auto r = restrict_to(graphs, triangle, {1, 2});
  REQUIRE(r == graph(2, {{1, 2}}));
  REQUIRE(restrict_to(graphs, triangle, {1, 2, 3}) == triangle);

  auto path = graph(3, {{1, 2}, {2, 3}});
  REQUIRE(restrict_to(graphs, path, {1, 3}) == graph(2, {}));
}

TEST_CASE("quotient keeps an edge iff some cross edge exists", "[species]") {
  auto graphs = graphs_species();
  auto path = graph(3, {{1, 2}, {2, 3}});
  auto q = quotient_by(graphs, path, partition_from_blocks(3, {{1, 2}, {3}}));
  REQUIRE(q == graph(2, {{1, 2}}));

  // discrete partition only relabels
  auto discrete = partition_from_blocks(3, {{1}, {2}, {3}});
  REQUIRE(quotient_by(graphs, path, discrete) == path);

  // edgeless stays edgeless under any partition
  for (auto& pi : enumerate_partitions(3))
    REQUIRE(quotient_by(graphs, graph(3, {}), pi) == graph(pi.num_blocks(), {}));
}

TEST_CASE("span composition by set pullback", "[species]") {
  auto a = identity_span(3);
  auto b = identity_span(3);
  REQUIRE(compose_partial_surjections(a, b) == identity_span(3));

  // full injection + 3->>2 (1,2 -> 1; 3 -> 2), then pick out {1} of 2
  auto first = make_partial_surjection(3, {1, 2, 3}, make_surjection(3, 2, {1, 1, 2}));
  auto second = make_partial_surjection(2, {1}, make_surjection(1, 1, {1}));
  auto c = compose_partial_surjections(first, second);
  REQUIRE(c.src_n == 3);
  REQUIRE(c.tgt_n == 1);
  REQUIRE(c.subset == std::vector<int>{1, 2});
  REQUIRE(c.sur.values == std::vector<int>{1, 1});

  // empty middle absorbs
  auto none = make_partial_surjection(3, {}, make_surjection(0, 0, {}));
  auto after = make_partial_surjection(0, {}, make_surjection(0, 0, {}));
  auto e = compose_partial_surjections(none, after);
  REQUIRE(e.subset.empty());
  REQUIRE(e.tgt_n == 0);
}

TEST_CASE("act restricts then quotients", "[species]") {
  auto graphs = graphs_species();
  auto path = graph(3, {{1, 2}, {2, 3}});
  REQUIRE(act(graphs, identity_span(3), path) == path);

  auto incl = make_partial_surjection(3, {1, 3}, make_surjection(2, 2, {1, 2}));
  REQUIRE(act(graphs, incl, path) == graph(2, {}));

  auto quo = make_partial_surjection(3, {1, 2, 3}, make_surjection(3, 2, {1, 1, 2}));
  REQUIRE(act(graphs, quo, path) == graph(2, {{1, 2}}));
}

TEST_CASE("act is functorial along span composition", "[species]") {
  auto graphs = graphs_species();
  REQUIRE(check_functoriality(graphs, 3).ok);
  REQUIRE(check_functoriality(sets_species(), 3).ok);
}

TEST_CASE("quotient/restriction base change", "[species]") {
  REQUIRE(check_beck_chevalley(sets_species(), 4).ok);
  REQUIRE(check_beck_chevalley(graphs_species(), 4).ok);
}

TEST_CASE("blockwise restriction/quotient compatibilities", "[species]") {
  auto graphs = graphs_species();

  // hand-checked instance: G the path, tau discrete, sigma = {{1,2},{3}}
  auto G = graph(3, {{1, 2}, {2, 3}});
  auto tau = partition_from_blocks(3, {{1}, {2}, {3}});
  auto sigma = partition_from_blocks(3, {{1, 2}, {3}});
  auto Gtau = quotient_by(graphs, G, tau);                      // path again
  auto st = induced_partition(sigma, tau);                      // {{1,2},{3}} on 3
  REQUIRE(quotient_by(graphs, Gtau, st) == quotient_by(graphs, G, sigma));

  REQUIRE(check_schmitt_identities(graphs, 4).ok);
  REQUIRE(check_schmitt_identities(sets_species(), 4).ok);
}

TEST_CASE("canonical structures and automorphism counts", "[species]") {
  auto graphs = graphs_species();
  // edgeless on 3: full symmetric group
  REQUIRE(structure_aut_order(graphs, graph(3, {})) == 6);
  // path on 3: only the end swap
  REQUIRE(structure_aut_order(graphs, graph(3, {{1, 2}, {2, 3}})) == 2);
  // canonical form identifies isomorphic graphs
  auto p1 = graph(3, {{1, 2}, {2, 3}});
  auto p2 = graph(3, {{1, 3}, {2, 3}});
  REQUIRE(canonical_structure(graphs, p1) == canonical_structure(graphs, p2));
  REQUIRE(canonical_structure(graphs, p1) != canonical_structure(graphs, graph(3, {{1, 2}})));
}
