#include "hsp/operadic.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace hsp;

namespace {

HStructure graph(int n, std::vector<std::pair<int, int>> edges) {
  return sort_edges(HStructure{"graphs", n, std::move(edges)});
}

const HStructure vertex = graph(1, {});
const HStructure e2 = graph(2, {});
const HStructure k2 = graph(2, {{1, 2}});
const HStructure e3 = graph(3, {});
const HStructure p3 = graph(3, {{1, 2}, {2, 3}});
const HStructure k3 = graph(3, {{1, 2}, {1, 3}, {2, 3}});

const OperadicCategory& graphs2() {
  static OperadicCategory C = build_opcat(graphs_species(), 2);
  return C;
}

const OperadicCategory& graphs3() {
  static OperadicCategory C = build_opcat(graphs_species(), 3);
  return C;
}

const OperadicCategory& sets4() {
  static OperadicCategory C = build_opcat(sets_species(), 4);
  return C;
}

}  // namespace

TEST_CASE("objects, terminal, and morphism counts") {
  REQUIRE(graphs2().objects.size() == 3);
  CHECK(graphs2().objects[0] == vertex);
  CHECK(graphs2().objects[1] == e2);
  CHECK(graphs2().objects[2] == k2);
  CHECK(graphs2().terminal == vertex);
  // per source: id; on 2 points also the swap and the collapse
  CHECK(graphs2().num_morphisms() == 7);

  CHECK(graphs3().objects.size() == 11);
  // per source on 3 points: 1 + 6 + 6 carrier surjections, each lifting once
  CHECK(graphs3().out_of(e3).size() == 13);
  CHECK(graphs3().num_morphisms() == 111);

  CHECK(sets4().objects.size() == 4);
  CHECK(sets4().terminal == (HStructure{"sets", 1, {}}));
  // sum over a <= 4, b <= a of the number of surjections a ->> b
  CHECK(sets4().num_morphisms() == 92);

  // one lift per source structure and carrier surjection (never more or less)
  for (auto& y : graphs3().objects) {
    std::map<int, int> by_size;
    for (auto& f : graphs3().out_of(y)) ++by_size[cardinality(f.tgt)];
    if (y.n == 3) {
      CHECK(by_size[1] == 1);
      CHECK(by_size[2] == 6);
      CHECK(by_size[3] == 6);
    }
    if (y.n == 2) {
      CHECK(by_size[1] == 1);
      CHECK(by_size[2] == 2);
    }
  }

  HereditarySpecies two_points = graphs_species();
  two_points.structures = [](int n) {
    std::vector<HStructure> out;
    out.push_back(HStructure{"graphs", n, {}});
    if (n == 1) out.push_back(HStructure{"graphs", n, {}});
    return out;
  };
  CHECK_THROWS(build_opcat(two_points, 2));
}

TEST_CASE("hom sets are determined by quotients of the source payload") {
  // every kernel of a 2-block quotient of the path crosses some edge
  CHECK(graphs3().hom(p3, k2).size() == 6);
  CHECK(graphs3().hom(p3, e2).empty());

  // the single edge 1-2 dies only under the kernel that merges its endpoints
  CHECK(graphs3().hom(graph(3, {{1, 2}}), e2).size() == 2);
  CHECK(graphs3().hom(graph(3, {{1, 2}}), k2).size() == 4);

  CHECK(graphs2().hom(k2, vertex).size() == 1);
  CHECK(graphs2().to_terminal(k2).carrier.values == std::vector<int>{1, 1});
  CHECK(graphs3().identity(p3).carrier.values == std::vector<int>{1, 2, 3});
}

TEST_CASE("fibres restrict the source payload along the carrier fibres") {
  OpMorphism f{p3, k2, make_surjection(3, 2, {1, 1, 2})};
  REQUIRE(graphs3().hom(p3, k2).front() == f);
  CHECK(fibre(graphs3(), f, 1) == k2);
  CHECK(fibre(graphs3(), f, 2) == vertex);

  OpMorphism g{p3, k2, make_surjection(3, 2, {2, 1, 2})};
  CHECK(fibre(graphs3(), g, 1) == vertex);
  CHECK(fibre(graphs3(), g, 2) == e2);

  CHECK(fibre(graphs3(), graphs3().identity(k3), 2) == vertex);
  CHECK(fibre(graphs3(), graphs3().to_terminal(p3), 1) == p3);
}

TEST_CASE("fibre morphisms compose carriers fibrewise") {
  OpMorphism g{p3, k2, make_surjection(3, 2, {1, 1, 2})};
  OpMorphism collapse = graphs3().to_terminal(k2);

  OpMorphism comp = compose(graphs3(), collapse, g);
  CHECK(comp.src == p3);
  CHECK(comp.tgt == vertex);
  CHECK(comp.carrier.values == std::vector<int>{1, 1, 1});

  // the fibre morphism over the terminal is the morphism itself
  CHECK(fibre_morphism(graphs3(), g, collapse, 1) == g);
  CHECK(fibre_morphism(graphs3(), g, graphs3().to_terminal(g.tgt), 1) == g);

  // over i = 1 the fibre of g is the edge on {1,2}; the induced morphism is
  // its identity
  OpMorphism h{p3, p3, graphs3().identity(p3).carrier};
  OpMorphism gi = fibre_morphism(graphs3(), h, g, 1);
  CHECK(gi.src == k2);
  CHECK(gi.tgt == k2);
  CHECK(gi.carrier.values == std::vector<int>{1, 2});
}

TEST_CASE("axioms hold for graphs and sets") {
  auto g = check_axioms(graphs3(), 3);
  INFO(g.detail);
  CHECK(g.ok);

  auto s = check_axioms(sets4(), 3);
  INFO(s.detail);
  CHECK(s.ok);

  auto g2 = check_axioms(graphs2(), 3);
  INFO(g2.detail);
  CHECK(g2.ok);
}

TEST_CASE("forgetting to relabel fibres is caught by the object-validity axiom") {
  auto report = check_axioms(graphs3(), 3, hsp_fixtures::unrelabeled_fibre());
  CHECK_FALSE(report.ok);
  CHECK(report.detail.find("(A3)") != std::string::npos);
  // first offender in enumeration order: the star 1-2,1-3 restricted to the
  // carrier fibre {1,3} keeps the labels of its edge 1-3
  CHECK(report.detail.find("graphs:3:1-2,1-3 --1,2,1-->") != std::string::npos);
  CHECK(report.detail.find("graphs:2:1-3") != std::string::npos);
}

TEST_CASE("forgetting payloads induces an operadic functor") {
  auto phi = underlying_sets_morphism(graphs_species());
  auto report = check_operadic_functor(phi, 3);
  INFO(report.detail);
  CHECK(report.ok);

  auto id_sets = underlying_sets_morphism(sets_species());
  CHECK(check_operadic_functor(id_sets, 4).ok);
}

TEST_CASE("edge complement is not natural for quotients") {
  auto report = check_operadic_functor(hsp_fixtures::edge_complement_morphism(), 3);
  CHECK_FALSE(report.ok);
  CHECK(report.detail.find("graphs:3") != std::string::npos);
  CHECK(report.detail.find("quotient") != std::string::npos);
}
