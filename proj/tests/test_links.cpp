#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "catalania/figures.hpp"
#include "catalania/links.hpp"

using namespace catalania;

namespace {

Diagram D(std::vector<int> h) { return Diagram{std::move(h)}; }

bool has_class_edge(const LabeledGraph& g, const Diagram& a, const Diagram& b, int label) {
  int u = -1, v = -1;
  for (int i = 0; i < g.order(); ++i) {
    if (g.vertices[static_cast<size_t>(i)].cls->deplete == a) u = i;
    if (g.vertices[static_cast<size_t>(i)].cls->deplete == b) v = i;
  }
  REQUIRE(u >= 0);
  REQUIRE(v >= 0);
  return g.has_edge(u, v, label);
}

}  // namespace

TEST_CASE("quasi-extremal columns") {
  CHECK(quasi_extremal_columns(label_tableau(D({0, 0, 1}))) == std::vector<int>{1, 2});
  CHECK(quasi_extremal_columns(label_tableau(D({2, 1, 2, 2}))) == std::vector<int>{1, 3});
  CHECK(quasi_extremal_columns(label_tableau(D({1}))).empty());
  CHECK_THROWS_AS(quasi_extremal_columns(label_tableau(D({2, 1, 0, 2}))), std::invalid_argument);
}

TEST_CASE("the graph of links of order 2") {
  const LabeledGraph g = build_graph_of_links(2);
  CHECK(g.order() == 2);
  CHECK(g.edges.size() == 1);
  CHECK(has_class_edge(g, D({0, 0}), D({1, 1}), 1));
}

TEST_CASE("the graph of links of order 3, edge by edge") {
  const LabeledGraph g = build_graph_of_links(3);
  CHECK(g.order() == 5);
  CHECK(g.edges.size() == 4);
  CHECK(has_class_edge(g, D({0, 0, 0}), D({1, 0, 1}), 1));
  CHECK(has_class_edge(g, D({0, 0, 0}), D({0, 1, 1}), 2));
  CHECK(has_class_edge(g, D({0, 1, 1}), D({1, 1, 1}), 1));
  CHECK(has_class_edge(g, D({1, 1, 1}), D({2, 1, 2}), 2));
  CHECK(isomorphic(g, figure_links_order3()));
}

TEST_CASE("the graph of links of order 4 matches its drawing") {
  const LabeledGraph g = build_graph_of_links(4);
  CHECK(g.order() == 14);
  CHECK(g.edges.size() == 14);
  CHECK(isomorphic(g, figure_links_order4()));
  CHECK_FALSE(isomorphic(g, figure_links_order3()));
}

TEST_CASE("pointed chains") {
  const LabeledGraph g2 = build_graph_of_links(2);
  CHECK(pointed_chain(g2).size() == 2);  // the whole graph
  const LabeledGraph g4 = build_graph_of_links(4);
  const auto chain = pointed_chain(g4);
  CHECK(chain.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(g4.vertices[static_cast<size_t>(chain[static_cast<size_t>(i)])].label == 4 - i);
  // Chain classes carry the empty partial order.
  for (int v : chain) CHECK(partial_order(*g4.vertices[static_cast<size_t>(v)].cls).pairs.empty());
}

TEST_CASE("property checks and a mutation witness") {
  LabeledGraph g = build_graph_of_links(3);
  CHECK(check_properties(g, {Property::P1, Property::P2, Property::P3, Property::P5, Property::P6})
            .all_pass());
  // Flipping one edge label breaks the evaluation identity with a witness.
  g.edges.front().label = g.edges.front().label == 1 ? 2 : 1;
  const PropertyReport rep = check_properties(g, {Property::P3});
  CHECK_FALSE(rep.all_pass());
  CHECK(rep.items.front().witness.find("evaluation identity") != std::string::npos);
}

TEST_CASE("the square has one triad and it defines its order") {
  const ClassTable tbl = enumerate_classes(3);
  const LabeledGraph links = build_graph_of_links(tbl);
  // Keep the classes compatible with c_1 < c_2: the square.
  std::vector<ClassKey> keep;
  for (const ClassKey& k : tbl.classes)
    if (k.deplete != D({2, 1, 2})) keep.push_back(k);
  LabeledGraph square;
  square.t = 2;
  {
    std::vector<int> remap(static_cast<size_t>(links.order()), -1);
    for (int i = 0; i < links.order(); ++i)
      if (links.vertices[static_cast<size_t>(i)].cls->deplete != D({2, 1, 2}))
        remap[static_cast<size_t>(i)] = square.add_vertex(links.vertices[static_cast<size_t>(i)]);
    for (const GraphEdge& e : links.edges)
      if (remap[static_cast<size_t>(e.u)] >= 0 && remap[static_cast<size_t>(e.v)] >= 0)
        square.add_edge(remap[static_cast<size_t>(e.u)], remap[static_cast<size_t>(e.v)], e.label);
  }
  const auto ts = triads(square);
  REQUIRE(ts.size() == 1);
  CHECK(ts.front().outer == 1);
  CHECK(ts.front().inner == 2);
  const TriadOrder to = triad_order(square, ts.front());
  // The defining end is the class whose order contains c_1 <= c_2.
  CHECK(square.vertices[static_cast<size_t>(to.defining_end)].cls->deplete == D({1, 0, 1}));
}

TEST_CASE("triads determine an order relation at exactly one end") {
  const LabeledGraph g4 = build_graph_of_links(4);
  for (const Triad& tr : triads(g4)) {
    const TriadOrder to = triad_order(g4, tr);
    CHECK(to.low == tr.outer);
    CHECK(to.high == tr.inner);
    CHECK((to.defining_end == tr.a || to.defining_end == tr.d));
  }
  // The octagon avoids triads on its swappable pair {1,3}.
  const LabeledGraph octagon = figure_octagon();
  for (const Triad& tr : triads(octagon))
    CHECK(std::set<int>{tr.outer, tr.inner} != std::set<int>{1, 3});
}

TEST_CASE("vertex labels equal the strongly extremal columns") {
  for (int order = 2; order <= 5; ++order) {
    const LabeledGraph g = build_graph_of_links(order);
    for (const GraphVertex& v : g.vertices) CHECK(v.label == v.cls->strongly_extremal);
  }
}
