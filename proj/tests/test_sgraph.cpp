#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "catalania/figures.hpp"
#include "catalania/sgraph.hpp"

using namespace catalania;

namespace {

Diagram D(std::vector<int> h) { return Diagram{std::move(h)}; }

std::set<Diagram> class_set(const std::vector<ClassKey>& keys) {
  std::set<Diagram> out;
  for (const ClassKey& k : keys) out.insert(k.deplete);
  return out;
}

}  // namespace

TEST_CASE("parsing linear orders") {
  CHECK(LinearOrderC::parse("2<1<3").perm == std::vector<int>{2, 1, 3});
  CHECK(LinearOrderC::parse("1").perm == std::vector<int>{1});
  CHECK_THROWS_WITH_AS(LinearOrderC::parse("2<<3"), doctest::Contains("position 2"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(LinearOrderC::parse("1<2<"), doctest::Contains("position"),
                       std::invalid_argument);
  CHECK_THROWS_AS(LinearOrderC::parse("1<3"), std::invalid_argument);
  CHECK(LinearOrderC::all(3).size() == 6);
}

TEST_CASE("doubling graphs match the printed squares and octagon") {
  const LabeledGraph s12 = build_sgraph(LinearOrderC::parse("1<2"));
  CHECK(s12.order() == 4);
  CHECK(s12.edges.size() == 3);
  CHECK(isomorphic(s12, figure_square_c1c2()));
  CHECK_FALSE(isomorphic(s12, figure_square_c2c1()));
  CHECK(isomorphic(build_sgraph(LinearOrderC::parse("2<1")), figure_square_c2c1()));
  CHECK(isomorphic(build_sgraph(LinearOrderC::parse("2<1<3")), figure_octagon()));
  CHECK(isomorphic(build_sgraph(LinearOrderC::parse("2<3<1")), figure_octagon()));
}

TEST_CASE("the four tree-shaped graphs at t=3") {
  std::set<std::string> keys;
  const ClassTable tbl = enumerate_classes(4);
  const LabeledGraph links = build_graph_of_links(tbl);
  int trees = 0;
  for (const LinearOrderC& order : LinearOrderC::all(3)) {
    const LabeledGraph g = build_sgraph(order);
    if (!isomorphic(g, figure_octagon())) {
      ++trees;
      CHECK(g.edges.size() == 7);  // 8 vertices, connected, acyclic
    }
    keys.insert(induced_subgraph(links, select_compatible(tbl, order)).subgraph_key());
  }
  CHECK(trees == 4);
  CHECK(keys.size() == 5);
}

TEST_CASE("compatible classes at t=2") {
  const ClassTable tbl = enumerate_classes(3);
  CHECK(class_set(select_compatible(tbl, LinearOrderC::parse("1<2"))) ==
        std::set<Diagram>{D({0, 0, 0}), D({0, 1, 1}), D({1, 0, 1}), D({1, 1, 1})});
  CHECK(class_set(select_compatible(tbl, LinearOrderC::parse("2<1"))) ==
        std::set<Diagram>{D({0, 0, 0}), D({0, 1, 1}), D({1, 1, 1}), D({2, 1, 2})});
  // t=1: both classes are compatible with the only order.
  CHECK(select_compatible(enumerate_classes(2), LinearOrderC::parse("1")).size() == 2);
}

TEST_CASE("ordered paths in a doubling graph") {
  const LinearOrderC order = LinearOrderC::parse("2<1<3");
  const LabeledGraph g = build_sgraph(order);
  for (int v : g.vertices_with_label(4)) {
    const auto ws = ordered_paths(g, order, v, 4);
    REQUIRE(ws.size() == 1);
    CHECK(ws.front().vertices == std::vector<int>{v});  // the empty path
    CHECK(ws.front().edge_labels.empty());
  }
  for (int v = 0; v < g.order(); ++v)
    for (int k = 1; k <= 4; ++k) CHECK(ordered_paths(g, order, v, k).size() == 1);
}

TEST_CASE("orientation towards the sinks") {
  const LabeledGraph g2 = build_sgraph(LinearOrderC::parse("1"));
  const SinkForest f2 = orient_to_sinks(g2, LinearOrderC::parse("1"));
  REQUIRE(f2.arcs.size() == 1);
  CHECK(g2.vertices[static_cast<size_t>(f2.arcs.front().first)].label == 1);
  CHECK(g2.vertices[static_cast<size_t>(f2.arcs.front().second)].label == 2);

  for (const LinearOrderC& order : LinearOrderC::all(3)) {
    const LabeledGraph g = build_sgraph(order);
    const SinkForest f = orient_to_sinks(g, order);
    CHECK(f.roots.size() == g.vertices_with_label(4).size());
    // Every vertex walks into a root.
    for (int v = 0; v < g.order(); ++v) {
      int cur = v, steps = 0;
      while (g.vertices[static_cast<size_t>(cur)].label != 4) {
        for (auto [a, b] : f.arcs)
          if (a == cur) {
            cur = b;
            break;
          }
        REQUIRE(++steps <= g.order());
      }
    }
  }
}

TEST_CASE("splitting along the maximal label") {
  const ClassTable tbl3 = enumerate_classes(3);
  const LabeledGraph links3 = build_graph_of_links(tbl3);
  const LinearOrderC order12 = LinearOrderC::parse("1<2");
  const auto comps =
      split_components(induced_subgraph(links3, select_compatible(tbl3, order12)), order12);
  REQUIRE(comps.size() == 2);
  for (const auto& c : comps) CHECK(c.vertices.size() == 2);

  const ClassTable tbl4 = enumerate_classes(4);
  const LabeledGraph links4 = build_graph_of_links(tbl4);
  const LinearOrderC octorder = LinearOrderC::parse("2<3<1");
  const auto octcomps =
      split_components(induced_subgraph(links4, select_compatible(tbl4, octorder)), octorder);
  REQUIRE(octcomps.size() == 2);
  for (const auto& c : octcomps) CHECK(c.vertices.size() == 4);
  CHECK(octcomps[0].zero_row != octcomps[1].zero_row);
}

TEST_CASE("the axioms fail on any proper subgraph") {
  for (int t = 2; t <= 3; ++t) {
    const ClassTable tbl = enumerate_classes(t + 1);
    const LabeledGraph links = build_graph_of_links(tbl);
    for (const LinearOrderC& order : LinearOrderC::all(t)) {
      const LabeledGraph g = induced_subgraph(links, select_compatible(tbl, order));
      CHECK(is_S_graph(g, order).pass());
      for (size_t drop = 0; drop < g.edges.size(); ++drop) {
        LabeledGraph h = g;
        h.edges.erase(h.edges.begin() + static_cast<long>(drop));
        CHECK_FALSE(is_S_graph(h, order).pass());
      }
    }
  }
}

TEST_CASE("the doubling graph is the unique S-subgraph") {
  for (int t = 1; t <= 2; ++t) {
    const ClassTable tbl = enumerate_classes(t + 1);
    const LabeledGraph links = build_graph_of_links(tbl);
    for (const LinearOrderC& order : LinearOrderC::all(t)) {
      const auto pruned = unique_ssubgraph_search(order);
      const auto unpruned = unique_ssubgraph_search(order, 3, false);
      REQUIRE(pruned.size() == 1);
      REQUIRE(unpruned.size() == 1);
      const std::string expect =
          induced_subgraph(links, select_compatible(tbl, order)).subgraph_key();
      CHECK(pruned.front().subgraph_key() == expect);
      CHECK(unpruned.front().subgraph_key() == expect);
    }
  }
  CHECK_THROWS_AS(unique_ssubgraph_search(LinearOrderC::parse("1<2<3<4")), capacity_error);
}

TEST_CASE("fixture graphs propagate consistent forms") {
  const LabeledGraph pendant = fixture_pendant_octagon();
  CHECK(pendant.order() == 10);
  CHECK(check_properties(pendant, {Property::P1, Property::P2, Property::P3}).all_pass());
  const LabeledGraph two = fixture_two_octagons();
  CHECK(two.order() == 18);
  CHECK(two.edges.size() == 19);
  CHECK(check_properties(two, {Property::P1, Property::P2, Property::P3, Property::P5,
                               Property::P6})
            .all_pass());
}

TEST_CASE("the two-block fixture breaks target uniqueness") {
  const LabeledGraph two = fixture_two_octagons();
  const LinearOrderC order = LinearOrderC::parse("2<3<1");
  int designated = -1;
  for (int v = 0; v < two.order(); ++v)
    if (two.vertices[static_cast<size_t>(v)].tag == "designated") designated = v;
  REQUIRE(designated >= 0);
  const auto ws = ordered_paths(two, order, designated, 1);
  REQUIRE(ws.size() == 2);
  std::set<int> targets;
  for (const auto& w : ws) targets.insert(w.target);
  CHECK(targets.size() == 2);
}
