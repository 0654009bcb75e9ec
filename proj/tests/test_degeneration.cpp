#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalania/degeneration.hpp"
#include "catalania/figures.hpp"

using namespace catalania;

namespace {

LabeledGraph doubling_subgraph(const LinearOrderC& order) {
  const ClassTable tbl = enumerate_classes(order.t() + 1);
  return induced_subgraph(build_graph_of_links(tbl), select_compatible(tbl, order));
}

}  // namespace

TEST_CASE("coefficient assignments") {
  const CoefficientAssignment a = CoefficientAssignment::parse("c1=1,c4=2,c2=9,c3=9", 4);
  CHECK(a.values == std::vector<long long>{1, 9, 9, 2});
  CHECK_FALSE(a.injective());
  CHECK(a.all_positive());
  CHECK_FALSE(a.all_equal());
  CHECK_THROWS_WITH_AS(CoefficientAssignment::parse("c1=1,c2", 2), doctest::Contains("position"),
                       std::invalid_argument);
  CHECK_THROWS_AS(CoefficientAssignment::parse("c1=1", 2), std::invalid_argument);
}

TEST_CASE("zeroing the smallest coefficient at t=1") {
  const ZeroDegeneration zd = degenerate_zero(LinearOrderC::parse("1"), 1);
  CHECK(zd.sides_equal());
  CHECK(zd.specialized.size() == 1);  // only the zero function remains
  CHECK(zd.components_after_erasing == 2);
  CHECK_THROWS_AS(degenerate_zero(LinearOrderC::parse("1<2"), 2), std::domain_error);
}

TEST_CASE("zeroing the smallest coefficient at t=2 and t=3") {
  for (const char* chain : {"1<2", "2<1", "1<2<3", "2<1<3", "3<2<1", "2<3<1"}) {
    const LinearOrderC order = LinearOrderC::parse(chain);
    const ZeroDegeneration zd = degenerate_zero(order, order.perm.front());
    CHECK(zd.sides_equal());
    CHECK(static_cast<int>(zd.specialized.size()) == (1 << (order.t() - 1)));
    CHECK(zd.components_after_erasing >= 2);
  }
}

TEST_CASE("quotients at injective values change nothing") {
  const LinearOrderC order = LinearOrderC::parse("2<1<3");
  const LabeledGraph g = doubling_subgraph(order);
  const QuotientResult q = quotient_by_equal_functions(g, generic_assignment(order));
  CHECK(q.graph.order() == g.order());
  CHECK(q.graph.edges.size() == g.edges.size());
  CHECK(q.merged_labels.size() == g.edges.size());
}

TEST_CASE("the octagon collapses to two joined triangles") {
  const LabeledGraph octagon = doubling_subgraph(LinearOrderC::parse("2<3<1"));
  const QuotientResult q = quotient_by_equal_functions(octagon, CoefficientAssignment{{2, 1, 1}});
  CHECK(q.graph.order() == 6);
  CHECK(q.graph.edges.size() == 7);
  CHECK(isomorphic(q.graph, figure_octagon_coalesced()));
  // Coalesced labels are rewritten to the smaller index, recorded per edge.
  bool saw_rewrite = false;
  for (const auto& [edge, labels] : q.merged_labels)
    saw_rewrite |= std::get<2>(edge) == 2 && labels.count(3) > 0;
  CHECK(saw_rewrite);
}

TEST_CASE("the all-equal limit is the labelled simplex") {
  const CoefficientAssignment ones3{{1, 1, 1}};
  const LabeledGraph octagon = doubling_subgraph(LinearOrderC::parse("2<3<1"));
  const QuotientResult q = quotient_by_equal_functions(octagon, ones3);
  CHECK(isomorphic(q.graph, figure_simplex_t3()));
  const auto chain = all_equal_limit_chain(q.graph);
  REQUIRE(chain.size() == 4);
  CHECK(q.graph.vertices[static_cast<size_t>(chain.front())].label == 4);
  CHECK(q.graph.vertices[static_cast<size_t>(chain.back())].label == 1);

  // Two different orders reach the same labelled limit.
  const CoefficientAssignment ones2{{1, 1}};
  const QuotientResult qa =
      quotient_by_equal_functions(doubling_subgraph(LinearOrderC::parse("1<2")), ones2);
  const QuotientResult qb =
      quotient_by_equal_functions(doubling_subgraph(LinearOrderC::parse("2<1")), ones2);
  CHECK(qa.graph.order() == 3);
  CHECK(isomorphic(qa.graph, qb.graph));
}

TEST_CASE("coalescing the top pair at t=3") {
  const Coalescence cp = coalesce_pair(LinearOrderC::parse("1<2<3"));
  CHECK(cp.r == 2);
  CHECK(cp.g_c.order() == 6);
  CHECK(isomorphic(cp.g_c, figure_limit_t3()));  // triangle with three pendants
  CHECK(separation_check(cp.quotient_1.graph, cp.assignment));
  CHECK(separation_check(cp.quotient_2.graph, cp.assignment));
  CHECK_THROWS_AS(coalesce_pair(LinearOrderC::parse("2<3<1")), std::domain_error);
}

TEST_CASE("coalescing the top pair at t=4 reproduces all three drawings") {
  const Coalescence cp = coalesce_pair(LinearOrderC::parse("1<4<2<3"));
  CHECK(cp.g_c.order() == 12);
  CHECK(isomorphic(cp.g_c, figure_limit_t4()));
  CHECK(isomorphic(build_sgraph(cp.order_1), figure_coalesce_t4_original()));
  CHECK(isomorphic(build_sgraph(cp.order_2), figure_coalesce_t4_swapped()));
  CHECK(separation_check(cp.quotient_1.graph, cp.assignment));
}

TEST_CASE("separation on the printed value grids") {
  const Coalescence t3 = coalesce_pair(LinearOrderC::parse("1<2<3"));
  const CoefficientAssignment a3{{1, 5, 5}};
  const LabeledGraph g3 = doubling_subgraph(t3.order_1);
  CHECK(separation_check(quotient_by_equal_functions(g3, a3).graph, a3));

  const Coalescence t4 = coalesce_pair(LinearOrderC::parse("1<4<2<3"));
  const CoefficientAssignment a4{{1, 9, 9, 2}};
  const LabeledGraph g4 = doubling_subgraph(t4.order_1);
  CHECK(separation_check(quotient_by_equal_functions(g4, a4).graph, a4));

  // Duplicating one evaluation must break separation.
  LabeledGraph broken = quotient_by_equal_functions(g3, a3).graph;
  broken.vertices[0].evaluation = broken.vertices[1].evaluation;
  CHECK_FALSE(separation_check(broken, a3));
}

TEST_CASE("quotients refuse to merge across labels") {
  // All coefficients zero merges everything; classes of different labels
  // then share the zero function, which is a reported error.
  const LabeledGraph g = doubling_subgraph(LinearOrderC::parse("1<2"));
  CHECK_THROWS_WITH_AS(quotient_by_equal_functions(g, CoefficientAssignment{{0, 0}}),
                       doctest::Contains("different labels"), std::logic_error);
}
