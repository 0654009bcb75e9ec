#include "catalania/figures.hpp"

#include <tuple>
#include <vector>

namespace catalania {

namespace {

LabeledGraph make(int t, const std::vector<int>& labels,
                  const std::vector<std::tuple<int, int, int>>& edges) {
  LabeledGraph g;
  g.t = t;
  for (int l : labels) {
    GraphVertex v;
    v.label = l;
    g.add_vertex(std::move(v));
  }
  for (auto [u, v, lab] : edges) g.add_edge(u, v, lab);
  g.sort_edges();
  return g;
}

}  // namespace

LabeledGraph figure_links_order3() {
  // a=2 b=1 c=1 d=3 A=3
  return make(2, {2, 1, 1, 3, 3},
              {{2, 4, 2}, {1, 3, 1}, {0, 3, 2}, {0, 2, 1}});
}

LabeledGraph figure_links_order4() {
  // a b c d e f g A B C D E F G
  return make(3, {1, 2, 3, 4, 4, 4, 1, 4, 3, 2, 1, 1, 1, 4},
              {{0, 1, 1},
               {0, 2, 2},
               {3, 2, 3},
               {7, 8, 3},
               {7, 9, 2},
               {10, 9, 1},
               {1, 8, 2},
               {3, 10, 2},
               {0, 4, 3},
               {7, 11, 1},
               {1, 5, 3},
               {8, 12, 1},
               {5, 6, 1},
               {12, 13, 3}});
}

LabeledGraph figure_square_c1c2() {
  return make(2, {1, 3, 1, 2}, {{0, 1, 1}, {2, 3, 1}, {3, 1, 2}});
}

LabeledGraph figure_square_c2c1() {
  return make(2, {2, 3, 1, 3}, {{0, 1, 2}, {2, 3, 2}, {2, 0, 1}});
}

LabeledGraph figure_octagon() {
  // a=2 b=4 c=1 d=4 A=2 B=3 C=1 D=3
  return make(3, {2, 4, 1, 4, 2, 3, 1, 3},
              {{0, 1, 2},
               {0, 2, 1},
               {3, 2, 2},
               {4, 5, 2},
               {4, 6, 1},
               {7, 6, 2},
               {1, 5, 3},
               {3, 7, 3}});
}

LabeledGraph figure_limit_t3() {
  // a=3 b=4 c=2 with label-1 pendants A, B, C
  return make(3, {3, 4, 2, 1, 1, 1},
              {{0, 1, 2}, {0, 2, 2}, {1, 2, 2}, {3, 0, 1}, {2, 5, 1}, {1, 4, 1}});
}

LabeledGraph figure_limit_t4() {
  // a=3 b=4 c=2; each triangle corner carries a label-1 and a label-5
  // pendant, the label-5 vertex continuing to another label-1 vertex.
  return make(4, {3, 4, 2, 1, 5, 1, 1, 5, 1, 1, 5, 1},
              {{0, 1, 2},
               {0, 2, 2},
               {1, 2, 2},
               {3, 0, 1},
               {2, 9, 1},
               {1, 6, 1},
               {4, 0, 4},
               {2, 10, 4},
               {1, 7, 4},
               {4, 5, 1},
               {10, 11, 1},
               {7, 8, 1}});
}

LabeledGraph figure_octagon_coalesced() {
  // a=4 b=3 c=1 / A=4 B=3 C=2, all triangle edges labelled 2
  return make(3, {4, 3, 1, 4, 3, 2},
              {{0, 1, 2}, {0, 2, 2}, {1, 2, 2}, {3, 4, 2}, {3, 5, 2}, {5, 4, 2}, {5, 2, 1}});
}

LabeledGraph figure_coalesce_t4_original() {
  // 1<4<2<3: rows (a b c d | A B C D | A' B' C' D' | A'' B'' C'' D'')
  return make(4, {1, 1, 1, 1, 5, 4, 3, 5, 5, 2, 2, 5, 1, 1, 1, 1},
              {{4, 0, 1},
               {1, 5, 1},
               {2, 6, 1},
               {3, 7, 1},
               {4, 5, 4},
               {5, 6, 3},
               {6, 7, 4},
               {5, 9, 2},
               {6, 10, 2},
               {8, 9, 4},
               {10, 11, 4},
               {8, 12, 1},
               {9, 13, 1},
               {10, 14, 1},
               {11, 15, 1}});
}

LabeledGraph figure_coalesce_t4_swapped() {
  // 1<4<3<2
  return make(4, {1, 1, 1, 1, 5, 4, 4, 5, 5, 2, 3, 5, 1, 1, 1, 1},
              {{4, 0, 1},
               {1, 5, 1},
               {2, 6, 1},
               {3, 7, 1},
               {4, 5, 4},
               {6, 7, 4},
               {5, 9, 3},
               {6, 10, 3},
               {8, 9, 4},
               {9, 10, 2},
               {10, 11, 4},
               {8, 12, 1},
               {9, 13, 1},
               {10, 14, 1},
               {11, 15, 1}});
}

LabeledGraph figure_simplex_t3() {
  LabeledGraph g;
  g.t = 3;
  for (int l : {1, 2, 3, 4}) {
    GraphVertex v;
    v.label = l;
    g.add_vertex(std::move(v));
  }
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v, 1);
  g.sort_edges();
  return g;
}

}  // namespace catalania
