#pragma once

#include "catalania/graph.hpp"

namespace catalania {

// Reference drawings used by the acceptance suite: the graphs of links of
// orders 3 and 4, the four doubling graphs of small orders, and the
// coalescence limits.

LabeledGraph figure_links_order3();
LabeledGraph figure_links_order4();

LabeledGraph figure_square_c1c2();
LabeledGraph figure_square_c2c1();
LabeledGraph figure_octagon();

LabeledGraph figure_limit_t3();            // triangle with three pendants
LabeledGraph figure_limit_t4();            // triangle with nine pendants
LabeledGraph figure_octagon_coalesced();   // two triangles joined by an edge

LabeledGraph figure_coalesce_t4_original();  // the doubling graph of 1<4<2<3
LabeledGraph figure_coalesce_t4_swapped();   // the doubling graph of 1<4<3<2

LabeledGraph figure_simplex_t3();  // complete graph on four labelled vertices

}  // namespace catalania
