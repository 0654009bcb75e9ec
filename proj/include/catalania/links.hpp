#pragma once

#include <string>
#include <vector>

#include "catalania/enumeration.hpp"
#include "catalania/graph.hpp"
#include "catalania/tableau.hpp"

namespace catalania {

// Columns of a complete tableau that dominate one side without being
// strongly extremal; block placement on exactly these columns stays inside
// the valid-diagram world.
std::vector<int> quasi_extremal_columns(const Tableau& tab);

// Vertices are the classes of the order, labelled by the strongly extremal
// column; edges come from block placement on quasi-extremal columns of the
// taller reduced representative, labelled by the new block's label.
LabeledGraph build_graph_of_links(const ClassTable& tbl);
LabeledGraph build_graph_of_links(int order);

// The unique chain with vertex labels t+1..1 and edge labels t..1, as vertex
// indices from label t+1 down to label 1.
std::vector<int> pointed_chain(const LabeledGraph& g);

enum class Property { P1, P2, P3, P5, P6 };

struct PropertyReport {
  struct Item {
    Property property;
    bool pass = false;
    std::string witness;
  };
  std::vector<Item> items;
  bool all_pass() const;
  std::string str() const;
};

PropertyReport check_properties(const LabeledGraph& g, const std::vector<Property>& which);

struct Triad {
  int a = 0, b = 0, c = 0, d = 0;  // vertex indices along the path
  int outer = 0;                   // label of (a,b) and (c,d)
  int inner = 0;                   // label of (b,c)
};

// All three-edge paths whose outer edges carry equal labels.
std::vector<Triad> triads(const LabeledGraph& g);

// A triad defines c_outer < c_inner; the relation is contained in the
// partial order of exactly one of the two end classes.
struct TriadOrder {
  int low = 0;   // outer label
  int high = 0;  // inner label
  int defining_end = 0;  // vertex index whose class contains the relation
};
TriadOrder triad_order(const LabeledGraph& g, const Triad& tr);

}  // namespace catalania
