#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalania/graph.hpp"
#include "catalania/links.hpp"

namespace catalania {

// A linear order c_{perm[0]} < c_{perm[1]} < ... < c_{perm[t-1]}.
struct LinearOrderC {
  std::vector<int> perm;

  int t() const { return static_cast<int>(perm.size()); }
  // rank[i] = position of c_i in the chain, 1-based; index 0 unused.
  std::vector<int> ranks() const;
  int top() const { return perm.back(); }
  std::string str() const;  // "2<1<3"

  static LinearOrderC parse(const std::string& text);  // throws with position
  static std::vector<LinearOrderC> all(int t);
};

// Inductive doubling construction.  Vertices carry hypercube coordinates
// (one bit per level, highest level last) and forms propagated from the
// all-zeros corner; 2^t vertices.
LabeledGraph build_sgraph(const LinearOrderC& order);

// Classes whose assigned partial order does not contradict the linear order.
std::vector<ClassKey> select_compatible(const ClassTable& tbl, const LinearOrderC& order);

// Subgraph of the graph of links induced on the compatible classes.
LabeledGraph induced_subgraph(const LabeledGraph& links, const std::vector<ClassKey>& vertices);

// Checks that the abstract construction and the induced subgraph carry the
// same forms vertex-for-vertex and edge-for-edge; returns the vertex map.
std::vector<int> match_by_forms(const LabeledGraph& abstract, const LabeledGraph& induced);

struct OrderedPathWitness {
  int target = 0;
  std::vector<int> vertices;    // from source to target
  std::vector<int> edge_labels; // strictly increasing in the order
};

// All ordered paths from v to vertices of label k (the empty path counts
// when v itself has label k).  In a doubling-construction graph exactly one
// witness exists; other S-graphs may return several.
std::vector<OrderedPathWitness> ordered_paths(const LabeledGraph& g, const LinearOrderC& order,
                                              int v, int k);

struct SinkForest {
  std::vector<std::pair<int, int>> arcs;  // u -> v, pointing at the roots
  std::vector<int> roots;                 // the label-(t+1) vertices
};

// Orients every vertex's unique ordered path towards its label-(t+1) target.
SinkForest orient_to_sinks(const LabeledGraph& g, const LinearOrderC& order);

struct ComponentSplit {
  std::vector<int> vertices;
  std::vector<long long> top_coefficient_row;  // shared c_s row, m-basis
  bool zero_row = false;
};

// Components after deleting the edges labelled by the maximal element; each
// component shares one c_s coefficient row, zero or r^s - r^{s+1}.
std::vector<ComponentSplit> split_components(const LabeledGraph& g, const LinearOrderC& order);

struct SGraphReport {
  PropertyReport properties;  // P1, P2, P3, P5, P6
  bool p7 = false;
  std::string p7_witness;
  bool pass() const { return properties.all_pass() && p7; }
};

SGraphReport is_S_graph(const LabeledGraph& g, const LinearOrderC& order);

// Exhaustive search for S-subgraphs of the graph of links satisfying the
// ordered-path property for the given order; guarded to small t.
std::vector<LabeledGraph> unique_ssubgraph_search(const LinearOrderC& order, int max_t = 3,
                                                  bool prune_by_chain = true);

// Bundled fixture: the doubling graph of c2<c3<c1 with a pendant path.
LabeledGraph fixture_pendant_octagon();
// Bundled fixture: two octagon-like blocks joined by a chain; an S-graph
// that contains no doubling graph.
LabeledGraph fixture_two_octagons();

}  // namespace catalania
