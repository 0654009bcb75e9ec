#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catalania/diagram.hpp"
#include "catalania/linear_form.hpp"

namespace catalania {

struct GraphVertex {
  int label = 0;                  // 1..t+1
  std::optional<ClassKey> cls;    // class-backed graphs
  std::optional<LinearForm> form; // evaluation graphs
  std::vector<long long> evaluation;  // evaluated function, quotient graphs
  std::string coords;             // hypercube bits, highest level last
  std::string tag;                // fixtures
};

struct GraphEdge {
  int u = 0;
  int v = 0;  // vertex indices, u < v
  int label = 0;

  auto operator<=>(const GraphEdge&) const = default;
};

// Vertices labelled in 1..t+1, edges labelled in 1..t.  Parallel edges with
// equal labels are rejected; distinct labels may repeat a vertex pair.
struct LabeledGraph {
  int t = 0;  // edge labels range over 1..t
  std::vector<GraphVertex> vertices;
  std::vector<GraphEdge> edges;

  int order() const { return static_cast<int>(vertices.size()); }
  int add_vertex(GraphVertex v);
  void add_edge(int u, int v, int label);
  bool has_edge(int u, int v, int label) const;
  std::vector<std::pair<int, int>> incident(int v) const;  // (edge index, other endpoint)
  void sort_edges();

  std::vector<int> vertices_with_label(int label) const;
  bool connected() const;

  // Canonical byte string for class-backed graphs: equal strings mean the
  // same labelled subgraph of the graph of links.
  std::string subgraph_key() const;
};

// Label-preserving graph isomorphism (vertex and edge labels).
bool isomorphic(const LabeledGraph& a, const LabeledGraph& b);

std::string to_dot(const LabeledGraph& g, const std::string& name = "catalania");
std::string to_json(const LabeledGraph& g);

}  // namespace catalania
