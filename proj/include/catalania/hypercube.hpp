#pragma once

#include <map>
#include <string>
#include <vector>

#include "catalania/sgraph.hpp"

namespace catalania {

struct HypercubeEmbedding {
  LinearOrderC order;
  LabeledGraph graph;  // vertices carry their bit coordinates

  int dim() const { return order.t(); }
  int vertex_at(const std::string& coords) const;  // -1 when absent
};

// Bit i records the half chosen at induction level i; the all-zeros corner
// is the label-(t+1) end of the pointed chain.  Asserts the Hamming-distance
// adjacency rule, corner complementarity and coordinate monotonicity.
HypercubeEmbedding embed(const LinearOrderC& order);

// n(k_i) = k_i - |{k_j < k_i : j > i}| along the increasing listing.
std::vector<int> canonical_sequence(const LinearOrderC& order);

// Rebuilds the linear order from its canonical sequence.
LinearOrderC invert_canonical_sequence(const std::vector<int>& seq);

struct LabelMultiplicities {
  std::vector<int> vertex_power;  // per vertex label 1..t+1: |V^k| = 2^p
  std::vector<int> edge_power;    // per edge label 1..t:    |E^k| = 2^q
  bool operator==(const LabelMultiplicities&) const = default;
};

// Power-of-two label multiplicities computed from the canonical sequence
// alone, no graph construction.
LabelMultiplicities multiplicities(const LinearOrderC& order);
LabelMultiplicities multiplicities_of_sequence(const std::vector<int>& seq);

// Direct counts on the built graph, for cross-checking.
LabelMultiplicities direct_multiplicities(const LabeledGraph& g);

// Switches descents (r_i, r_{i+1}) -> (r_{i+1}, r_i + 1) until the sequence
// is weakly increasing; entries keep the bound r_i <= i.
std::vector<int> increasing_normal_form(std::vector<int> seq);

struct ClassifyBlock {
  std::vector<int> normal_form;
  std::vector<LinearOrderC> orders;
  LabelMultiplicities mult;
  std::string subgraph;  // canonical key of the shared subgraph of the links
};

// Partition of all t! orders into labelled-graph classes; exactly the
// Catalan number C_t of blocks, cut out equally by the normal-form fibres.
std::vector<ClassifyBlock> classify(int t);

}  // namespace catalania
