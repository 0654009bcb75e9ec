#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "catalania/hypercube.hpp"
#include "catalania/sgraph.hpp"

namespace catalania {

// Non-negative integer values for c_1..c_t; ties and zeros allowed.
struct CoefficientAssignment {
  std::vector<long long> values;

  int t() const { return static_cast<int>(values.size()); }
  long long value(int i) const { return values[static_cast<size_t>(i - 1)]; }
  bool injective() const;
  bool all_positive() const;
  bool all_equal() const;
  std::string str() const;

  // "c1=1,c4=2,c2=9,c3=9"; throws with position on malformed input.
  static CoefficientAssignment parse(const std::string& text, int t);
};

// Generic order-compatible values (powers of 100 by rank), optionally with
// the two largest set equal.
CoefficientAssignment generic_assignment(const LinearOrderC& order, bool coalesce_top_pair = false);

using FormMatrix = std::vector<std::vector<long long>>;

// Both sides of the smallest-coefficient specialization: the vertex
// functions of the doubling graph at c_r = 0, and the composite functions of
// the two split sub-constructions.  The two sets must coincide.
struct ZeroDegeneration {
  std::set<FormMatrix> specialized;
  std::set<FormMatrix> composite;
  int components_after_erasing = 0;
  bool sides_equal() const { return specialized == composite; }
};

ZeroDegeneration degenerate_zero(const LinearOrderC& order, int r);

struct QuotientResult {
  LabeledGraph graph;  // vertices carry their shared evaluation
  // (u, v, written label) -> labels merged into that edge
  std::map<std::tuple<int, int, int>, std::set<int>> merged_labels;
};

// Identifies vertices whose functions agree at the assignment; edge labels
// are rewritten to the smallest index of equal value.
QuotientResult quotient_by_equal_functions(const LabeledGraph& g, const CoefficientAssignment& a);

// Coalescing the two largest coefficients when their indices are adjacent:
// the common limit graph built from three relabelled copies, and the
// quotients of both linear orders, which must all agree.
struct Coalescence {
  int r = 0;  // the smaller of the two coalesced indices
  LinearOrderC order_1;
  LinearOrderC order_2;  // top pair swapped
  CoefficientAssignment assignment;
  LabeledGraph g_c;  // three-copy construction
  QuotientResult quotient_1;
  QuotientResult quotient_2;
};

Coalescence coalesce_pair(const LinearOrderC& order);

// True when the vertex functions evaluate pairwise distinct.
bool separation_check(const LabeledGraph& g_c, const CoefficientAssignment& a);

// For the all-equal limit: the quotient functions are totally ordered; the
// result lists the quotient vertices from the minimal function (label t+1)
// to the maximal one (label 1).
std::vector<int> all_equal_limit_chain(const LabeledGraph& quotient);

}  // namespace catalania
