#pragma once

#include <map>
#include <vector>

#include "catalania/diagram.hpp"

namespace catalania {

// Height cap slack: removal moves never raise the height, and a slack of 3
// above the class height witnesses every removal enabled by a bounded number
// of prior adjunctions in all tested cases.  Oracle users re-run with the
// slack raised by 1 to assert closure stability.
inline constexpr int kOracleHeightSlack = 3;

// Connected components of the move relation over all diagrams of one order
// with height at most `cap`.  Built by exploration, independently of
// canonicalize(), so it can serve as its oracle.
struct EquivalenceAtlas {
  int order = 0;
  int cap = 0;
  std::vector<Diagram> universe;  // sorted
  std::vector<int> component_of;  // parallel to universe
  int component_count = 0;
  std::map<Diagram, int> index;

  int component(const Diagram& d) const;
  std::vector<std::vector<Diagram>> groups() const;
};

EquivalenceAtlas build_equivalence_atlas(int order, int cap);

}  // namespace catalania
