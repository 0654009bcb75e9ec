#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catalania/diagram.hpp"

namespace catalania {

// A diagram together with its block labels.  labels[i-1][j-1] is the label
// of the block in column i at row j; nullopt marks a blank cell (the
// rightmost block of an odd row, the leftmost block of an even row).
struct Tableau {
  Diagram diagram;
  std::vector<std::vector<std::optional<int>>> labels;

  bool has_block(int i, int j) const {
    return i >= 1 && i <= diagram.order() && j >= 1 && j <= diagram.col(i);
  }
  std::optional<int> label_at(int i, int j) const;
  std::string ascii() const;
};

// The unique labelling: row 1 gets b(i,1) = i, higher rows inherit from the
// left neighbour (even rows) or right neighbour (odd rows) one level down.
Tableau label_tableau(const Diagram& d);

// Complete tableaux carry b(i,j) = i on odd rows and i-1 on even rows.
bool well_numbered(const Tableau& t);

// Non-strict inequalities c_a <= c_b on the coefficient indices 1..t.
struct PartialOrder {
  std::set<std::pair<int, int>> pairs;

  bool contains(int a, int b) const { return pairs.count({a, b}) > 0; }
  bool operator==(const PartialOrder&) const = default;
  std::string str() const;
};

// Inequalities read off a complete tableau, with a phantom zeroth row
// labelled b(i,0) = i-1.
PartialOrder tableau_partial_order(const Tableau& t);

// The order assigned to a class: computed on both reduced complete
// representatives, which must agree.
PartialOrder partial_order(const ClassKey& key);

}  // namespace catalania
