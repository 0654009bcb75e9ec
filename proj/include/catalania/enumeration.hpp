#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "catalania/diagram.hpp"

namespace catalania {

inline constexpr int kDefaultMaxOrder = 7;

struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All equivalence classes of one order, indexed by strongly extremal column
// and class height.
struct ClassTable {
  int order = 0;
  std::vector<ClassKey> classes;  // sorted by canonical representative
  std::map<std::pair<int, int>, std::vector<int>> index;  // (j, r) -> positions

  const std::vector<int>& at(int j, int r) const;
  long long count(int j, int r) const;
  int find(const ClassKey& key) const;  // -1 when absent
};

// Scans every height vector in [0..t]^{t+1}; class representatives never
// exceed height t, which the scan re-asserts.
ClassTable enumerate_classes(int order, int max_order = kDefaultMaxOrder);

long long catalan(int n);  // closed form, cross-checked against the recursion

std::map<int, long long> count_by_column(const ClassTable& tbl);

struct CatalanPoly {
  std::vector<long long> coeff;  // coeff[r] = number of classes of height r

  int degree() const { return static_cast<int>(coeff.size()) - 1; }
  long long at(int r) const {
    return r >= 0 && r < static_cast<int>(coeff.size()) ? coeff[static_cast<size_t>(r)] : 0;
  }
  long long value_at_one() const;
  bool operator==(const CatalanPoly&) const = default;
};

CatalanPoly catalan_polynomial(const ClassTable& tbl);

// Coefficients from the counting recursion alone, no enumeration.
CatalanPoly catalan_polynomial_recursive(int order);

// counts[r][j-1] = number of classes of height r with strongly extremal
// column j, computed from the column-split recursions.
std::vector<std::vector<long long>> column_height_counts_recursive(int order);

// Number of classes of height <= r, by the cumulative product recursion.
long long cumulative_count(int order, int r);

// Planted trees with `nodes` nodes and height <= bound; matches
// cumulative_count(order, r) at nodes = order+1, bound = r+2.
long long planted_tree_count(int nodes, int bound);

// Cuts the minimal complete reduced representative at the strongly extremal
// column j (1 < j < order); the two halves determine the class uniquely.
std::pair<ClassKey, ClassKey> split_class(const ClassKey& key);

// Inverse of split_class.
ClassKey merge_class(const ClassKey& left, const ClassKey& right);

enum class ExtendSide { First, Last };

// Adjoins a full-height column on the chosen side (adding a half-domino and
// completing first when the class height has the wrong parity).
ClassKey extend_class(const ClassKey& key, ExtendSide side);

// Strips the first/last column of the minimal complete reduced
// representative and canonicalizes.
ClassKey extend_class_inverse(const ClassKey& key, ExtendSide side);

// Minimal complete reduced representative (height = class height).
Diagram minimal_complete_representative(const ClassKey& key);

// The other reduced complete representative, of height class_height + 1.
Diagram taller_complete_representative(const ClassKey& key);

}  // namespace catalania
