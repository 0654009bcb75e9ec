#pragma once

#include <optional>
#include <string>
#include <vector>

namespace catalania {

// A diagram of order t+1: column heights, leftmost column first.
// Columns are 1-based in all public interfaces.
struct Diagram {
  std::vector<int> heights;

  Diagram() = default;
  explicit Diagram(std::vector<int> h);

  int order() const { return static_cast<int>(heights.size()); }
  int height() const;
  bool is_empty() const { return height() == 0; }
  int col(int i) const { return heights[static_cast<size_t>(i - 1)]; }

  bool operator==(const Diagram&) const = default;
  auto operator<=>(const Diagram&) const = default;

  std::string str() const;
};

// Both boundary conditions hold: every left extremal column has even height
// or the height of the diagram, every right extremal column has odd height
// or the height of the diagram.
bool check_boundary(const Diagram& d);

// Leftmost highest column for odd height, rightmost highest for even height;
// the last column for the empty diagram.
int strongly_extremal_column(const Diagram& d);

// Nearest column with height >= s on the given side of column i, if any.
// Requires s >= 1; every column strictly between has height < s.
std::optional<int> left_neighbour_at(const Diagram& d, int i, int s);
std::optional<int> right_neighbour_at(const Diagram& d, int i, int s);

bool is_complete(const Diagram& d);  // no domino can be adjoined
bool is_reduced(const Diagram& d);   // no two adjacent rows cancel
bool is_deplete(const Diagram& d);   // no removal move of any kind applies

enum class MoveDir { Adjoin, Remove };
enum class MoveKind { Domino, HalfDomino, RowPair };
enum class DominoSide { LeftEven, RightOdd };

struct Move {
  MoveKind kind{};
  MoveDir dir{};
  int column = 0;            // Domino, HalfDomino
  DominoSide side{};         // Domino only
  int level = 0;             // RowPair: rows level+1, level+2 for adjoin,
                             //          rows level, level+1 for remove
  std::vector<int> support;  // RowPair adjoin: columns receiving the blocks

  static Move domino(int column, DominoSide side, MoveDir dir);
  static Move half_domino(int column, MoveDir dir);
  static Move row_pair_remove(int low_row);
  static Move row_pair_adjoin(int level, std::vector<int> support);

  bool operator==(const Move&) const = default;
  std::string str() const;
};

// Every legal move on d, removals first, in a deterministic order.  Row-pair
// adjunctions are filtered so that the result satisfies the boundary
// conditions; all other moves preserve them by construction.
std::vector<Move> legal_moves(const Diagram& d);

// Applies m, throwing std::invalid_argument naming the violated side
// condition when m is not legal on d.
Diagram apply_move(const Diagram& d, const Move& m);

// Adjoins dominoes until none can be adjoined.  Preserves the height and the
// strongly extremal column.
Diagram complete(const Diagram& d);

// Canonical representative of the equivalence class of a diagram.
struct ClassKey {
  Diagram deplete;
  int strongly_extremal = 0;
  int class_height = 0;

  int order() const { return deplete.order(); }
  bool operator==(const ClassKey& o) const { return deplete == o.deplete; }
  auto operator<=>(const ClassKey& o) const { return deplete <=> o.deplete; }
  std::string str() const { return deplete.str(); }
};

// Applies removal moves (row pairs first, then dominoes leftmost first, then
// half-dominoes) until none applies.  The fixpoint is unique per class.
ClassKey canonicalize(const Diagram& d);

// Adds a complete bottom row and reverses the column order.
Diagram dual(const Diagram& d);

// Merges two diagrams sharing a boundary column of equal parity, adding full
// rows to the shorter side first.  Result order is order(l)+order(r)-1.
Diagram merge(const Diagram& left, const Diagram& right);

}  // namespace catalania
