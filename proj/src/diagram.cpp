#include "catalania/diagram.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace catalania {

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument(what);
}

void ensure(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

// True when a column of height base+2 at 0-based position c would be the
// left (base even) or right (base odd) neighbour, at heights base+1 and
// base+2, of a column of height >= base+2.  Column c itself is ignored.
bool domino_companion_ok(const std::vector<int>& h, int c, int base) {
  const int n = static_cast<int>(h.size());
  if (base % 2 == 0) {
    for (int j = c + 1; j < n; ++j) {
      if (h[j] >= base + 2) return true;
      if (h[j] > base) return false;
    }
    return false;
  }
  for (int j = c - 1; j >= 0; --j) {
    if (h[j] >= base + 2) return true;
    if (h[j] > base) return false;
  }
  return false;
}

std::optional<int> unique_max_column(const Diagram& d) {
  const int H = d.height();
  if (H == 0) return std::nullopt;
  int where = -1;
  for (int i = 1; i <= d.order(); ++i) {
    if (d.col(i) == H) {
      if (where != -1) return std::nullopt;
      where = i;
    }
  }
  return where;
}

// Rows u, u+1 cancel when their supports coincide and are non-empty,
// i.e. u <= height and no column has height exactly u.
bool row_pair_removable(const Diagram& d, int u) {
  if (u < 1 || u >= d.height() + 1) return false;
  if (u > d.height()) return false;
  bool any = false;
  for (int v : d.heights) {
    if (v == u) return false;
    if (v >= u + 1) any = true;
  }
  return any;
}

}  // namespace

Diagram::Diagram(std::vector<int> h) : heights(std::move(h)) {
  if (heights.empty()) reject("a diagram needs at least one column");
  for (int v : heights)
    if (v < 0) reject("column heights must be non-negative");
}

int Diagram::height() const {
  int H = 0;
  for (int v : heights) H = std::max(H, v);
  return H;
}

std::string Diagram::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < order(); ++i) {
    if (i) os << ',';
    os << heights[static_cast<size_t>(i)];
  }
  os << ')';
  return os.str();
}

bool check_boundary(const Diagram& d) {
  const int H = d.height();
  if (H == 0) return true;
  if (d.heights.back() == 0) return false;  // empty last column is right extremal
  const int n = d.order();
  std::vector<int> suffix(static_cast<size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    suffix[static_cast<size_t>(i)] =
        std::max(suffix[static_cast<size_t>(i) + 1], d.heights[static_cast<size_t>(i)]);
  int prefix = 0;
  for (int i = 0; i < n; ++i) {
    const int h = d.heights[static_cast<size_t>(i)];
    if (h > 0) {
      if (prefix < h && h % 2 != 0 && h != H) return false;                      // left extremal
      if (suffix[static_cast<size_t>(i) + 1] < h && h % 2 != 1 && h != H) return false;  // right
    }
    prefix = std::max(prefix, h);
  }
  return true;
}

int strongly_extremal_column(const Diagram& d) {
  if (!check_boundary(d)) reject("diagram violates the boundary conditions: " + d.str());
  const int H = d.height();
  if (H == 0) return d.order();
  if (H % 2 == 1) {
    for (int i = 1; i <= d.order(); ++i)
      if (d.col(i) == H) return i;
  }
  for (int i = d.order(); i >= 1; --i)
    if (d.col(i) == H) return i;
  return d.order();  // unreachable
}

std::optional<int> left_neighbour_at(const Diagram& d, int i, int s) {
  for (int j = i - 1; j >= 1; --j)
    if (d.col(j) >= s) return j;
  return std::nullopt;
}

std::optional<int> right_neighbour_at(const Diagram& d, int i, int s) {
  for (int j = i + 1; j <= d.order(); ++j)
    if (d.col(j) >= s) return j;
  return std::nullopt;
}

bool is_complete(const Diagram& d) {
  for (int c = 0; c < d.order(); ++c)
    if (domino_companion_ok(d.heights, c, d.heights[static_cast<size_t>(c)])) return false;
  return true;
}

bool is_reduced(const Diagram& d) {
  for (int u = 1; u < d.height(); ++u)
    if (row_pair_removable(d, u)) return false;
  return true;
}

bool is_deplete(const Diagram& d) {
  if (!is_reduced(d)) return false;
  for (int c = 0; c < d.order(); ++c) {
    const int h = d.heights[static_cast<size_t>(c)];
    if (h >= 2 && domino_companion_ok(d.heights, c, h - 2)) return false;
  }
  return !unique_max_column(d).has_value() || d.height() == 0;
}

Move Move::domino(int column, DominoSide side, MoveDir dir) {
  Move m;
  m.kind = MoveKind::Domino;
  m.dir = dir;
  m.column = column;
  m.side = side;
  return m;
}

Move Move::half_domino(int column, MoveDir dir) {
  Move m;
  m.kind = MoveKind::HalfDomino;
  m.dir = dir;
  m.column = column;
  return m;
}

Move Move::row_pair_remove(int low_row) {
  Move m;
  m.kind = MoveKind::RowPair;
  m.dir = MoveDir::Remove;
  m.level = low_row;
  return m;
}

Move Move::row_pair_adjoin(int level, std::vector<int> support) {
  Move m;
  m.kind = MoveKind::RowPair;
  m.dir = MoveDir::Adjoin;
  m.level = level;
  m.support = std::move(support);
  return m;
}

std::string Move::str() const {
  std::ostringstream os;
  os << (dir == MoveDir::Adjoin ? "adjoin " : "remove ");
  switch (kind) {
    case MoveKind::Domino:
      os << (side == DominoSide::LeftEven ? "left-even" : "right-odd") << " domino at column "
         << column;
      break;
    case MoveKind::HalfDomino:
      os << "half-domino at column " << column;
      break;
    case MoveKind::RowPair:
      if (dir == MoveDir::Remove) {
        os << "row pair at rows " << level << "," << level + 1;
      } else {
        os << "row pair above height " << level << " on columns {";
        for (size_t i = 0; i < support.size(); ++i) os << (i ? "," : "") << support[i];
        os << '}';
      }
      break;
  }
  return os.str();
}

std::vector<Move> legal_moves(const Diagram& d) {
  if (!check_boundary(d)) reject("diagram violates the boundary conditions: " + d.str());
  std::vector<Move> out;
  const int n = d.order();
  const int H = d.height();

  // Removals.
  for (int u = 1; u < H; ++u)
    if (row_pair_removable(d, u)) out.push_back(Move::row_pair_remove(u));
  for (int c = 0; c < n; ++c) {
    const int h = d.heights[static_cast<size_t>(c)];
    if (h >= 2 && domino_companion_ok(d.heights, c, h - 2))
      out.push_back(Move::domino(c + 1, (h - 2) % 2 == 0 ? DominoSide::LeftEven : DominoSide::RightOdd,
                                 MoveDir::Remove));
  }
  if (auto um = unique_max_column(d); um && H > 0)
    out.push_back(Move::half_domino(*um, MoveDir::Remove));

  // Adjunctions.
  for (int c = 0; c < n; ++c) {
    const int h = d.heights[static_cast<size_t>(c)];
    if (domino_companion_ok(d.heights, c, h))
      out.push_back(
          Move::domino(c + 1, h % 2 == 0 ? DominoSide::LeftEven : DominoSide::RightOdd, MoveDir::Adjoin));
  }
  out.push_back(Move::half_domino(strongly_extremal_column(d), MoveDir::Adjoin));
  for (int u = 0; u <= H; ++u) {
    std::vector<int> mandatory, optional_cols;
    for (int i = 1; i <= n; ++i) {
      if (d.col(i) >= u + 1)
        mandatory.push_back(i);
      else if (d.col(i) == u)
        optional_cols.push_back(i);
    }
    const int k = static_cast<int>(optional_cols.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> support = mandatory;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) support.push_back(optional_cols[static_cast<size_t>(b)]);
      if (support.empty()) continue;
      std::sort(support.begin(), support.end());
      Diagram result = d;
      for (int i : support) result.heights[static_cast<size_t>(i - 1)] += 2;
      if (check_boundary(result)) out.push_back(Move::row_pair_adjoin(u, std::move(support)));
    }
  }
  return out;
}

Diagram apply_move(const Diagram& d, const Move& m) {
  if (!check_boundary(d)) reject("diagram violates the boundary conditions: " + d.str());
  const int se_before = strongly_extremal_column(d);
  Diagram r = d;
  switch (m.kind) {
    case MoveKind::Domino: {
      if (m.column < 1 || m.column > d.order()) reject("domino column out of range");
      const int h = d.col(m.column);
      if (m.dir == MoveDir::Adjoin) {
        const DominoSide expect = h % 2 == 0 ? DominoSide::LeftEven : DominoSide::RightOdd;
        if (m.side != expect)
          reject("domino parity mismatch: column height " + std::to_string(h) + " requires " +
                 (expect == DominoSide::LeftEven ? "a left even domino" : "a right odd domino"));
        if (!domino_companion_ok(d.heights, m.column - 1, h))
          reject("no companion column of sufficient height for " + m.str());
        r.heights[static_cast<size_t>(m.column - 1)] += 2;
      } else {
        if (h < 2) reject("column too short for domino removal");
        const DominoSide expect = (h - 2) % 2 == 0 ? DominoSide::LeftEven : DominoSide::RightOdd;
        if (m.side != expect) reject("domino parity mismatch on removal");
        if (!domino_companion_ok(d.heights, m.column - 1, h - 2))
          reject("no companion column of sufficient height for " + m.str());
        r.heights[static_cast<size_t>(m.column - 1)] -= 2;
      }
      ensure(r.height() == d.height(), "domino move changed the diagram height");
      break;
    }
    case MoveKind::HalfDomino: {
      if (m.dir == MoveDir::Adjoin) {
        if (m.column != se_before)
          reject("half-domino adjunction must target the strongly extremal column " +
                 std::to_string(se_before));
        r.heights[static_cast<size_t>(m.column - 1)] += 1;
      } else {
        auto um = unique_max_column(d);
        if (!um) reject("half-domino removal needs a unique column of maximal height");
        if (m.column != *um) reject("half-domino removal must target the unique highest column");
        r.heights[static_cast<size_t>(m.column - 1)] -= 1;
      }
      break;
    }
    case MoveKind::RowPair: {
      if (m.dir == MoveDir::Remove) {
        if (!row_pair_removable(d, m.level))
          reject("rows " + std::to_string(m.level) + "," + std::to_string(m.level + 1) +
                 " do not admit the same number of boxes");
        for (auto& v : r.heights)
          if (v >= m.level + 1) v -= 2;
      } else {
        if (m.level < 0 || m.level > d.height()) reject("row insertion level out of range");
        std::vector<bool> in(static_cast<size_t>(d.order()) + 1, false);
        for (int i : m.support) {
          if (i < 1 || i > d.order()) reject("row support column out of range");
          in[static_cast<size_t>(i)] = true;
        }
        bool any = false;
        for (int i = 1; i <= d.order(); ++i) {
          if (d.col(i) >= m.level + 1 && !in[static_cast<size_t>(i)])
            reject("row support must contain every column passing the insertion level");
          if (in[static_cast<size_t>(i)]) {
            if (d.col(i) < m.level) reject("row support column lacks a block to rest on");
            any = true;
          }
        }
        if (!any) reject("row adjunction needs a non-empty support");
        for (int i : m.support) r.heights[static_cast<size_t>(i - 1)] += 2;
        if (!check_boundary(r)) reject("row adjunction would violate the boundary conditions");
      }
      break;
    }
  }
  ensure(check_boundary(r), "move result violates the boundary conditions");
  if (m.kind == MoveKind::HalfDomino)
    ensure(strongly_extremal_column(r) == m.column,
           "half-domino move did not preserve the strongly extremal column");
  else
    ensure(strongly_extremal_column(r) == se_before,
           "move did not preserve the strongly extremal column");
  return r;
}

Diagram complete(const Diagram& d) {
  if (!check_boundary(d)) reject("diagram violates the boundary conditions: " + d.str());
  Diagram r = d;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < r.order(); ++c) {
      const int h = r.heights[static_cast<size_t>(c)];
      if (domino_companion_ok(r.heights, c, h)) {
        r.heights[static_cast<size_t>(c)] += 2;
        changed = true;
        break;
      }
    }
  }
  ensure(r.height() == d.height(), "completion changed the diagram height");
  ensure(strongly_extremal_column(r) == strongly_extremal_column(d),
         "completion moved the strongly extremal column");
  return r;
}

ClassKey canonicalize(const Diagram& d) {
  if (!check_boundary(d)) reject("diagram violates the boundary conditions: " + d.str());
  const int se = strongly_extremal_column(d);
  Diagram r = d;
  for (;;) {
    bool changed = false;
    for (int u = 1; u < r.height(); ++u) {
      if (row_pair_removable(r, u)) {
        for (auto& v : r.heights)
          if (v >= u + 1) v -= 2;
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (int c = 0; c < r.order() && !changed; ++c) {
      const int h = r.heights[static_cast<size_t>(c)];
      if (h >= 2 && domino_companion_ok(r.heights, c, h - 2)) {
        r.heights[static_cast<size_t>(c)] -= 2;
        changed = true;
      }
    }
    if (changed) continue;
    if (auto um = unique_max_column(r)) {
      r.heights[static_cast<size_t>(*um - 1)] -= 1;
      changed = true;
    }
    if (!changed) break;
  }
  ensure(is_deplete(r), "canonical form still admits a removal");
  ensure(check_boundary(r), "canonical form violates the boundary conditions");
  ensure(strongly_extremal_column(r) == se,
         "canonicalization moved the strongly extremal column");
  ClassKey key;
  key.deplete = std::move(r);
  key.strongly_extremal = se;
  key.class_height = key.deplete.height();
  return key;
}

Diagram dual(const Diagram& d) {
  if (!check_boundary(d)) reject("diagram violates the boundary conditions: " + d.str());
  Diagram r = d;
  std::reverse(r.heights.begin(), r.heights.end());
  for (auto& v : r.heights) v += 1;
  ensure(check_boundary(r), "dual violates the boundary conditions");
  return r;
}

Diagram merge(const Diagram& left, const Diagram& right) {
  if (!check_boundary(left) || !check_boundary(right))
    reject("merge requires diagrams satisfying the boundary conditions");
  const int a = left.heights.back();
  const int b = right.heights.front();
  if ((a - b) % 2 != 0)
    reject("merge columns have different parity: " + std::to_string(a) + " vs " + std::to_string(b));
  Diagram l = left, r = right;
  if (a < b) {
    for (auto& v : l.heights) v += b - a;
  } else if (b < a) {
    for (auto& v : r.heights) v += a - b;
  }
  Diagram out = l;
  out.heights.insert(out.heights.end(), r.heights.begin() + 1, r.heights.end());
  ensure(out.order() == left.order() + right.order() - 1, "merge order mismatch");
  ensure(check_boundary(out), "merged diagram violates the boundary conditions");
  return out;
}

}  // namespace catalania
