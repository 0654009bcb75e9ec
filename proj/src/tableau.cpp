#include "catalania/tableau.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "catalania/enumeration.hpp"

namespace catalania {

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

std::vector<int> columns_reaching(const Diagram& d, int j) {
  std::vector<int> cols;
  for (int i = 1; i <= d.order(); ++i)
    if (d.col(i) >= j) cols.push_back(i);
  return cols;
}

}  // namespace

std::optional<int> Tableau::label_at(int i, int j) const {
  if (!has_block(i, j)) return std::nullopt;
  return labels[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

std::string Tableau::ascii() const {
  std::ostringstream os;
  const int H = diagram.height();
  for (int j = H; j >= 1; --j) {
    for (int i = 1; i <= diagram.order(); ++i) {
      if (!has_block(i, j)) {
        os << "   ";
      } else if (auto l = label_at(i, j)) {
        os << '[' << *l << ']';
      } else {
        os << "[ ]";
      }
    }
    os << '\n';
  }
  for (int i = 1; i <= diagram.order(); ++i) os << "---";
  os << '\n';
  return os.str();
}

Tableau label_tableau(const Diagram& d) {
  if (!check_boundary(d)) throw std::invalid_argument("tableau needs a valid diagram: " + d.str());
  Tableau t;
  t.diagram = d;
  t.labels.resize(static_cast<size_t>(d.order()));
  for (int i = 1; i <= d.order(); ++i)
    t.labels[static_cast<size_t>(i - 1)].assign(static_cast<size_t>(d.col(i)), std::nullopt);

  const int H = d.height();
  for (int j = 1; j <= H; ++j) {
    std::vector<int> cols = columns_reaching(d, j);
    if (cols.empty()) break;
    const int blank = j % 2 == 1 ? cols.back() : cols.front();
    for (int i : cols) {
      if (i == blank) continue;
      int label = 0;
      if (j == 1) {
        label = i;
      } else if (j % 2 == 0) {
        // Even row: inherit from the left neighbour one level down.
        auto k = left_neighbour_at(d, i, j - 1);
        ensure(k.has_value(), "labelled block lacks a left neighbour below");
        auto below = t.label_at(*k, j - 1);
        ensure(below.has_value(), "label source is blank");
        label = *below;
      } else {
        auto k = right_neighbour_at(d, i, j - 1);
        ensure(k.has_value(), "labelled block lacks a right neighbour below");
        auto below = t.label_at(*k, j - 1);
        ensure(below.has_value(), "label source is blank");
        label = *below;
      }
      t.labels[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = label;
    }
  }
  return t;
}

bool well_numbered(const Tableau& t) {
  const Diagram& d = t.diagram;
  const int n = d.order();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= d.col(i); ++j) {
      auto l = t.label_at(i, j);
      if (j % 2 == 1) {
        if (i == n || !l) {
          if (l) return false;  // a labelled block where a blank is expected
          continue;
        }
        if (*l != i) return false;
      } else {
        if (i == 1 || !l) {
          if (l) return false;
          continue;
        }
        if (*l != i - 1) return false;
      }
    }
  }
  return true;
}

std::string PartialOrder::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [a, b] : pairs) {
    if (!first) os << ", ";
    first = false;
    os << 'c' << a << "<=c" << b;
  }
  os << '}';
  return os.str();
}

PartialOrder tableau_partial_order(const Tableau& t) {
  const Diagram& d = t.diagram;
  // Phantom zeroth row: b(i,0) = i-1 for i >= 2, blank at i = 1.
  auto label_with_phantom = [&](int i, int j) -> std::optional<int> {
    if (j == 0) return i >= 2 ? std::optional<int>(i - 1) : std::nullopt;
    return t.label_at(i, j);
  };
  PartialOrder po;
  auto add = [&](int a, std::optional<int> b) {
    if (b && a != *b) po.pairs.insert({a, *b});
  };
  for (int i = 1; i <= d.order(); ++i) {
    for (int j = 1; j <= d.col(i); ++j) {
      auto lab = t.label_at(i, j);
      if (!lab) continue;
      const int b = *lab;
      if (j % 2 == 1) {
        // Labelled, hence not rightmost at its level: a right neighbour exists.
        auto k = right_neighbour_at(d, i, j);
        ensure(k.has_value(), "labelled block of an odd row lacks a right neighbour");
        for (int l = i + 1; l <= *k; ++l) add(b, label_with_phantom(l, j - 1));
        if (j >= 2 && t.has_block(i, j - 1) && !t.label_at(i, j - 1))
          add(b, label_with_phantom(i, j - 2));
      } else {
        auto k = left_neighbour_at(d, i, j);
        ensure(k.has_value(), "labelled block of an even row lacks a left neighbour");
        for (int l = *k; l <= i - 1; ++l) add(b, label_with_phantom(l, j - 1));
        if (t.has_block(i, j - 1) && !t.label_at(i, j - 1)) add(b, label_with_phantom(i, j - 2));
      }
    }
  }
  return po;
}

PartialOrder partial_order(const ClassKey& key) {
  PartialOrder a = tableau_partial_order(label_tableau(minimal_complete_representative(key)));
  PartialOrder b = tableau_partial_order(label_tableau(taller_complete_representative(key)));
  ensure(a == b, "the two reduced complete tableaux of " + key.str() +
                     " determine different partial orders: " + a.str() + " vs " + b.str());
  return a;
}

}  // namespace catalania
