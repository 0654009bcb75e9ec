#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catalania/enumeration.hpp"
#include "catalania/oracle.hpp"
#include "catalania/tableau.hpp"

using namespace catalania;

namespace {

Diagram D(std::vector<int> h) { return Diagram{std::move(h)}; }

PartialOrder PO(std::initializer_list<std::pair<int, int>> pairs) {
  PartialOrder po;
  for (auto p : pairs) po.pairs.insert(p);
  return po;
}

}  // namespace

TEST_CASE("labelling the deplete example") {
  const Tableau t = label_tableau(D({2, 1, 0, 2}));
  CHECK(t.label_at(1, 1) == 1);
  CHECK(t.label_at(2, 1) == 2);
  CHECK_FALSE(t.label_at(4, 1).has_value());  // rightmost block of an odd row
  CHECK_FALSE(t.label_at(1, 2).has_value());  // leftmost block of an even row
  CHECK(t.label_at(4, 2) == 2);
  CHECK_FALSE(t.label_at(3, 1).has_value());  // no block at all
  CHECK_FALSE(well_numbered(t));
}

TEST_CASE("labelling the completed example") {
  const Tableau t = label_tableau(D({2, 1, 2, 2}));
  CHECK(t.label_at(3, 1) == 3);
  CHECK_FALSE(t.label_at(1, 2).has_value());
  CHECK(t.label_at(3, 2) == 2);
  CHECK(t.label_at(4, 2) == 3);
  CHECK(well_numbered(t));
  CHECK(t.ascii().find('2') != std::string::npos);
}

TEST_CASE("complete tableaux are well-numbered") {
  for (int order = 1; order <= 5; ++order) {
    std::vector<int> h(static_cast<size_t>(order), 0);
    for (;;) {
      Diagram d{h};
      if (check_boundary(d) && is_complete(d)) CHECK(well_numbered(label_tableau(d)));
      int i = 0;
      while (i < order && h[static_cast<size_t>(i)] == 5) h[static_cast<size_t>(i)] = 0, ++i;
      if (i == order) break;
      ++h[static_cast<size_t>(i)];
    }
  }
}

TEST_CASE("inequalities of the printed tableaux") {
  // The deplete tableau sees both relations, the complete one only the first.
  CHECK(tableau_partial_order(label_tableau(D({2, 1, 0, 2}))) == PO({{2, 1}, {2, 3}}));
  CHECK(tableau_partial_order(label_tableau(D({2, 1, 2, 2}))) == PO({{2, 1}}));
  CHECK(partial_order(canonicalize(D({2, 1, 0, 2}))) == PO({{2, 1}}));
}

TEST_CASE("assigned orders at order 3") {
  CHECK(partial_order(canonicalize(D({0, 0, 0}))).pairs.empty());
  CHECK(partial_order(canonicalize(D({0, 1, 1}))).pairs.empty());
  CHECK(partial_order(canonicalize(D({1, 1, 1}))).pairs.empty());
  CHECK(partial_order(canonicalize(D({1, 0, 1}))) == PO({{1, 2}}));
  CHECK(partial_order(canonicalize(D({2, 1, 2}))) == PO({{2, 1}}));
}

TEST_CASE("all complete representatives determine the class order") {
  for (int order = 2; order <= 4; ++order) {
    const EquivalenceAtlas atlas = build_equivalence_atlas(order, (order - 1) + kOracleHeightSlack);
    for (const auto& members : atlas.groups()) {
      const PartialOrder expect = partial_order(canonicalize(members.front()));
      for (const Diagram& d : members)
        if (is_complete(d)) CHECK(tableau_partial_order(label_tableau(d)) == expect);
    }
  }
}

TEST_CASE("stored pairs close without strict cycles") {
  for (int order = 2; order <= 6; ++order) {
    for (const ClassKey& key : enumerate_classes(order).classes) {
      const PartialOrder po = partial_order(key);
      // Transitive closure on indices 1..t.
      const int t = order - 1;
      std::vector<std::vector<bool>> le(static_cast<size_t>(t) + 1,
                                        std::vector<bool>(static_cast<size_t>(t) + 1, false));
      for (auto [a, b] : po.pairs) le[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
      for (int k = 1; k <= t; ++k)
        for (int a = 1; a <= t; ++a)
          for (int b = 1; b <= t; ++b)
            if (le[static_cast<size_t>(a)][static_cast<size_t>(k)] &&
                le[static_cast<size_t>(k)][static_cast<size_t>(b)])
              le[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
      for (int a = 1; a <= t; ++a)
        for (int b = a + 1; b <= t; ++b) {
          const bool cycle = le[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
                             le[static_cast<size_t>(b)][static_cast<size_t>(a)];
          CHECK_FALSE(cycle);
        }
    }
  }
}

TEST_CASE("equivalent tableaux may disagree before completion") {
  // The deplete representative sees an extra relation; the class order is
  // the one its complete representatives share.
  const PartialOrder deplete = tableau_partial_order(label_tableau(D({2, 1, 0, 2})));
  const PartialOrder assigned = partial_order(canonicalize(D({2, 1, 0, 2})));
  CHECK(deplete.pairs.size() == 2);
  CHECK(assigned.pairs.size() == 1);
  CHECK(deplete.contains(2, 1));
  CHECK(assigned.contains(2, 1));
}
