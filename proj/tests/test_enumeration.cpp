#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "catalania/enumeration.hpp"

using namespace catalania;

namespace {

Diagram D(std::vector<int> h) { return Diagram{std::move(h)}; }

}  // namespace

TEST_CASE("class counts are the Catalan numbers") {
  const long long expect[] = {0, 1, 2, 5, 14, 42, 132};
  for (int order = 1; order <= 6; ++order)
    CHECK(static_cast<long long>(enumerate_classes(order).classes.size()) ==
          expect[static_cast<size_t>(order)]);
  CHECK_THROWS_AS(enumerate_classes(8), capacity_error);
  CHECK(enumerate_classes(8, 8).classes.size() == 1430);
}

TEST_CASE("the five classes of order 3") {
  const ClassTable tbl = enumerate_classes(3);
  std::set<Diagram> got;
  for (const ClassKey& k : tbl.classes) got.insert(k.deplete);
  CHECK(got == std::set<Diagram>{D({0, 0, 0}), D({0, 1, 1}), D({1, 0, 1}), D({1, 1, 1}),
                                 D({2, 1, 2})});
  CHECK(tbl.count(3, 0) == 1);  // the empty class
  CHECK(tbl.count(2, 1) == 1);
  CHECK(tbl.count(1, 1) == 2);
  CHECK(tbl.count(3, 2) == 1);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(4) == 14);
  CHECK(catalan(7) == 429);  // closed form and recursion agree internally
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
  CHECK_THROWS_AS(catalan(31), capacity_error);
}

TEST_CASE("counts by strongly extremal column") {
  const auto c3 = count_by_column(enumerate_classes(3));
  CHECK(c3.at(1) == 2);
  CHECK(c3.at(2) == 1);
  CHECK(c3.at(3) == 2);
  const auto c2 = count_by_column(enumerate_classes(2));
  CHECK(c2.at(1) == 1);
  CHECK(c2.at(2) == 1);
  const auto c5 = count_by_column(enumerate_classes(5));
  const long long expect[] = {14, 5, 4, 5, 14};
  long long total = 0;
  for (int j = 1; j <= 5; ++j) {
    CHECK(c5.at(j) == expect[j - 1]);
    total += c5.at(j);
  }
  CHECK(total == 42);
}

TEST_CASE("height polynomials") {
  CHECK(catalan_polynomial(enumerate_classes(1)).coeff == std::vector<long long>{1});
  CHECK(catalan_polynomial(enumerate_classes(2)).coeff == std::vector<long long>{1, 1});
  const CatalanPoly p4 = catalan_polynomial(enumerate_classes(4));
  CHECK(p4.value_at_one() == 14);
  CHECK(p4.coeff.front() == 1);
  CHECK(p4.coeff.back() == 1);
  for (int order = 2; order <= 6; ++order)
    CHECK(catalan_polynomial_recursive(order) == catalan_polynomial(enumerate_classes(order)));
}

TEST_CASE("per-column height counts from the split recursions") {
  for (int order = 2; order <= 6; ++order) {
    const ClassTable tbl = enumerate_classes(order);
    const auto counts = column_height_counts_recursive(order);
    for (int r = 0; r < order; ++r)
      for (int j = 1; j <= order; ++j)
        CHECK(counts[static_cast<size_t>(r)][static_cast<size_t>(j - 1)] == tbl.count(j, r));
    // No odd-height class in the last column, none of height one in particular.
    CHECK(counts[1][static_cast<size_t>(order - 1)] == 0);
  }
}

TEST_CASE("cumulative counts") {
  for (int order = 1; order <= 6; ++order) {
    CHECK(cumulative_count(order, 0) == 1);
    CHECK(cumulative_count(order, order - 1) == catalan(order));
    for (int r = 0; r < order; ++r)
      CHECK(cumulative_count(order, r) == planted_tree_count(order + 1, r + 2));
  }
  CHECK(cumulative_count(4, 1) == 8);  // enumeration at order 4, height <= 1
  const ClassTable tbl = enumerate_classes(4);
  long long low = 0;
  for (const ClassKey& k : tbl.classes) low += k.class_height <= 1;
  CHECK(low == 8);
}

TEST_CASE("no canonical form reaches height t+1") {
  for (int order = 2; order <= 5; ++order) {
    const int t = order - 1;
    std::set<ClassKey> found;
    std::vector<int> h(static_cast<size_t>(order), 0);
    for (;;) {
      Diagram d{h};
      if (check_boundary(d)) {
        const ClassKey k = canonicalize(d);
        CHECK(k.class_height <= t);
        found.insert(k);
      }
      int i = 0;
      while (i < order && h[static_cast<size_t>(i)] == t + 1) h[static_cast<size_t>(i)] = 0, ++i;
      if (i == order) break;
      ++h[static_cast<size_t>(i)];
    }
    // Scanning one height higher finds no new classes.
    CHECK(found.size() == enumerate_classes(order).classes.size());
  }
}

TEST_CASE("splitting at the strongly extremal column") {
  // The parts of the split of [(4,3,2,1,4,2,3)] are the classes of its two
  // column blocks at the strongly extremal column; the right block (4,2,3)
  // is complete but not reduced.
  const ClassKey key = canonicalize(D({4, 3, 2, 1, 4, 2, 3}));
  CHECK(key.strongly_extremal == 5);
  const auto [left, right] = split_class(key);
  CHECK(left.order() == 5);
  CHECK(right.order() == 3);
  CHECK(right == canonicalize(D({4, 2, 3})));
  CHECK(is_complete(D({4, 2, 3})));
  CHECK_FALSE(is_reduced(D({4, 2, 3})));
  CHECK(merge_class(left, right) == key);

  CHECK_THROWS_AS(split_class(canonicalize(D({0, 0, 0}))), std::domain_error);
  CHECK_THROWS_AS(split_class(canonicalize(D({1, 0, 1}))), std::domain_error);
}

TEST_CASE("split and merge are mutually inverse") {
  for (int order = 3; order <= 6; ++order) {
    const ClassTable tbl = enumerate_classes(order);
    for (const ClassKey& key : tbl.classes) {
      const int j = key.strongly_extremal;
      if (j == 1 || j == order) continue;
      const auto [left, right] = split_class(key);
      CHECK(merge_class(left, right) == key);
    }
    // Cardinalities match the product over the split heights.
    for (int j = 2; j < order; ++j) {
      const ClassTable lt = enumerate_classes(j);
      const ClassTable rt = enumerate_classes(order - j + 1);
      for (int r = 1; r < order; ++r) {
        long long expect = 0;
        if (r % 2 == 0) {
          long long rights = 0;
          for (int s = 0; s < r; ++s) rights += rt.count(1, s);
          expect = lt.count(j, r) * rights;
        } else {
          long long lefts = 0;
          for (int s = 0; s < r; ++s) lefts += lt.count(j, s);
          expect = lefts * rt.count(1, r);
        }
        CHECK(tbl.count(j, r) == expect);
      }
    }
  }
}

TEST_CASE("extending by a full column") {
  const ClassKey key = canonicalize(D({2, 1, 3, 2, 3}));
  CHECK(key.deplete == D({2, 1, 2, 0, 1}));
  CHECK(key.class_height == 2);
  const ClassKey extended = extend_class(key, ExtendSide::First);
  CHECK(extended == canonicalize(D({3, 2, 1, 3, 2, 3})));
  CHECK(extended.strongly_extremal == 1);
  CHECK(extended.class_height == 3);
  CHECK(extend_class_inverse(extended, ExtendSide::First) == key);
}

TEST_CASE("column extensions biject with the smaller orders") {
  for (int order = 2; order <= 6; ++order) {
    const ClassTable big = enumerate_classes(order);
    const ClassTable small = enumerate_classes(order - 1);
    // Surjectivity: stripping the outer column then extending recovers the class.
    for (const ClassKey& key : big.classes) {
      if (key.strongly_extremal == 1) {
        CHECK(extend_class(extend_class_inverse(key, ExtendSide::First), ExtendSide::First) == key);
      } else if (key.strongly_extremal == order && key.class_height >= 2) {
        CHECK(extend_class(extend_class_inverse(key, ExtendSide::Last), ExtendSide::Last) == key);
      }
    }
    // Injectivity and disjointness: distinct sources give distinct targets.
    std::set<ClassKey> first_targets;
    for (const ClassKey& key : small.classes) {
      CHECK(first_targets.insert(extend_class(key, ExtendSide::First)).second);
      if (key.class_height >= 1)
        CHECK(extend_class(key, ExtendSide::Last).strongly_extremal == order);
    }
    long long first_family = 0;
    for (const ClassKey& key : big.classes) first_family += key.strongly_extremal == 1;
    CHECK(static_cast<long long>(first_targets.size()) == first_family);
    CHECK(first_family == catalan(order - 1));
  }
}

TEST_CASE("table cache indexing") {
  const ClassTable tbl = enumerate_classes(4);
  for (const auto& [jr, ids] : tbl.index)
    for (int i : ids) {
      CHECK(tbl.classes[static_cast<size_t>(i)].strongly_extremal == jr.first);
      CHECK(tbl.classes[static_cast<size_t>(i)].class_height == jr.second);
    }
  CHECK(tbl.find(canonicalize(D({2, 1, 0, 2}))) >= 0);
  CHECK(tbl.find(canonicalize(D({0, 0, 0, 0}))) >= 0);
}
