#include "catalania/enumeration.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

namespace catalania {

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

long long catalan_closed(int n) {
  // C_n = C_{n-1} * 2(2n-1)/(n+1), exact at every step.
  long long c = 1;
  for (int k = 1; k <= n; ++k) c = c * 2 * (2 * k - 1) / (k + 1);
  return c;
}

long long catalan_by_recursion(int n) {
  std::vector<long long> c(static_cast<size_t>(n) + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long long s = 0;
    for (int j = 0; j < m; ++j) s += c[static_cast<size_t>(m - 1 - j)] * c[static_cast<size_t>(j)];
    c[static_cast<size_t>(m)] = s;
  }
  return c[static_cast<size_t>(n)];
}

// rc[m][r] = number of classes of order m and height r.
std::vector<std::vector<long long>> height_count_table(int max_order) {
  std::vector<std::vector<long long>> rc(static_cast<size_t>(max_order) + 1);
  rc[0] = {1};
  auto coef = [&](int m, int r) -> long long {
    if (r < 0) return 0;
    if (m == 0) return r == 0 ? 1 : 0;
    if (r >= m) return 0;
    return rc[static_cast<size_t>(m)][static_cast<size_t>(r)];
  };
  for (int m = 1; m <= max_order; ++m) {
    rc[static_cast<size_t>(m)].assign(static_cast<size_t>(m), 0);
    rc[static_cast<size_t>(m)][0] = 1;
    for (int r = 1; r < m; ++r) {
      long long sum = 0;
      for (int j = 1; j <= m; ++j)
        for (int s = 0; s < r; ++s)
          sum += (coef(j - 1, r) + coef(j - 1, r - 1)) * coef(m - j, s);
      if (r == 1) sum -= 1;
      rc[static_cast<size_t>(m)][static_cast<size_t>(r)] = sum;
    }
  }
  return rc;
}

}  // namespace

const std::vector<int>& ClassTable::at(int j, int r) const {
  static const std::vector<int> kEmpty;
  auto it = index.find({j, r});
  return it == index.end() ? kEmpty : it->second;
}

long long ClassTable::count(int j, int r) const { return static_cast<long long>(at(j, r).size()); }

int ClassTable::find(const ClassKey& key) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), key);
  if (it == classes.end() || !(*it == key)) return -1;
  return static_cast<int>(it - classes.begin());
}

ClassTable enumerate_classes(int order, int max_order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  if (order > max_order)
    throw capacity_error("order " + std::to_string(order) + " exceeds the configured maximum " +
                         std::to_string(max_order));
  const int t = order - 1;

  // Partitioned by first-column height; each partition scans the remaining
  // columns and canonicalizes the valid diagrams it finds.
  auto scan_partition = [order, t](int first) {
    std::set<ClassKey> found;
    std::vector<int> h(static_cast<size_t>(order), 0);
    h[0] = first;
    for (;;) {
      Diagram d{h};
      if (check_boundary(d)) {
        ClassKey key = canonicalize(d);
        ensure(key.class_height <= t, "class representative exceeds height t: " + key.str());
        found.insert(std::move(key));
      }
      int i = 1;
      while (i < order && h[static_cast<size_t>(i)] == t) {
        h[static_cast<size_t>(i)] = 0;
        ++i;
      }
      if (i == order) break;
      ++h[static_cast<size_t>(i)];
    }
    return found;
  };

  std::vector<std::future<std::set<ClassKey>>> parts;
  for (int first = 0; first <= t; ++first)
    parts.push_back(std::async(std::launch::async, scan_partition, first));

  std::set<ClassKey> all;
  for (auto& f : parts) {
    auto part = f.get();
    all.insert(part.begin(), part.end());
  }

  ClassTable tbl;
  tbl.order = order;
  tbl.classes.assign(all.begin(), all.end());
  for (int i = 0; i < static_cast<int>(tbl.classes.size()); ++i) {
    const ClassKey& k = tbl.classes[static_cast<size_t>(i)];
    const int j = k.strongly_extremal;
    const int r = k.class_height;
    ensure(1 <= j && j <= order, "strongly extremal column out of range");
    ensure(0 <= r && r <= t, "class height out of range");
    ensure(j != order || r % 2 == 0, "parity violation: last-column class of odd height");
    ensure(j != 1 || order == 1 || r % 2 == 1, "parity violation: first-column class of even height");
    tbl.index[{j, r}].push_back(i);
  }
  return tbl;
}

long long catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan needs n >= 0");
  if (n > 30) throw capacity_error("catalan numbers beyond n = 30 overflow 64-bit integers");
  const long long closed = catalan_closed(n);
  ensure(closed == catalan_by_recursion(n), "closed form and recursion disagree");
  return closed;
}

std::map<int, long long> count_by_column(const ClassTable& tbl) {
  std::map<int, long long> out;
  for (int j = 1; j <= tbl.order; ++j) out[j] = 0;
  for (const ClassKey& k : tbl.classes) out[k.strongly_extremal] += 1;
  return out;
}

long long CatalanPoly::value_at_one() const {
  long long s = 0;
  for (long long v : coeff) s += v;
  return s;
}

CatalanPoly catalan_polynomial(const ClassTable& tbl) {
  CatalanPoly p;
  p.coeff.assign(static_cast<size_t>(tbl.order), 0);
  for (const ClassKey& k : tbl.classes) p.coeff[static_cast<size_t>(k.class_height)] += 1;
  ensure(p.coeff.front() == 1, "constant coefficient must be 1");
  ensure(p.coeff.back() == 1, "polynomial must be monic of degree t");
  return p;
}

CatalanPoly catalan_polynomial_recursive(int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  auto rc = height_count_table(order);
  CatalanPoly p;
  p.coeff = rc[static_cast<size_t>(order)];
  return p;
}

std::vector<std::vector<long long>> column_height_counts_recursive(int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  auto rc = height_count_table(order);
  auto coef = [&](int m, int r) -> long long {
    if (r < 0 || m < 0) return 0;
    if (m == 0) return r == 0 ? 1 : 0;
    if (r >= m) return 0;
    return rc[static_cast<size_t>(m)][static_cast<size_t>(r)];
  };
  std::vector<std::vector<long long>> counts(static_cast<size_t>(order),
                                             std::vector<long long>(static_cast<size_t>(order), 0));
  // Height 0: only the empty class, strongly extremal column t+1.
  counts[0][static_cast<size_t>(order - 1)] = 1;
  for (int r = 1; r < order; ++r) {
    for (int j = 1; j <= order; ++j) {
      long long v = 0;
      if (j == 1) {
        if (r % 2 == 1) v = coef(order - 1, r - 1) + coef(order - 1, r);
      } else if (j == order) {
        if (r % 2 == 0) v = coef(order - 1, r) + coef(order - 1, r - 1);
      } else if (r % 2 == 0) {
        for (int s = 0; s < r; ++s) v += (coef(j - 1, r) + coef(j - 1, r - 1)) * coef(order - j, s);
      } else {
        for (int s = 0; s < r; ++s) v += coef(j - 1, s) * (coef(order - j, r) + coef(order - j, r - 1));
      }
      counts[static_cast<size_t>(r)][static_cast<size_t>(j - 1)] = v;
    }
  }
  return counts;
}

long long cumulative_count(int order, int r) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  if (r < 0) throw std::invalid_argument("height bound must be non-negative");
  // cum[m][k] = number of order-m classes of height <= k; cum[0][*] = 1.
  std::vector<std::vector<long long>> cum(static_cast<size_t>(order) + 1,
                                          std::vector<long long>(static_cast<size_t>(r) + 1, 0));
  for (int k = 0; k <= r; ++k) cum[0][static_cast<size_t>(k)] = 1;
  for (int m = 1; m <= order; ++m) {
    cum[static_cast<size_t>(m)][0] = 1;
    for (int k = 1; k <= r; ++k) {
      long long s = 0;
      for (int j = 1; j <= m; ++j)
        s += cum[static_cast<size_t>(j - 1)][static_cast<size_t>(k)] *
             cum[static_cast<size_t>(m - j)][static_cast<size_t>(k - 1)];
      cum[static_cast<size_t>(m)][static_cast<size_t>(k)] = s;
    }
  }
  return cum[static_cast<size_t>(order)][static_cast<size_t>(r)];
}

long long planted_tree_count(int nodes, int bound) {
  if (nodes < 1 || bound < 2) throw std::invalid_argument("planted_tree_count domain");
  std::vector<std::vector<long long>> a(static_cast<size_t>(nodes) + 1,
                                        std::vector<long long>(static_cast<size_t>(bound) + 1, 0));
  for (int h = 2; h <= bound; ++h) a[1][static_cast<size_t>(h)] = 1;
  for (int n = 1; n <= nodes; ++n) a[static_cast<size_t>(n)][2] = 1;
  for (int n = 2; n <= nodes; ++n)
    for (int h = 3; h <= bound; ++h) {
      long long s = 0;
      for (int k = 1; k < n; ++k)
        s += a[static_cast<size_t>(k)][static_cast<size_t>(h)] *
             a[static_cast<size_t>(n - k)][static_cast<size_t>(h - 1)];
      a[static_cast<size_t>(n)][static_cast<size_t>(h)] = s;
    }
  return a[static_cast<size_t>(nodes)][static_cast<size_t>(bound)];
}

Diagram minimal_complete_representative(const ClassKey& key) {
  Diagram d = complete(key.deplete);
  ensure(d.height() == key.class_height, "minimal representative height mismatch");
  ensure(is_reduced(d), "minimal complete representative must be reduced");
  return d;
}

Diagram taller_complete_representative(const ClassKey& key) {
  Diagram d = minimal_complete_representative(key);
  d.heights[static_cast<size_t>(key.strongly_extremal - 1)] += 1;
  Diagram r = complete(d);
  ensure(r.height() == key.class_height + 1, "taller representative height mismatch");
  ensure(is_reduced(r), "taller complete representative must be reduced");
  ensure(canonicalize(r) == key, "taller representative left the class");
  return r;
}

std::pair<ClassKey, ClassKey> split_class(const ClassKey& key) {
  const int order = key.order();
  const int j = key.strongly_extremal;
  if (j <= 1 || j >= order)
    throw std::domain_error("split_class needs an interior strongly extremal column");
  const Diagram d = minimal_complete_representative(key);
  const int r = key.class_height;

  Diagram left{std::vector<int>(d.heights.begin(), d.heights.begin() + j)};
  Diagram right{std::vector<int>(d.heights.begin() + (j - 1), d.heights.end())};
  ClassKey kl = canonicalize(left);
  ClassKey kr = canonicalize(right);

  ensure(kl.strongly_extremal == kl.order(), "left part must have its last column strongly extremal");
  ensure(kr.strongly_extremal == 1, "right part must have its first column strongly extremal");
  if (r % 2 == 0) {
    ensure(kl.class_height == r, "left part height must equal the class height for even heights");
    ensure(kr.class_height <= r - 1, "right part height must drop for even heights");
  } else {
    ensure(kl.class_height <= r - 1, "left part height must drop for odd heights");
    ensure(kr.class_height == r, "right part height must equal the class height for odd heights");
  }
  return {kl, kr};
}

ClassKey merge_class(const ClassKey& left, const ClassKey& right) {
  if (left.strongly_extremal != left.order())
    throw std::domain_error("merge_class: left class must have its last column strongly extremal");
  if (right.strongly_extremal != 1)
    throw std::domain_error("merge_class: right class must have its first column strongly extremal");
  Diagram a = minimal_complete_representative(left);
  Diagram b = minimal_complete_representative(right);
  const int ra = left.class_height;
  const int rb = right.class_height;

  if (ra % 2 == 0 && rb % 2 == 1 && rb <= ra - 1) {
    // Raise the right part to even height with a half-domino, then merge at
    // the shared column of height ra.
    b.heights.front() += 1;
  } else if (ra % 2 == 0 && rb % 2 == 1 && ra <= rb - 1) {
    a.heights.back() += 1;
  } else {
    throw std::domain_error("merge_class: incompatible heights " + std::to_string(ra) + ", " +
                            std::to_string(rb));
  }
  Diagram merged = merge(a, b);
  ClassKey out = canonicalize(merged);
  ensure(out.strongly_extremal == left.order(), "merged class strongly extremal column mismatch");
  ensure(out.class_height == std::max(ra, rb), "merged class height mismatch");
  return out;
}

ClassKey extend_class(const ClassKey& key, ExtendSide side) {
  const int q = key.class_height;
  Diagram d = minimal_complete_representative(key);
  int r = 0;
  if (side == ExtendSide::First) {
    if (q % 2 == 1) {
      r = q;
    } else {
      d.heights[static_cast<size_t>(key.strongly_extremal - 1)] += 1;
      d = complete(d);
      r = q + 1;
    }
    d.heights.insert(d.heights.begin(), r);
  } else {
    if (q % 2 == 0 && q >= 2) {
      r = q;
    } else if (q % 2 == 1) {
      d.heights[static_cast<size_t>(key.strongly_extremal - 1)] += 1;
      d = complete(d);
      r = q + 1;
    } else {
      throw std::domain_error("extend_class: last-column extension needs height >= 1");
    }
    d.heights.push_back(r);
  }
  ClassKey out = canonicalize(d);
  ensure(out.class_height == r, "extended class height mismatch");
  ensure(out.strongly_extremal == (side == ExtendSide::First ? 1 : out.order()),
         "extended class strongly extremal column mismatch");
  return out;
}

ClassKey extend_class_inverse(const ClassKey& key, ExtendSide side) {
  const int order = key.order();
  if (order < 2) throw std::domain_error("extend_class_inverse needs order >= 2");
  if (side == ExtendSide::First && key.strongly_extremal != 1)
    throw std::domain_error("extend_class_inverse: class not in the first-column family");
  if (side == ExtendSide::Last && key.strongly_extremal != order)
    throw std::domain_error("extend_class_inverse: class not in the last-column family");
  Diagram d = minimal_complete_representative(key);
  if (side == ExtendSide::First)
    d.heights.erase(d.heights.begin());
  else
    d.heights.pop_back();
  return canonicalize(d);
}

}  // namespace catalania
