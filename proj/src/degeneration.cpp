#include "catalania/degeneration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace catalania {

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

bool CoefficientAssignment::injective() const {
  std::set<long long> s(values.begin(), values.end());
  return s.size() == values.size();
}

bool CoefficientAssignment::all_positive() const {
  return std::all_of(values.begin(), values.end(), [](long long v) { return v > 0; });
}

bool CoefficientAssignment::all_equal() const {
  return std::all_of(values.begin(), values.end(),
                     [&](long long v) { return v == values.front(); });
}

std::string CoefficientAssignment::str() const {
  std::ostringstream os;
  for (int i = 1; i <= t(); ++i) {
    if (i > 1) os << ',';
    os << 'c' << i << '=' << value(i);
  }
  return os.str();
}

CoefficientAssignment CoefficientAssignment::parse(const std::string& text, int t) {
  std::vector<long long> vals(static_cast<size_t>(t), -1);
  size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != 'c')
      throw std::invalid_argument("values parse error at position " + std::to_string(pos) +
                                  ": expected 'c'");
    ++pos;
    size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw std::invalid_argument("values parse error at position " + std::to_string(start) +
                                  ": expected an index");
    const int idx = std::stoi(text.substr(start, pos - start));
    if (idx < 1 || idx > t)
      throw std::invalid_argument("values parse error at position " + std::to_string(start) +
                                  ": index out of range");
    if (pos == text.size() || text[pos] != '=')
      throw std::invalid_argument("values parse error at position " + std::to_string(pos) +
                                  ": expected '='");
    ++pos;
    start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw std::invalid_argument("values parse error at position " + std::to_string(start) +
                                  ": expected a value");
    vals[static_cast<size_t>(idx - 1)] = std::stoll(text.substr(start, pos - start));
    if (pos < text.size()) {
      if (text[pos] != ',')
        throw std::invalid_argument("values parse error at position " + std::to_string(pos) +
                                    ": expected ','");
      ++pos;
    }
  }
  for (int i = 1; i <= t; ++i)
    if (vals[static_cast<size_t>(i - 1)] < 0)
      throw std::invalid_argument("values must assign every index, c" + std::to_string(i) +
                                  " missing");
  return CoefficientAssignment{vals};
}

CoefficientAssignment generic_assignment(const LinearOrderC& order, bool coalesce_top_pair) {
  const int t = order.t();
  CoefficientAssignment a;
  a.values.assign(static_cast<size_t>(t), 0);
  long long v = 1;
  for (int j = 0; j < t; ++j) {
    const int idx = order.perm[static_cast<size_t>(j)];
    if (coalesce_top_pair && j == t - 1) {
      a.values[static_cast<size_t>(idx - 1)] = a.values[static_cast<size_t>(order.perm[static_cast<size_t>(j - 1)] - 1)];
    } else {
      a.values[static_cast<size_t>(idx - 1)] = v;
    }
    v *= 100;
  }
  return a;
}

ZeroDegeneration degenerate_zero(const LinearOrderC& order, int r) {
  const int t = order.t();
  if (t < 1) throw std::invalid_argument("empty order");
  if (order.perm.front() != r)
    throw std::domain_error("c" + std::to_string(r) + " is not the smallest element of " +
                            order.str());
  ZeroDegeneration out;

  const ClassTable tbl = enumerate_classes(t + 1);
  const std::vector<ClassKey> compatible = select_compatible(tbl, order);
  const LinearForm h = LinearForm::driving(t);
  for (const ClassKey& key : compatible) {
    LinearForm f = h + class_function(key);
    std::fill(f.m[static_cast<size_t>(r - 1)].begin(), f.m[static_cast<size_t>(r - 1)].end(), 0LL);
    out.specialized.insert(f.m);
  }

  // Split sub-orders on {1..r-1} and {r+1..t}.
  LinearOrderC low, high;
  for (int idx : order.perm) {
    if (idx < r) low.perm.push_back(idx);
    if (idx > r) high.perm.push_back(idx - r);
  }
  LinearForm h0 = h;
  std::fill(h0.m[static_cast<size_t>(r - 1)].begin(), h0.m[static_cast<size_t>(r - 1)].end(), 0LL);
  const std::vector<ClassKey> left = select_compatible(enumerate_classes(r), low);
  const std::vector<ClassKey> right = select_compatible(enumerate_classes(t - r + 1), high);
  for (const ClassKey& kl : left) {
    const LinearForm fl = shift_embed(class_function(kl), 0, t);
    for (const ClassKey& kr : right) {
      const LinearForm fr = shift_embed(class_function(kr), r, t);
      out.composite.insert((h0 + fl + fr).m);
    }
  }
  ensure(out.composite.size() == left.size() * right.size(),
         "composite functions must be pairwise distinct");

  // Erasing the label-r edges disconnects the subgraph.
  const LabeledGraph g = induced_subgraph(build_graph_of_links(tbl), compatible);
  std::vector<int> comp(static_cast<size_t>(g.order()), -1);
  int ncomp = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (comp[static_cast<size_t>(v)] >= 0) continue;
    std::vector<int> stack{v};
    comp[static_cast<size_t>(v)] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [e, w] : g.incident(u)) {
        if (g.edges[static_cast<size_t>(e)].label == r) continue;
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }
  out.components_after_erasing = ncomp;
  return out;
}

QuotientResult quotient_by_equal_functions(const LabeledGraph& g, const CoefficientAssignment& a) {
  const int n = g.order();
  std::vector<std::vector<long long>> eval(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) {
    const auto& f = g.vertices[static_cast<size_t>(v)].form;
    if (!f) throw std::invalid_argument("quotient needs forms attached");
    eval[static_cast<size_t>(v)] = f->evaluate(a.values);
  }
  std::map<std::vector<long long>, int> group_of_eval;
  std::vector<int> group(static_cast<size_t>(n), -1);
  QuotientResult out;
  out.graph.t = g.t;
  for (int v = 0; v < n; ++v) {
    auto [it, inserted] = group_of_eval.emplace(eval[static_cast<size_t>(v)],
                                                static_cast<int>(group_of_eval.size()));
    group[static_cast<size_t>(v)] = it->second;
    if (inserted) {
      GraphVertex q;
      q.label = g.vertices[static_cast<size_t>(v)].label;
      q.evaluation = eval[static_cast<size_t>(v)];
      out.graph.add_vertex(std::move(q));
    } else if (out.graph.vertices[static_cast<size_t>(it->second)].label !=
               g.vertices[static_cast<size_t>(v)].label) {
      throw std::logic_error("identified vertices carry different labels: " +
                             std::to_string(out.graph.vertices[static_cast<size_t>(it->second)].label) +
                             " vs " + std::to_string(g.vertices[static_cast<size_t>(v)].label));
    }
  }
  // Representative label: the smallest index of the same value.
  auto rewrite = [&](int label) {
    for (int i = 1; i <= a.t(); ++i)
      if (a.value(i) == a.value(label)) return i;
    return label;
  };
  for (const GraphEdge& e : g.edges) {
    int qu = group[static_cast<size_t>(e.u)];
    int qv = group[static_cast<size_t>(e.v)];
    if (qu == qv) continue;
    if (qu > qv) std::swap(qu, qv);
    const int lab = rewrite(e.label);
    out.merged_labels[{qu, qv, lab}].insert(e.label);
    if (!out.graph.has_edge(qu, qv, lab)) out.graph.add_edge(qu, qv, lab);
  }
  out.graph.sort_edges();
  return out;
}

namespace {

// Three relabelled copies of the doubling graph on the order with the two
// top indices removed, glued along triangles on the former label-r vertices.
LabeledGraph three_copy_limit(const LinearOrderC& inner_order, int r, int t) {
  LabeledGraph inner;
  if (inner_order.t() == 0) {
    inner.t = 0;
    GraphVertex v;
    v.label = 1;
    inner.add_vertex(std::move(v));
  } else {
    inner = build_sgraph(inner_order);
  }
  LabeledGraph g;
  g.t = t;
  const int half = inner.order();
  for (int copy = 0; copy < 3; ++copy) {
    for (const GraphVertex& v : inner.vertices) {
      GraphVertex w;
      w.label = v.label;
      if (w.label >= r + 1) w.label += 2;
      if (v.label == r) w.label = r + copy;
      w.tag = "copy" + std::to_string(copy + 1);
      g.add_vertex(std::move(w));
    }
    for (const GraphEdge& e : inner.edges) {
      int lab = e.label;
      if (lab >= r) lab += 2;
      g.add_edge(copy * half + e.u, copy * half + e.v, lab);
    }
  }
  for (int v = 0; v < half; ++v) {
    if (inner.vertices[static_cast<size_t>(v)].label != r) continue;
    g.add_edge(v, half + v, r);
    g.add_edge(v, 2 * half + v, r);
    g.add_edge(half + v, 2 * half + v, r);
  }
  g.sort_edges();
  return g;
}

}  // namespace

Coalescence coalesce_pair(const LinearOrderC& order) {
  const int t = order.t();
  if (t < 2) throw std::domain_error("coalescing needs at least two coefficients");
  const int a = order.perm[static_cast<size_t>(t - 2)];
  const int b = order.perm[static_cast<size_t>(t - 1)];
  if (std::abs(a - b) != 1)
    throw std::domain_error("the two largest coefficients must have adjacent indices, got c" +
                            std::to_string(a) + ", c" + std::to_string(b));
  Coalescence out;
  out.r = std::min(a, b);
  out.order_1 = order;
  out.order_2 = order;
  std::swap(out.order_2.perm[static_cast<size_t>(t - 2)],
            out.order_2.perm[static_cast<size_t>(t - 1)]);
  out.assignment = generic_assignment(order, /*coalesce_top_pair=*/true);

  LinearOrderC inner;
  for (int i = 0; i < t - 2; ++i) {
    int idx = order.perm[static_cast<size_t>(i)];
    inner.perm.push_back(idx > out.r + 1 ? idx - 2 : idx);
  }
  out.g_c = three_copy_limit(inner, out.r, t);

  const ClassTable tbl = enumerate_classes(t + 1);
  const LabeledGraph links = build_graph_of_links(tbl);
  const LabeledGraph g1 = induced_subgraph(links, select_compatible(tbl, out.order_1));
  const LabeledGraph g2 = induced_subgraph(links, select_compatible(tbl, out.order_2));
  out.quotient_1 = quotient_by_equal_functions(g1, out.assignment);
  out.quotient_2 = quotient_by_equal_functions(g2, out.assignment);

  // Quotients of the two orders define the same functions and the same
  // labelled graph, which the three-copy construction reproduces.
  std::map<std::vector<long long>, int> lookup;
  for (int v = 0; v < out.quotient_2.graph.order(); ++v)
    lookup.emplace(out.quotient_2.graph.vertices[static_cast<size_t>(v)].evaluation, v);
  ensure(out.quotient_1.graph.order() == out.quotient_2.graph.order(),
         "the two quotients have different sizes");
  std::vector<int> map12(static_cast<size_t>(out.quotient_1.graph.order()), -1);
  for (int v = 0; v < out.quotient_1.graph.order(); ++v) {
    auto it = lookup.find(out.quotient_1.graph.vertices[static_cast<size_t>(v)].evaluation);
    ensure(it != lookup.end(), "quotient function sets differ");
    ensure(out.quotient_1.graph.vertices[static_cast<size_t>(v)].label ==
               out.quotient_2.graph.vertices[static_cast<size_t>(it->second)].label,
           "quotient labels differ on a shared function");
    map12[static_cast<size_t>(v)] = it->second;
  }
  ensure(out.quotient_1.graph.edges.size() == out.quotient_2.graph.edges.size(),
         "quotient edge counts differ");
  for (const GraphEdge& e : out.quotient_1.graph.edges)
    ensure(out.quotient_2.graph.has_edge(map12[static_cast<size_t>(e.u)],
                                         map12[static_cast<size_t>(e.v)], e.label),
           "quotient edges differ");
  ensure(isomorphic(out.quotient_1.graph, out.g_c),
         "the quotient does not match the three-copy construction");
  return out;
}

bool separation_check(const LabeledGraph& g_c, const CoefficientAssignment& a) {
  std::set<std::vector<long long>> seen;
  for (int v = 0; v < g_c.order(); ++v) {
    const GraphVertex& vert = g_c.vertices[static_cast<size_t>(v)];
    std::vector<long long> val;
    if (!vert.evaluation.empty())
      val = vert.evaluation;
    else if (vert.form)
      val = vert.form->evaluate(a.values);
    else
      throw std::invalid_argument("separation_check needs forms or evaluations");
    if (!seen.insert(val).second) return false;
  }
  return true;
}

std::vector<int> all_equal_limit_chain(const LabeledGraph& quotient) {
  const int n = quotient.order();
  ensure(n == quotient.t + 1, "the all-equal limit has one vertex per label");
  std::vector<int> order_ids(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order_ids[static_cast<size_t>(i)] = i;
  // Total order under the r-difference comparison, minimal function first.
  std::sort(order_ids.begin(), order_ids.end(), [&](int x, int y) {
    std::vector<long long> diff = quotient.vertices[static_cast<size_t>(x)].evaluation;
    const auto& ey = quotient.vertices[static_cast<size_t>(y)].evaluation;
    for (size_t i = 0; i < diff.size(); ++i) diff[i] -= ey[i];
    auto coords = to_r_difference_basis(diff);
    ensure(coords.has_value(), "limit functions must differ by r-difference combinations");
    bool pos = false, neg = false;
    for (long long v : *coords) {
      pos |= v > 0;
      neg |= v < 0;
    }
    ensure(pos != neg || (!pos && !neg), "limit functions must be comparable");
    ensure(pos || neg, "limit functions must be distinct");
    return neg;
  });
  for (int i = 0; i < n; ++i)
    ensure(quotient.vertices[static_cast<size_t>(order_ids[static_cast<size_t>(i)])].label ==
               quotient.t + 1 - i,
           "the limit chain must run through the labels t+1 down to 1");
  for (int i = 0; i + 1 < n; ++i) {
    bool adjacent = false;
    for (int lab = 1; lab <= quotient.t && !adjacent; ++lab)
      adjacent = quotient.has_edge(order_ids[static_cast<size_t>(i)],
                                   order_ids[static_cast<size_t>(i + 1)], lab);
    ensure(adjacent, "consecutive limit functions must stay adjacent");
  }
  return order_ids;
}

}  // namespace catalania
