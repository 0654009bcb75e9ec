#include "catalania/sgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace catalania {

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

LinearForm edge_identity(int t, int i, int lu, int lv) {
  LinearForm f = LinearForm::zero(t);
  f.add_r_difference(i, lu, lv, +1);
  return f;
}

LabeledGraph build_recursive(const std::vector<int>& perm) {
  const int t = static_cast<int>(perm.size());
  LabeledGraph g;
  g.t = t;
  if (t == 1) {
    GraphVertex top;
    top.label = 2;
    top.coords = "0";
    GraphVertex bottom;
    bottom.label = 1;
    bottom.coords = "1";
    g.add_vertex(top);
    g.add_vertex(bottom);
    g.add_edge(0, 1, 1);
    return g;
  }
  const int s = perm.back();
  std::vector<int> sub(perm.begin(), perm.end() - 1);
  for (int& e : sub)
    if (e > s) --e;
  const LabeledGraph inner = build_recursive(sub);
  const int half = inner.order();

  auto lift = [s](int l) { return l >= s ? l + 1 : l; };
  for (const GraphVertex& v : inner.vertices) {
    GraphVertex w;
    w.label = lift(v.label);
    w.coords = v.coords + '0';
    g.add_vertex(std::move(w));
  }
  for (const GraphVertex& v : inner.vertices) {
    GraphVertex w;
    w.label = lift(v.label);
    if (w.label == s + 1) w.label = s;
    w.coords = v.coords + '1';
    g.add_vertex(std::move(w));
  }
  for (const GraphEdge& e : inner.edges) {
    g.add_edge(e.u, e.v, lift(e.label));
    g.add_edge(e.u + half, e.v + half, lift(e.label));
  }
  for (int i = 0; i < half; ++i)
    if (g.vertices[static_cast<size_t>(i)].label == s + 1) g.add_edge(i, i + half, s);
  return g;
}

// Assigns forms from the anchor (given the zero form) along edges; the
// propagation must close consistently around every cycle.
void propagate_forms(LabeledGraph& g, int anchor) {
  std::vector<std::optional<LinearForm>> forms(static_cast<size_t>(g.order()));
  forms[static_cast<size_t>(anchor)] = LinearForm::zero(g.t);
  std::queue<int> q;
  q.push(anchor);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [e, v] : g.incident(u)) {
      const GraphEdge& edge = g.edges[static_cast<size_t>(e)];
      const LinearForm step = edge_identity(
          g.t, edge.label, g.vertices[static_cast<size_t>(u)].label,
          g.vertices[static_cast<size_t>(v)].label);
      LinearForm fv = *forms[static_cast<size_t>(u)] - step;
      if (forms[static_cast<size_t>(v)]) {
        ensure(forms[static_cast<size_t>(v)]->equals(fv),
               "form propagation is inconsistent around a cycle");
      } else {
        forms[static_cast<size_t>(v)] = std::move(fv);
        q.push(v);
      }
    }
  }
  for (int i = 0; i < g.order(); ++i) {
    ensure(forms[static_cast<size_t>(i)].has_value(), "form propagation missed a vertex");
    g.vertices[static_cast<size_t>(i)].form = std::move(*forms[static_cast<size_t>(i)]);
  }
}

}  // namespace

std::vector<int> LinearOrderC::ranks() const {
  std::vector<int> rank(perm.size() + 1, 0);
  for (int i = 0; i < t(); ++i) rank[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i + 1;
  return rank;
}

std::string LinearOrderC::str() const {
  std::ostringstream os;
  for (int i = 0; i < t(); ++i) {
    if (i) os << '<';
    os << perm[static_cast<size_t>(i)];
  }
  return os.str();
}

LinearOrderC LinearOrderC::parse(const std::string& text) {
  LinearOrderC order;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw std::invalid_argument("chain parse error at position " + std::to_string(start) +
                                  ": expected an index");
    order.perm.push_back(std::stoi(text.substr(start, pos - start)));
    if (pos == text.size()) break;
    if (text[pos] != '<')
      throw std::invalid_argument("chain parse error at position " + std::to_string(pos) +
                                  ": expected '<'");
    ++pos;
    if (pos == text.size())
      throw std::invalid_argument("chain parse error at position " + std::to_string(pos) +
                                  ": trailing '<'");
  }
  if (order.perm.empty()) throw std::invalid_argument("chain parse error at position 0: empty chain");
  std::vector<int> sorted = order.perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < order.t(); ++i)
    if (sorted[static_cast<size_t>(i)] != i + 1)
      throw std::invalid_argument("chain must list each index 1..t exactly once");
  return order;
}

std::vector<LinearOrderC> LinearOrderC::all(int t) {
  std::vector<int> perm(static_cast<size_t>(t));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<LinearOrderC> out;
  do {
    out.push_back(LinearOrderC{perm});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

LabeledGraph build_sgraph(const LinearOrderC& order) {
  const int t = order.t();
  if (t < 1) throw std::invalid_argument("order needs at least one coefficient");
  std::vector<int> sorted = order.perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < t; ++i)
    if (sorted[static_cast<size_t>(i)] != i + 1)
      throw std::invalid_argument("not a permutation of 1..t");
  LabeledGraph g = build_recursive(order.perm);
  ensure(g.order() == (1 << t), "doubling construction must yield 2^t vertices");
  int anchor = -1;
  for (int i = 0; i < g.order(); ++i)
    if (g.vertices[static_cast<size_t>(i)].coords == std::string(static_cast<size_t>(t), '0'))
      anchor = i;
  ensure(anchor >= 0, "missing all-zeros corner");
  ensure(g.vertices[static_cast<size_t>(anchor)].label == t + 1,
         "the all-zeros corner must carry label t+1");
  propagate_forms(g, anchor);
  return g;
}

std::vector<ClassKey> select_compatible(const ClassTable& tbl, const LinearOrderC& order) {
  const std::vector<int> rank = order.ranks();
  ensure(tbl.order == order.t() + 1, "class table order and coefficient count mismatch");
  std::vector<ClassKey> out;
  for (const ClassKey& key : tbl.classes) {
    bool ok = true;
    for (auto [a, b] : partial_order(key).pairs) {
      if (rank[static_cast<size_t>(a)] > rank[static_cast<size_t>(b)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(key);
  }
  return out;
}

LabeledGraph induced_subgraph(const LabeledGraph& links, const std::vector<ClassKey>& vertices) {
  std::map<std::string, int> pick;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i)
    pick.emplace(vertices[static_cast<size_t>(i)].str(), -1);
  LabeledGraph g;
  g.t = links.t;
  std::vector<int> remap(static_cast<size_t>(links.order()), -1);
  for (int i = 0; i < links.order(); ++i) {
    const GraphVertex& v = links.vertices[static_cast<size_t>(i)];
    if (!v.cls) throw std::invalid_argument("induced_subgraph needs class-backed vertices");
    auto it = pick.find(v.cls->str());
    if (it != pick.end()) {
      remap[static_cast<size_t>(i)] = g.add_vertex(v);
      it->second = remap[static_cast<size_t>(i)];
    }
  }
  for (const auto& [name, idx] : pick)
    ensure(idx >= 0, "induced_subgraph: class not present in the ambient graph: " + name);
  for (const GraphEdge& e : links.edges) {
    int u = remap[static_cast<size_t>(e.u)];
    int v = remap[static_cast<size_t>(e.v)];
    if (u >= 0 && v >= 0) g.add_edge(u, v, e.label);
  }
  g.sort_edges();
  return g;
}

std::vector<int> match_by_forms(const LabeledGraph& abstract, const LabeledGraph& induced) {
  ensure(abstract.order() == induced.order(), "form matching: vertex counts differ");
  ensure(abstract.edges.size() == induced.edges.size(), "form matching: edge counts differ");
  std::vector<int> map_ai(static_cast<size_t>(abstract.order()), -1);
  for (int i = 0; i < abstract.order(); ++i) {
    const auto& fa = abstract.vertices[static_cast<size_t>(i)].form;
    ensure(fa.has_value(), "form matching: abstract vertex lacks a form");
    int found = -1;
    for (int j = 0; j < induced.order(); ++j) {
      const auto& fb = induced.vertices[static_cast<size_t>(j)].form;
      ensure(fb.has_value(), "form matching: induced vertex lacks a form");
      if (fa->equals(*fb)) {
        ensure(found < 0, "form matching: duplicate forms in the induced subgraph");
        found = j;
      }
    }
    ensure(found >= 0, "form matching: no class carries the abstract form " + fa->str());
    ensure(abstract.vertices[static_cast<size_t>(i)].label ==
               induced.vertices[static_cast<size_t>(found)].label,
           "form matching: labels disagree");
    map_ai[static_cast<size_t>(i)] = found;
  }
  std::set<int> hit(map_ai.begin(), map_ai.end());
  ensure(static_cast<int>(hit.size()) == abstract.order(), "form matching: map not bijective");
  for (const GraphEdge& e : abstract.edges)
    ensure(induced.has_edge(map_ai[static_cast<size_t>(e.u)], map_ai[static_cast<size_t>(e.v)], e.label),
           "form matching: abstract edge missing from the induced subgraph");
  return map_ai;
}

std::vector<OrderedPathWitness> ordered_paths(const LabeledGraph& g, const LinearOrderC& order,
                                              int v, int k) {
  const std::vector<int> rank = order.ranks();
  std::vector<OrderedPathWitness> out;
  std::vector<int> path_vertices{v};
  std::vector<int> path_labels;
  std::vector<bool> visited(static_cast<size_t>(g.order()), false);
  visited[static_cast<size_t>(v)] = true;
  auto dfs = [&](auto&& self, int cur, int last_rank) -> void {
    if (g.vertices[static_cast<size_t>(cur)].label == k) {
      OrderedPathWitness w;
      w.target = cur;
      w.vertices = path_vertices;
      w.edge_labels = path_labels;
      out.push_back(std::move(w));
    }
    for (auto [e, next] : g.incident(cur)) {
      const int lab = g.edges[static_cast<size_t>(e)].label;
      if (rank[static_cast<size_t>(lab)] <= last_rank) continue;
      if (visited[static_cast<size_t>(next)]) continue;
      visited[static_cast<size_t>(next)] = true;
      path_vertices.push_back(next);
      path_labels.push_back(lab);
      self(self, next, rank[static_cast<size_t>(lab)]);
      path_labels.pop_back();
      path_vertices.pop_back();
      visited[static_cast<size_t>(next)] = false;
    }
  };
  dfs(dfs, v, 0);
  return out;
}

SinkForest orient_to_sinks(const LabeledGraph& g, const LinearOrderC& order) {
  const int top = order.t() + 1;
  SinkForest forest;
  forest.roots = g.vertices_with_label(top);
  std::map<std::pair<int, int>, bool> arcs;
  for (int v = 0; v < g.order(); ++v) {
    auto ws = ordered_paths(g, order, v, top);
    ensure(ws.size() == 1, "expected a unique ordered path to the sinks from vertex " +
                               std::to_string(v) + ", found " + std::to_string(ws.size()));
    const auto& w = ws.front();
    for (size_t i = 0; i + 1 < w.vertices.size(); ++i) {
      int a = w.vertices[i];
      int b = w.vertices[i + 1];
      ensure(arcs.find({b, a}) == arcs.end(), "conflicting orientations on a shared edge");
      arcs.emplace(std::make_pair(a, b), true);
    }
  }
  for (const auto& [arc, dummy] : arcs) {
    (void)dummy;
    forest.arcs.push_back(arc);
  }
  // A forest pointing at the roots: out-degree one off the roots, zero on them.
  std::map<int, int> outdeg;
  for (auto [a, b] : forest.arcs) {
    (void)b;
    outdeg[a]++;
  }
  for (int v = 0; v < g.order(); ++v) {
    const bool is_root = g.vertices[static_cast<size_t>(v)].label == top;
    ensure(outdeg[v] == (is_root ? 0 : 1), "sink orientation is not a forest");
  }
  return forest;
}

std::vector<ComponentSplit> split_components(const LabeledGraph& g, const LinearOrderC& order) {
  const int s = order.top();
  const int n = g.order();
  std::vector<int> comp(static_cast<size_t>(n), -1);
  int ncomp = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[static_cast<size_t>(v)] >= 0) continue;
    std::vector<int> stack{v};
    comp[static_cast<size_t>(v)] = ncomp;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [e, w] : g.incident(u)) {
        if (g.edges[static_cast<size_t>(e)].label == s) continue;
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = ncomp;
          stack.push_back(w);
        }
      }
    }
    ++ncomp;
  }

  LinearForm sdiff = LinearForm::zero(g.t);
  sdiff.add_r_difference(s, s, s + 1, +1);
  std::vector<ComponentSplit> out(static_cast<size_t>(ncomp));
  for (int v = 0; v < n; ++v) out[static_cast<size_t>(comp[static_cast<size_t>(v)])].vertices.push_back(v);
  for (ComponentSplit& c : out) {
    ensure(!c.vertices.empty(), "empty component");
    const auto& f0 = g.vertices[static_cast<size_t>(c.vertices.front())].form;
    ensure(f0.has_value(), "split_components needs forms attached");
    c.top_coefficient_row = f0->row(s);
    for (int v : c.vertices) {
      const auto& f = g.vertices[static_cast<size_t>(v)].form;
      ensure(f.has_value() && f->row(s) == c.top_coefficient_row,
             "the top coefficient row must be constant on each component");
    }
    const bool zero = std::all_of(c.top_coefficient_row.begin(), c.top_coefficient_row.end(),
                                  [](long long x) { return x == 0; });
    c.zero_row = zero;
    if (!zero) ensure(c.top_coefficient_row == sdiff.row(s), "top coefficient row must be r^s-r^{s+1}");

    // Vertex labels inside, together with the labels across the deleted
    // edges, exhaust 1..t+1.
    std::set<int> labels;
    for (int v : c.vertices) labels.insert(g.vertices[static_cast<size_t>(v)].label);
    for (int v : c.vertices)
      for (auto [e, w] : g.incident(v))
        if (g.edges[static_cast<size_t>(e)].label == s)
          labels.insert(g.vertices[static_cast<size_t>(w)].label);
    ensure(static_cast<int>(labels.size()) == g.t + 1 && *labels.begin() == 1 &&
               *labels.rbegin() == g.t + 1,
           "component labels with their across-link labels must exhaust 1..t+1");
  }
  return out;
}

SGraphReport is_S_graph(const LabeledGraph& g, const LinearOrderC& order) {
  SGraphReport rep;
  rep.properties = check_properties(
      g, {Property::P1, Property::P2, Property::P3, Property::P5, Property::P6});
  rep.p7 = g.order() > 0;
  if (!rep.p7) rep.p7_witness = "empty graph";
  for (int v = 0; v < g.order() && rep.p7; ++v) {
    for (int k = 1; k <= g.t + 1; ++k) {
      if (ordered_paths(g, order, v, k).empty()) {
        rep.p7 = false;
        rep.p7_witness =
            "no ordered path from v" + std::to_string(v) + " to a vertex of label " +
            std::to_string(k);
        break;
      }
    }
  }
  return rep;
}

std::vector<LabeledGraph> unique_ssubgraph_search(const LinearOrderC& order, int max_t,
                                                  bool prune_by_chain) {
  const int t = order.t();
  if (t > max_t)
    throw capacity_error("subgraph search is guarded to t <= " + std::to_string(max_t));
  const LabeledGraph links = build_graph_of_links(t + 1);
  const int ne = static_cast<int>(links.edges.size());
  ensure(ne < 25, "edge count too large for exhaustive search");

  unsigned chain_mask = 0;
  if (prune_by_chain) {
    std::vector<int> chain = pointed_chain(links);
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      for (int e = 0; e < ne; ++e) {
        const GraphEdge& ge = links.edges[static_cast<size_t>(e)];
        int a = chain[i], b = chain[i + 1];
        if (a > b) std::swap(a, b);
        if (ge.u == a && ge.v == b &&
            ge.label == links.vertices[static_cast<size_t>(chain[i + 1])].label)
          chain_mask |= 1u << e;
      }
    }
  }

  std::vector<LabeledGraph> found;
  for (unsigned mask = 1; mask < (1u << ne); ++mask) {
    if ((mask & chain_mask) != chain_mask) continue;
    std::vector<int> remap(static_cast<size_t>(links.order()), -1);
    LabeledGraph h;
    h.t = t;
    for (int e = 0; e < ne; ++e) {
      if (!(mask & (1u << e))) continue;
      const GraphEdge& ge = links.edges[static_cast<size_t>(e)];
      for (int v : {ge.u, ge.v})
        if (remap[static_cast<size_t>(v)] < 0)
          remap[static_cast<size_t>(v)] = h.add_vertex(links.vertices[static_cast<size_t>(v)]);
      h.add_edge(remap[static_cast<size_t>(ge.u)], remap[static_cast<size_t>(ge.v)], ge.label);
    }
    if (!h.connected()) continue;
    SGraphReport rep = is_S_graph(h, order);
    if (rep.pass()) {
      h.sort_edges();
      found.push_back(std::move(h));
    }
  }
  return found;
}

namespace {

LabeledGraph octagon_figure() {
  // Eight vertices in two squares, the doubling graph of c2<c1<c3 and of
  // c2<c3<c1.
  LabeledGraph g;
  g.t = 3;
  const int labels[] = {2, 4, 1, 4, 2, 3, 1, 3};  // a b c d A B C D
  for (int l : labels) {
    GraphVertex v;
    v.label = l;
    g.add_vertex(std::move(v));
  }
  const int a = 0, b = 1, c = 2, d = 3, A = 4, B = 5, C = 6, D = 7;
  g.add_edge(a, b, 2);
  g.add_edge(a, c, 1);
  g.add_edge(d, c, 2);
  g.add_edge(A, B, 2);
  g.add_edge(A, C, 1);
  g.add_edge(D, C, 2);
  g.add_edge(b, B, 3);
  g.add_edge(d, D, 3);
  return g;
}

}  // namespace

LabeledGraph fixture_pendant_octagon() {
  LabeledGraph g = octagon_figure();
  const int A = 4;
  GraphVertex v1;
  v1.label = 4;
  v1.tag = "pendant";
  const int Ap = g.add_vertex(std::move(v1));
  GraphVertex v2;
  v2.label = 3;
  v2.tag = "pendant";
  const int App = g.add_vertex(std::move(v2));
  g.add_edge(A, Ap, 3);
  g.add_edge(Ap, App, 2);
  propagate_forms(g, 0);
  g.sort_edges();
  return g;
}

LabeledGraph fixture_two_octagons() {
  LabeledGraph g;
  g.t = 3;
  // a b c d A B C D e f p q r s P Q R S
  const int labels[] = {2, 3, 4, 1, 1, 4, 3, 2, 2, 3, 4, 1, 2, 2, 4, 1, 3, 3};
  for (int l : labels) {
    GraphVertex v;
    v.label = l;
    g.add_vertex(std::move(v));
  }
  const int a = 0, b = 1, c = 2, d = 3, A = 4, B = 5, C = 6, D = 7, e = 8, f = 9, p = 10, q = 11,
            r = 12, s = 13, P = 14, Q = 15, R = 16, S = 17;
  g.vertices[static_cast<size_t>(e)].tag = "designated";
  g.add_edge(a, b, 1);
  g.add_edge(a, c, 2);
  g.add_edge(d, c, 3);
  g.add_edge(A, B, 3);
  g.add_edge(A, C, 2);
  g.add_edge(D, C, 1);
  g.add_edge(b, B, 2);
  g.add_edge(d, D, 2);
  g.add_edge(A, e, 1);
  g.add_edge(e, f, 2);
  g.add_edge(p, f, 3);
  g.add_edge(p, r, 2);
  g.add_edge(p, q, 1);
  g.add_edge(s, q, 2);
  g.add_edge(P, R, 2);
  g.add_edge(P, Q, 1);
  g.add_edge(S, Q, 2);
  g.add_edge(r, R, 3);
  g.add_edge(s, S, 3);
  propagate_forms(g, 0);
  g.sort_edges();
  return g;
}

}  // namespace catalania
