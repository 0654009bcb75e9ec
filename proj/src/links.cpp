#include "catalania/links.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

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

}  // namespace

std::vector<int> quasi_extremal_columns(const Tableau& tab) {
  const Diagram& d = tab.diagram;
  if (!is_complete(d)) throw std::invalid_argument("quasi-extremal columns live in complete tableaux");
  const int n = d.order();
  const int H = d.height();
  const int se = strongly_extremal_column(d);
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (i == se) continue;
    const int h = d.col(i);
    bool left_ok = true, right_ok = true;
    for (int j = 1; j < i; ++j) left_ok &= d.col(j) <= h;
    for (int j = i + 1; j <= n; ++j) right_ok &= d.col(j) <= h;
    if (!left_ok && !right_ok) continue;
    ensure(h >= H - 1, "quasi-extremal column below height-1 bound: " + d.str());
    if (h == H - 1) {
      if (H % 2 == 1)
        ensure(i < se, "height-deficient quasi-extremal column must sit left of the strongly "
                       "extremal one for odd heights");
      else
        ensure(i > se, "height-deficient quasi-extremal column must sit right of the strongly "
                       "extremal one for even heights");
    } else {
      if (H % 2 == 1)
        ensure(i > se, "full-height quasi-extremal column must sit right of the strongly extremal "
                       "one for odd heights");
      else
        ensure(i < se, "full-height quasi-extremal column must sit left of the strongly extremal "
                       "one for even heights");
    }
    out.push_back(i);
  }
  return out;
}

LabeledGraph build_graph_of_links(const ClassTable& tbl) {
  LabeledGraph g;
  g.t = tbl.order - 1;
  for (const ClassKey& k : tbl.classes) {
    GraphVertex v;
    v.label = k.strongly_extremal;
    v.cls = k;
    v.form = class_function(k);
    g.add_vertex(std::move(v));
  }

  std::map<std::tuple<int, int, int>, bool> seen;
  for (int vi = 0; vi < g.order(); ++vi) {
    const ClassKey& key = *g.vertices[static_cast<size_t>(vi)].cls;
    const Diagram rep = taller_complete_representative(key);
    const Tableau tab = label_tableau(rep);
    for (int k : quasi_extremal_columns(tab)) {
      Diagram placed = rep;
      placed.heights[static_cast<size_t>(k - 1)] += 1;
      if (!check_boundary(placed)) continue;
      const Tableau ptab = label_tableau(placed);
      auto lab = ptab.label_at(k, placed.col(k));
      ensure(lab.has_value(), "valid block placement produced a blank block on " + placed.str());
      const ClassKey target = canonicalize(placed);
      ensure(target.strongly_extremal == k,
             "block placement landed outside the expected column family");
      const int wi = tbl.find(target);
      ensure(wi >= 0, "block placement left the class table");
      int a = vi, b = wi;
      if (a > b) std::swap(a, b);
      auto [it, inserted] = seen.emplace(std::make_tuple(a, b, *lab), true);
      (void)it;
      if (inserted) g.add_edge(a, b, *lab);
    }
  }
  g.sort_edges();

  // Every edge satisfies the evaluation identity, and conversely every pair
  // of classes satisfying it for some i is an edge.
  std::map<std::tuple<int, int, int>, bool> edge_set;
  for (const GraphEdge& e : g.edges) edge_set.emplace(std::make_tuple(e.u, e.v, e.label), true);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      const LinearForm diff = *g.vertices[static_cast<size_t>(u)].form -
                              *g.vertices[static_cast<size_t>(v)].form;
      for (int i = 1; i <= g.t; ++i) {
        const bool holds = diff.equals(edge_identity(g.t, i,
                                                     g.vertices[static_cast<size_t>(u)].label,
                                                     g.vertices[static_cast<size_t>(v)].label));
        const bool is_edge = edge_set.count({u, v, i}) > 0;
        ensure(holds == is_edge,
               "evaluation identity and block placement disagree on the edge (" +
                   g.vertices[static_cast<size_t>(u)].cls->str() + ", " +
                   g.vertices[static_cast<size_t>(v)].cls->str() + ", " + std::to_string(i) + ")");
      }
    }
  }
  return g;
}

LabeledGraph build_graph_of_links(int order) { return build_graph_of_links(enumerate_classes(order)); }

std::vector<int> pointed_chain(const LabeledGraph& g) {
  const int top = g.t + 1;
  std::vector<std::vector<int>> found;
  std::vector<int> path;
  auto descend = [&](auto&& self, int v, int label) -> void {
    path.push_back(v);
    if (label == 1) {
      found.push_back(path);
    } else {
      for (auto [e, w] : g.incident(v)) {
        if (g.edges[static_cast<size_t>(e)].label == label - 1 &&
            g.vertices[static_cast<size_t>(w)].label == label - 1)
          self(self, w, label - 1);
      }
    }
    path.pop_back();
  };
  for (int v : g.vertices_with_label(top)) descend(descend, v, top);
  if (found.size() != 1)
    throw std::logic_error("expected exactly one pointed chain, found " +
                           std::to_string(found.size()));
  return found.front();
}

bool PropertyReport::all_pass() const {
  for (const Item& i : items)
    if (!i.pass) return false;
  return true;
}

std::string PropertyReport::str() const {
  std::ostringstream os;
  for (const Item& i : items) {
    os << 'P' << (i.property == Property::P1   ? 1
                  : i.property == Property::P2 ? 2
                  : i.property == Property::P3 ? 3
                  : i.property == Property::P5 ? 5
                                               : 6)
       << (i.pass ? " pass" : " FAIL") << (i.witness.empty() ? "" : " (" + i.witness + ")") << '\n';
  }
  return os.str();
}

PropertyReport check_properties(const LabeledGraph& g, const std::vector<Property>& which) {
  PropertyReport rep;
  for (Property p : which) {
    PropertyReport::Item item;
    item.property = p;
    item.pass = true;
    switch (p) {
      case Property::P1:
        for (const GraphEdge& e : g.edges) {
          if (g.vertices[static_cast<size_t>(e.u)].label == g.vertices[static_cast<size_t>(e.v)].label) {
            item.pass = false;
            item.witness = "edge v" + std::to_string(e.u) + "--v" + std::to_string(e.v) +
                           " joins equal labels";
            break;
          }
        }
        break;
      case Property::P2:
        for (int v = 0; v < g.order() && item.pass; ++v) {
          std::map<int, int> count;
          for (auto [e, w] : g.incident(v)) {
            (void)w;
            if (++count[g.edges[static_cast<size_t>(e)].label] > 1) {
              item.pass = false;
              item.witness = "vertex v" + std::to_string(v) + " repeats edge label " +
                             std::to_string(g.edges[static_cast<size_t>(e)].label);
              break;
            }
          }
        }
        break;
      case Property::P3:
        for (const GraphEdge& e : g.edges) {
          const auto& fu = g.vertices[static_cast<size_t>(e.u)].form;
          const auto& fv = g.vertices[static_cast<size_t>(e.v)].form;
          if (!fu || !fv) {
            item.pass = false;
            item.witness = "forms missing";
            break;
          }
          const LinearForm diff = *fu - *fv;
          if (!diff.equals(edge_identity(g.t, e.label, g.vertices[static_cast<size_t>(e.u)].label,
                                         g.vertices[static_cast<size_t>(e.v)].label))) {
            item.pass = false;
            item.witness = "edge v" + std::to_string(e.u) + "--v" + std::to_string(e.v) + " label " +
                           std::to_string(e.label) + " fails the evaluation identity";
            break;
          }
        }
        break;
      case Property::P5:
        if (!g.connected()) {
          item.pass = false;
          item.witness = "graph is disconnected";
        }
        break;
      case Property::P6:
        for (const Triad& tr : triads(g)) {
          if (g.vertices[static_cast<size_t>(tr.a)].label != g.vertices[static_cast<size_t>(tr.d)].label) {
            item.pass = false;
            item.witness = "triad (" + std::to_string(tr.a) + "," + std::to_string(tr.b) + "," +
                           std::to_string(tr.c) + "," + std::to_string(tr.d) + ") has unequal ends";
            break;
          }
        }
        break;
    }
    rep.items.push_back(std::move(item));
  }
  return rep;
}

std::vector<Triad> triads(const LabeledGraph& g) {
  std::vector<Triad> out;
  std::set<std::tuple<int, int, int, int, int, int>> seen;
  for (int ei = 0; ei < static_cast<int>(g.edges.size()); ++ei) {
    const GraphEdge& mid = g.edges[static_cast<size_t>(ei)];
    for (int flip = 0; flip < 2; ++flip) {
      const int b = flip ? mid.v : mid.u;
      const int c = flip ? mid.u : mid.v;
      for (auto [e1, a] : g.incident(b)) {
        if (e1 == ei || a == c) continue;
        const int outer = g.edges[static_cast<size_t>(e1)].label;
        for (auto [e3, d] : g.incident(c)) {
          if (e3 == ei || d == b || d == a) continue;
          if (g.edges[static_cast<size_t>(e3)].label != outer) continue;
          std::tuple<int, int, int, int, int, int> fwd{a, b, c, d, outer, mid.label};
          std::tuple<int, int, int, int, int, int> rev{d, c, b, a, outer, mid.label};
          if (rev < fwd) fwd = rev;
          if (!seen.insert(fwd).second) continue;
          Triad tr;
          tr.a = std::get<0>(fwd);
          tr.b = std::get<1>(fwd);
          tr.c = std::get<2>(fwd);
          tr.d = std::get<3>(fwd);
          tr.outer = outer;
          tr.inner = mid.label;
          out.push_back(tr);
        }
      }
    }
  }
  return out;
}

TriadOrder triad_order(const LabeledGraph& g, const Triad& tr) {
  const auto& ka = g.vertices[static_cast<size_t>(tr.a)].cls;
  const auto& kd = g.vertices[static_cast<size_t>(tr.d)].cls;
  if (!ka || !kd) throw std::invalid_argument("triad_order needs class-backed vertices");
  const bool in_a = partial_order(*ka).contains(tr.outer, tr.inner);
  const bool in_d = partial_order(*kd).contains(tr.outer, tr.inner);
  if (in_a == in_d)
    throw std::logic_error("the relation c" + std::to_string(tr.outer) + "<c" +
                           std::to_string(tr.inner) +
                           " must lie in exactly one of the two end classes");
  TriadOrder out;
  out.low = tr.outer;
  out.high = tr.inner;
  out.defining_end = in_a ? tr.a : tr.d;
  return out;
}

}  // namespace catalania
