#include "catalania/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace catalania {

int LabeledGraph::add_vertex(GraphVertex v) {
  vertices.push_back(std::move(v));
  return static_cast<int>(vertices.size()) - 1;
}

void LabeledGraph::add_edge(int u, int v, int label) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= order()) throw std::invalid_argument("edge endpoint out of range");
  if (has_edge(u, v, label)) throw std::invalid_argument("duplicate edge with equal label");
  edges.push_back({u, v, label});
}

bool LabeledGraph::has_edge(int u, int v, int label) const {
  if (u > v) std::swap(u, v);
  for (const GraphEdge& e : edges)
    if (e.u == u && e.v == v && e.label == label) return true;
  return false;
}

std::vector<std::pair<int, int>> LabeledGraph::incident(int v) const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (edges[static_cast<size_t>(i)].u == v) out.push_back({i, edges[static_cast<size_t>(i)].v});
    if (edges[static_cast<size_t>(i)].v == v) out.push_back({i, edges[static_cast<size_t>(i)].u});
  }
  return out;
}

void LabeledGraph::sort_edges() { std::sort(edges.begin(), edges.end()); }

std::vector<int> LabeledGraph::vertices_with_label(int label) const {
  std::vector<int> out;
  for (int i = 0; i < order(); ++i)
    if (vertices[static_cast<size_t>(i)].label == label) out.push_back(i);
  return out;
}

bool LabeledGraph::connected() const {
  if (vertices.empty()) return false;
  std::vector<bool> seen(vertices.size(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [e, w] : incident(v)) {
      (void)e;
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == order();
}

std::string LabeledGraph::subgraph_key() const {
  std::vector<std::string> names(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (!vertices[i].cls) throw std::invalid_argument("subgraph_key needs class-backed vertices");
    names[i] = vertices[i].cls->str();
  }
  std::vector<std::string> vs = names;
  std::sort(vs.begin(), vs.end());
  std::vector<std::string> es;
  for (const GraphEdge& e : edges) {
    std::string a = names[static_cast<size_t>(e.u)];
    std::string b = names[static_cast<size_t>(e.v)];
    if (b < a) std::swap(a, b);
    es.push_back(a + "--" + b + "#" + std::to_string(e.label));
  }
  std::sort(es.begin(), es.end());
  std::ostringstream os;
  for (const auto& s : vs) os << s << ';';
  os << '|';
  for (const auto& s : es) os << s << ';';
  return os.str();
}

namespace {

// Refinement signature: vertex label plus the multiset of incident
// (edge label, neighbour colour) pairs, iterated to a fixpoint with one
// palette shared by both graphs so that colours stay comparable.
std::pair<std::vector<long long>, std::vector<long long>> colour_classes(const LabeledGraph& a,
                                                                         const LabeledGraph& b) {
  std::vector<long long> ca(static_cast<size_t>(a.order())), cb(static_cast<size_t>(b.order()));
  for (int i = 0; i < a.order(); ++i) ca[static_cast<size_t>(i)] = a.vertices[static_cast<size_t>(i)].label;
  for (int i = 0; i < b.order(); ++i) cb[static_cast<size_t>(i)] = b.vertices[static_cast<size_t>(i)].label;
  const int rounds = std::max(a.order(), b.order());
  for (int round = 0; round < rounds; ++round) {
    std::map<std::pair<long long, std::vector<std::pair<int, long long>>>, long long> palette;
    auto signature = [&](const LabeledGraph& g, const std::vector<long long>& colour, int v) {
      std::vector<std::pair<int, long long>> sig;
      for (auto [e, w] : g.incident(v))
        sig.push_back({g.edges[static_cast<size_t>(e)].label, colour[static_cast<size_t>(w)]});
      std::sort(sig.begin(), sig.end());
      return std::make_pair(colour[static_cast<size_t>(v)], std::move(sig));
    };
    for (int v = 0; v < a.order(); ++v) palette.emplace(signature(a, ca, v), 0);
    for (int v = 0; v < b.order(); ++v) palette.emplace(signature(b, cb, v), 0);
    long long next_id = 0;
    for (auto& [key, id] : palette) id = next_id++;
    std::vector<long long> na(ca.size()), nb(cb.size());
    for (int v = 0; v < a.order(); ++v) na[static_cast<size_t>(v)] = palette.at(signature(a, ca, v));
    for (int v = 0; v < b.order(); ++v) nb[static_cast<size_t>(v)] = palette.at(signature(b, cb, v));
    if (na == ca && nb == cb) break;
    ca = std::move(na);
    cb = std::move(nb);
  }
  return {ca, cb};
}

bool extend_isomorphism(const LabeledGraph& a, const LabeledGraph& b,
                        const std::vector<long long>& ca, const std::vector<long long>& cb,
                        std::vector<int>& map_ab, std::vector<bool>& used, int v) {
  const int n = a.order();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[static_cast<size_t>(w)]) continue;
    if (ca[static_cast<size_t>(v)] != cb[static_cast<size_t>(w)]) continue;
    if (a.vertices[static_cast<size_t>(v)].label != b.vertices[static_cast<size_t>(w)].label) continue;
    bool ok = true;
    for (auto [e, u] : a.incident(v)) {
      if (map_ab[static_cast<size_t>(u)] >= 0 &&
          !b.has_edge(w, map_ab[static_cast<size_t>(u)], a.edges[static_cast<size_t>(e)].label)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // Mapped neighbours of w must be matched by edges of v as well.
    for (auto [e, u] : b.incident(w)) {
      int pre = -1;
      for (int x = 0; x < n && pre < 0; ++x)
        if (map_ab[static_cast<size_t>(x)] == u) pre = x;
      if (pre >= 0 && !a.has_edge(v, pre, b.edges[static_cast<size_t>(e)].label)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    map_ab[static_cast<size_t>(v)] = w;
    used[static_cast<size_t>(w)] = true;
    if (extend_isomorphism(a, b, ca, cb, map_ab, used, v + 1)) return true;
    map_ab[static_cast<size_t>(v)] = -1;
    used[static_cast<size_t>(w)] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.order() != b.order() || a.edges.size() != b.edges.size()) return false;
  auto [ca, cb] = colour_classes(a, b);
  std::map<long long, int> ha, hb;
  for (long long c : ca) ha[c]++;
  for (long long c : cb) hb[c]++;
  if (ha != hb) return false;
  std::vector<int> map_ab(static_cast<size_t>(a.order()), -1);
  std::vector<bool> used(static_cast<size_t>(a.order()), false);
  return extend_isomorphism(a, b, ca, cb, map_ab, used, 0);
}

std::string to_dot(const LabeledGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  os << "  node [shape=circle];\n";
  for (int i = 0; i < g.order(); ++i) {
    const GraphVertex& v = g.vertices[static_cast<size_t>(i)];
    os << "  v" << i << " [label=\"" << v.label << '"';
    if (v.cls) os << ", tooltip=\"" << v.cls->str() << '"';
    os << "];\n";
  }
  std::vector<GraphEdge> es = g.edges;
  std::sort(es.begin(), es.end());
  for (const GraphEdge& e : es)
    os << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const LabeledGraph& g) {
  nlohmann::json j;
  j["t"] = g.t;
  j["vertices"] = nlohmann::json::array();
  for (int i = 0; i < g.order(); ++i) {
    const GraphVertex& v = g.vertices[static_cast<size_t>(i)];
    nlohmann::json jv;
    jv["id"] = i;
    jv["label"] = v.label;
    if (v.cls) {
      jv["class"] = {{"order", v.cls->order()},
                     {"heights", v.cls->deplete.heights},
                     {"strongly_extremal", v.cls->strongly_extremal},
                     {"class_height", v.cls->class_height}};
    }
    if (!v.coords.empty()) jv["coords"] = v.coords;
    if (!v.tag.empty()) jv["tag"] = v.tag;
    j["vertices"].push_back(jv);
  }
  std::vector<GraphEdge> es = g.edges;
  std::sort(es.begin(), es.end());
  j["edges"] = nlohmann::json::array();
  for (const GraphEdge& e : es)
    j["edges"].push_back({{"u", e.u}, {"v", e.v}, {"label", e.label}});
  return j.dump(2);
}

}  // namespace catalania
