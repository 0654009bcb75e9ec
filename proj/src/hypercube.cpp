#include "catalania/hypercube.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace catalania {

namespace {

void ensure(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

int hamming(const std::string& a, const std::string& b) {
  int d = 0;
  for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

bool coords_geq(const std::string& a, const std::string& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

}  // namespace

int HypercubeEmbedding::vertex_at(const std::string& coords) const {
  for (int i = 0; i < graph.order(); ++i)
    if (graph.vertices[static_cast<size_t>(i)].coords == coords) return i;
  return -1;
}

HypercubeEmbedding embed(const LinearOrderC& order) {
  HypercubeEmbedding emb{order, build_sgraph(order)};
  const LabeledGraph& g = emb.graph;
  const int t = order.t();
  const int n = g.order();

  // Vertices at Hamming distance one are adjacent exactly when their labels
  // differ; the adjacent pairs exhaust the edge set.
  int cube_edges = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const auto& cu = g.vertices[static_cast<size_t>(u)].coords;
      const auto& cv = g.vertices[static_cast<size_t>(v)].coords;
      if (hamming(cu, cv) != 1) continue;
      ++cube_edges;
      const bool labels_differ =
          g.vertices[static_cast<size_t>(u)].label != g.vertices[static_cast<size_t>(v)].label;
      bool adjacent = false;
      for (int lab = 1; lab <= t && !adjacent; ++lab) adjacent = g.has_edge(u, v, lab);
      ensure(adjacent == labels_differ,
             "hypercube edge rule violated between " + cu + " and " + cv);
    }
  }
  ensure(static_cast<int>(g.edges.size()) <= cube_edges, "edges outside the hypercube skeleton");
  for (const GraphEdge& e : g.edges)
    ensure(hamming(g.vertices[static_cast<size_t>(e.u)].coords,
                   g.vertices[static_cast<size_t>(e.v)].coords) == 1,
           "every edge must join coordinates at Hamming distance one");

  // The two chain ends sit at complementary corners.
  const int vh = emb.vertex_at(std::string(static_cast<size_t>(t), '0'));
  const int vhstar = emb.vertex_at(std::string(static_cast<size_t>(t), '1'));
  ensure(vh >= 0 && vhstar >= 0, "missing hypercube corners");
  ensure(g.vertices[static_cast<size_t>(vh)].label == t + 1, "all-zeros corner must have label t+1");
  ensure(g.vertices[static_cast<size_t>(vhstar)].label == 1, "all-ones corner must have label 1");

  // Coordinates grow along the function order, taken at well-spread values
  // so that only robust comparabilities remain.
  std::vector<long long> values(static_cast<size_t>(t));
  const std::vector<int> rank = order.ranks();
  for (int i = 1; i <= t; ++i) {
    long long v = 1;
    for (int j = 1; j < rank[static_cast<size_t>(i)]; ++j) v *= 100;
    values[static_cast<size_t>(i - 1)] = v;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      const FormOrder cmp = compare(*g.vertices[static_cast<size_t>(u)].form,
                                    *g.vertices[static_cast<size_t>(v)].form, values);
      if (cmp == FormOrder::Greater)
        ensure(coords_geq(g.vertices[static_cast<size_t>(u)].coords,
                          g.vertices[static_cast<size_t>(v)].coords),
               "coordinates must dominate along the function order");
    }
  }
  return emb;
}

std::vector<int> canonical_sequence(const LinearOrderC& order) {
  const auto& k = order.perm;
  const int t = order.t();
  std::vector<int> seq(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < t; ++j)
      if (k[static_cast<size_t>(j)] < k[static_cast<size_t>(i)]) ++smaller_later;
    seq[static_cast<size_t>(i)] = k[static_cast<size_t>(i)] - smaller_later;
  }
  for (int i = 0; i < t; ++i)
    ensure(1 <= seq[static_cast<size_t>(i)] && seq[static_cast<size_t>(i)] <= i + 1,
           "canonical sequence entry out of range");
  return seq;
}

LinearOrderC invert_canonical_sequence(const std::vector<int>& seq) {
  std::vector<int> k;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    const int ni = seq[static_cast<size_t>(i)];
    if (ni < 1 || ni > i + 1) throw std::invalid_argument("not a canonical sequence");
    for (int& e : k)
      if (e >= ni) ++e;
    k.push_back(ni);
  }
  return LinearOrderC{k};
}

LabelMultiplicities multiplicities_of_sequence(const std::vector<int>& seq) {
  LabelMultiplicities m;
  m.vertex_power = {0, 0};
  m.edge_power = {0};
  for (size_t step = 1; step < seq.size(); ++step) {
    const int n = seq[step];
    std::vector<int> vp, ep;
    const auto& pv = m.vertex_power;
    const auto& pe = m.edge_power;
    for (int k = 1; k < n; ++k) vp.push_back(pv[static_cast<size_t>(k - 1)] + 1);
    vp.push_back(pv[static_cast<size_t>(n - 1)]);
    vp.push_back(pv[static_cast<size_t>(n - 1)]);
    for (int k = n + 1; k <= static_cast<int>(pv.size()); ++k)
      vp.push_back(pv[static_cast<size_t>(k - 1)] + 1);

    // The new label's edges pair off its vertices, so its power copies the
    // vertex power; every other label doubles.
    for (int k = 1; k < n; ++k) ep.push_back(pe[static_cast<size_t>(k - 1)] + 1);
    ep.push_back(pv[static_cast<size_t>(n - 1)]);
    for (int k = n; k <= static_cast<int>(pe.size()); ++k)
      ep.push_back(pe[static_cast<size_t>(k - 1)] + 1);

    m.vertex_power = std::move(vp);
    m.edge_power = std::move(ep);
  }
  return m;
}

LabelMultiplicities multiplicities(const LinearOrderC& order) {
  return multiplicities_of_sequence(canonical_sequence(order));
}

LabelMultiplicities direct_multiplicities(const LabeledGraph& g) {
  LabelMultiplicities m;
  auto power_of = [](long long count, const std::string& what) {
    ensure(count > 0 && (count & (count - 1)) == 0, what + " count is not a power of two");
    int p = 0;
    while ((1LL << p) < count) ++p;
    return p;
  };
  for (int lab = 1; lab <= g.t + 1; ++lab)
    m.vertex_power.push_back(
        power_of(static_cast<long long>(g.vertices_with_label(lab).size()), "vertex"));
  for (int lab = 1; lab <= g.t; ++lab) {
    long long c = 0;
    for (const GraphEdge& e : g.edges) c += e.label == lab;
    m.edge_power.push_back(power_of(c, "edge"));
  }
  return m;
}

std::vector<int> increasing_normal_form(std::vector<int> seq) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      if (seq[i] > seq[i + 1]) {
        const int lo = seq[i + 1];
        const int hi = seq[i];
        seq[i] = lo;
        seq[i + 1] = hi + 1;
        changed = true;
        break;
      }
    }
  }
  for (size_t i = 0; i < seq.size(); ++i)
    ensure(seq[i] <= static_cast<int>(i) + 1, "normal form entry exceeds its position");
  return seq;
}

std::vector<ClassifyBlock> classify(int t) {
  if (t < 1 || t > 5) throw capacity_error("classify is guarded to 1 <= t <= 5");
  const ClassTable tbl = enumerate_classes(t + 1);
  const LabeledGraph links = build_graph_of_links(tbl);

  std::map<std::string, ClassifyBlock> by_subgraph;
  std::map<std::vector<int>, std::string> fibre_check;
  for (const LinearOrderC& order : LinearOrderC::all(t)) {
    const LabeledGraph sub = induced_subgraph(links, select_compatible(tbl, order));
    const std::string key = sub.subgraph_key();
    const std::vector<int> nf = increasing_normal_form(canonical_sequence(order));

    auto [it, inserted] = by_subgraph.emplace(key, ClassifyBlock{});
    if (inserted) {
      it->second.normal_form = nf;
      it->second.mult = multiplicities(order);
      it->second.subgraph = key;
    } else {
      ensure(it->second.normal_form == nf, "normal-form fibres must refine the graph partition");
      ensure(it->second.mult == multiplicities(order),
             "label multiplicities must agree within a block");
    }
    it->second.orders.push_back(order);

    auto [fit, finserted] = fibre_check.emplace(nf, key);
    if (!finserted)
      ensure(fit->second == key, "orders with one normal form must share their labelled graph");
  }

  std::vector<ClassifyBlock> out;
  for (auto& [key, block] : by_subgraph) out.push_back(std::move(block));
  std::sort(out.begin(), out.end(),
            [](const ClassifyBlock& a, const ClassifyBlock& b) { return a.normal_form < b.normal_form; });

  // Distinct normal forms carry distinct multiplicities.
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = i + 1; j < out.size(); ++j)
      ensure(!(out[i].mult == out[j].mult), "distinct blocks share label multiplicities");
  return out;
}

}  // namespace catalania
