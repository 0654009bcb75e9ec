#include "catalania/oracle.hpp"

#include <numeric>
#include <stdexcept>

namespace catalania {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(a)] = b;
  }
};

}  // namespace

int EquivalenceAtlas::component(const Diagram& d) const {
  auto it = index.find(d);
  if (it == index.end()) throw std::invalid_argument("diagram outside the atlas universe: " + d.str());
  return component_of[static_cast<size_t>(it->second)];
}

std::vector<std::vector<Diagram>> EquivalenceAtlas::groups() const {
  std::vector<std::vector<Diagram>> g(static_cast<size_t>(component_count));
  for (size_t i = 0; i < universe.size(); ++i)
    g[static_cast<size_t>(component_of[i])].push_back(universe[i]);
  return g;
}

EquivalenceAtlas build_equivalence_atlas(int order, int cap) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  EquivalenceAtlas atlas;
  atlas.order = order;
  atlas.cap = cap;

  std::vector<int> h(static_cast<size_t>(order), 0);
  for (;;) {
    Diagram d{h};
    if (check_boundary(d)) atlas.universe.push_back(d);
    int i = 0;
    while (i < order && h[static_cast<size_t>(i)] == cap) {
      h[static_cast<size_t>(i)] = 0;
      ++i;
    }
    if (i == order) break;
    ++h[static_cast<size_t>(i)];
  }
  for (size_t i = 0; i < atlas.universe.size(); ++i)
    atlas.index.emplace(atlas.universe[i], static_cast<int>(i));

  UnionFind uf(atlas.universe.size());
  for (size_t i = 0; i < atlas.universe.size(); ++i) {
    const Diagram& d = atlas.universe[i];
    for (const Move& m : legal_moves(d)) {
      Diagram r = apply_move(d, m);
      if (r.height() > cap) continue;
      auto it = atlas.index.find(r);
      if (it == atlas.index.end())
        throw std::logic_error("move produced a diagram outside the universe: " + r.str());
      uf.unite(static_cast<int>(i), it->second);
    }
  }

  atlas.component_of.assign(atlas.universe.size(), -1);
  int next = 0;
  std::map<int, int> renumber;
  for (size_t i = 0; i < atlas.universe.size(); ++i) {
    int root = uf.find(static_cast<int>(i));
    auto [it, inserted] = renumber.emplace(root, next);
    if (inserted) ++next;
    atlas.component_of[i] = it->second;
  }
  atlas.component_count = next;
  return atlas;
}

}  // namespace catalania
