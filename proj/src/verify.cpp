#include "catalania/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "catalania/degeneration.hpp"
#include "catalania/figures.hpp"
#include "catalania/hypercube.hpp"
#include "catalania/oracle.hpp"

namespace catalania {

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& witness) {
  if (!ok) throw CheckFailure(witness);
}

CheckResult run_check(const std::string& id, const std::string& description,
                      const std::function<void()>& body) {
  CheckResult r;
  r.id = id;
  r.description = description;
  const auto start = std::chrono::steady_clock::now();
  try {
    body();
    r.pass = true;
  } catch (const std::exception& e) {
    r.pass = false;
    r.witness = e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

int capped(int stated, int max_t) { return max_t > 0 ? std::min(stated, max_t) : stated; }

const long long kCatalan[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430};

// ---- criterion bodies -----------------------------------------------------

void check_counts(int max_t) {
  const int top = max_t > 0 ? std::min(7, max_t + 1) : 7;
  const auto start = std::chrono::steady_clock::now();
  for (int order = 1; order <= top; ++order) {
    const ClassTable tbl = enumerate_classes(order);
    require(static_cast<long long>(tbl.classes.size()) == kCatalan[order],
            "order " + std::to_string(order) + ": found " + std::to_string(tbl.classes.size()) +
                " classes, expected " + std::to_string(kCatalan[order]));
    require(catalan(order) == kCatalan[order], "catalan() mismatch at " + std::to_string(order));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(secs < 60.0, "enumeration took " + std::to_string(secs) + " s, budget is 60 s");
}

void check_columns(int max_t) {
  const int top = max_t > 0 ? std::min(7, max_t + 1) : 7;
  for (int order = 1; order <= top; ++order) {
    const ClassTable tbl = enumerate_classes(order);
    const auto counts = count_by_column(tbl);
    for (int j = 1; j <= order; ++j) {
      const long long expect = catalan(j - 1) * catalan(order - j);
      require(counts.at(j) == expect, "order " + std::to_string(order) + ", column " +
                                          std::to_string(j) + ": " + std::to_string(counts.at(j)) +
                                          " classes, product formula gives " +
                                          std::to_string(expect));
    }
  }
}

void check_polynomials(int max_t) {
  const int top = max_t > 0 ? std::min(7, max_t + 1) : 7;
  for (int order = 2; order <= top; ++order) {
    const ClassTable tbl = enumerate_classes(order);
    const CatalanPoly from_classes = catalan_polynomial(tbl);
    const CatalanPoly from_recursion = catalan_polynomial_recursive(order);
    require(from_classes == from_recursion,
            "order " + std::to_string(order) + ": enumerated and recursive coefficients differ");
    require(from_classes.value_at_one() == catalan(order),
            "order " + std::to_string(order) + ": coefficients do not sum to the Catalan number");
    long long running = 0;
    for (int r = 0; r < order; ++r) {
      running += from_classes.at(r);
      require(cumulative_count(order, r) == running,
              "order " + std::to_string(order) + ", height " + std::to_string(r) +
                  ": cumulative recursion disagrees with the coefficients");
      require(planted_tree_count(order + 1, r + 2) == running,
              "order " + std::to_string(order) + ", height " + std::to_string(r) +
                  ": planted-tree recursion disagrees");
    }
    const auto per_column = column_height_counts_recursive(order);
    for (int r = 0; r < order; ++r)
      for (int j = 1; j <= order; ++j)
        require(per_column[static_cast<size_t>(r)][static_cast<size_t>(j - 1)] ==
                    tbl.count(j, r),
                "order " + std::to_string(order) + ": split recursion disagrees at (j=" +
                    std::to_string(j) + ", r=" + std::to_string(r) + ")");
  }
}

void check_class_structure(int max_t) {
  const int top_order = capped(5, max_t > 0 ? max_t + 1 : 5);
  for (int order = 1; order <= top_order; ++order) {
    const int cap = (order - 1) + kOracleHeightSlack;
    const EquivalenceAtlas atlas = build_equivalence_atlas(order, cap);
    const EquivalenceAtlas wider = build_equivalence_atlas(order, cap + 1);
    std::map<int, int> fwd, bwd;
    for (const Diagram& d : atlas.universe) {
      const int a = atlas.component(d);
      const int b = wider.component(d);
      auto [fit, fnew] = fwd.emplace(a, b);
      auto [bit, bnew] = bwd.emplace(b, a);
      (void)fnew;
      (void)bnew;
      require(fit->second == b && bit->second == a,
              "order " + std::to_string(order) + ": raising the height cap changed the classes");
    }

    for (const auto& members : atlas.groups()) {
      std::vector<Diagram> depletes, reduced_completes;
      int min_height = cap + 1;
      for (const Diagram& d : members) {
        min_height = std::min(min_height, d.height());
        if (is_deplete(d)) depletes.push_back(d);
        if (is_complete(d) && is_reduced(d)) reduced_completes.push_back(d);
      }
      require(depletes.size() == 1, "order " + std::to_string(order) + ": class of " +
                                        members.front().str() + " has " +
                                        std::to_string(depletes.size()) + " deplete members");
      require(depletes.front().height() == min_height,
              "deplete member is not of minimal height in " + depletes.front().str());
      require(reduced_completes.size() == 2,
              "class of " + depletes.front().str() + " has " +
                  std::to_string(reduced_completes.size()) + " complete reduced members");
      std::set<int> hs{reduced_completes[0].height(), reduced_completes[1].height()};
      require(hs == std::set<int>{min_height, min_height + 1},
              "complete reduced members of " + depletes.front().str() +
                  " have heights other than h, h+1");
      for (const Diagram& d : members)
        require(canonicalize(d).deplete == depletes.front(),
                "canonicalize(" + d.str() + ") left its move component");
    }
  }
}

void check_links(int max_t) {
  require(isomorphic(build_graph_of_links(3), figure_links_order3()),
          "the order-3 graph of links does not match the reference drawing");
  require(isomorphic(build_graph_of_links(4), figure_links_order4()),
          "the order-4 graph of links does not match the reference drawing");
  const int top_order = capped(6, max_t > 0 ? max_t + 1 : 6);
  for (int order = 2; order <= top_order; ++order) {
    const LabeledGraph g = build_graph_of_links(order);
    const PropertyReport rep = check_properties(
        g, {Property::P1, Property::P2, Property::P3, Property::P5, Property::P6});
    require(rep.all_pass(), "order " + std::to_string(order) + ":\n" + rep.str());
    pointed_chain(g);  // throws unless unique
    for (int i = 0; i < g.order(); ++i)
      require(g.vertices[static_cast<size_t>(i)].label ==
                  g.vertices[static_cast<size_t>(i)].cls->strongly_extremal,
              "vertex label differs from the strongly extremal column");
    for (const Triad& tr : triads(g)) triad_order(g, tr);  // throws unless exactly one end
  }
}

void check_sgraphs(int max_t) {
  require(isomorphic(build_sgraph(LinearOrderC::parse("1<2")), figure_square_c1c2()),
          "the doubling graph of 1<2 does not match its drawing");
  require(isomorphic(build_sgraph(LinearOrderC::parse("2<1")), figure_square_c2c1()),
          "the doubling graph of 2<1 does not match its drawing");
  require(isomorphic(build_sgraph(LinearOrderC::parse("2<1<3")), figure_octagon()),
          "the doubling graph of 2<1<3 does not match the octagon drawing");
  require(isomorphic(build_sgraph(LinearOrderC::parse("2<3<1")), figure_octagon()),
          "the doubling graph of 2<3<1 does not match the octagon drawing");

  const int top = capped(5, max_t);
  for (int t = 1; t <= top; ++t) {
    const ClassTable tbl = enumerate_classes(t + 1);
    const LabeledGraph links = build_graph_of_links(tbl);
    std::set<std::string> union_of_vertex_sets;
    std::map<std::string, int> in_how_many;
    const auto orders = LinearOrderC::all(t);
    for (const LinearOrderC& order : orders) {
      const LabeledGraph g = build_sgraph(order);
      require(g.order() == (1 << t), order.str() + ": vertex count is not 2^t");
      const SGraphReport rep = is_S_graph(g, order);
      require(rep.pass(), order.str() + ": " + rep.properties.str() + rep.p7_witness);
      pointed_chain(g);
      const std::vector<ClassKey> compatible = select_compatible(tbl, order);
      require(static_cast<int>(compatible.size()) == (1 << t),
              order.str() + ": " + std::to_string(compatible.size()) + " compatible classes");
      const LabeledGraph induced = induced_subgraph(links, compatible);
      match_by_forms(g, induced);  // throws on any disagreement
      const SGraphReport rep2 = is_S_graph(induced, order);
      require(rep2.pass(), order.str() + " (induced): " + rep2.properties.str() + rep2.p7_witness);

      // Ordered paths: unique targets with distinct labels along the way.
      for (int v = 0; v < g.order(); ++v) {
        for (int k = 1; k <= t + 1; ++k) {
          const auto ws = ordered_paths(g, order, v, k);
          require(ws.size() == 1, order.str() + ": ordered path witness count " +
                                      std::to_string(ws.size()));
          std::set<int> vlabels, elabels;
          for (int pv : ws.front().vertices)
            require(vlabels.insert(g.vertices[static_cast<size_t>(pv)].label).second,
                    "repeated vertex label along an ordered path");
          for (int el : ws.front().edge_labels)
            require(elabels.insert(el).second, "repeated edge label along an ordered path");
        }
      }
      orient_to_sinks(g, order);       // asserts the forest shape
      split_components(induced, order);  // asserts the coefficient classes

      for (const ClassKey& key : compatible) {
        union_of_vertex_sets.insert(key.str());
        in_how_many[key.str()] += 1;
      }
    }
    require(static_cast<int>(union_of_vertex_sets.size()) ==
                static_cast<int>(tbl.classes.size()),
            "t=" + std::to_string(t) + ": the vertex sets do not cover all classes");
    // The common intersection is the pointed chain.
    const std::vector<int> chain = pointed_chain(links);
    std::set<std::string> chain_classes;
    for (int v : chain) chain_classes.insert(links.vertices[static_cast<size_t>(v)].cls->str());
    std::set<std::string> everywhere;
    for (const auto& [name, cnt] : in_how_many)
      if (cnt == static_cast<int>(orders.size())) everywhere.insert(name);
    require(everywhere == chain_classes,
            "t=" + std::to_string(t) + ": the common intersection is not the pointed chain");

    // Swapping the two largest entries with distant indices changes nothing.
    for (const LinearOrderC& order : orders) {
      if (t < 2) break;
      LinearOrderC swapped = order;
      std::swap(swapped.perm[static_cast<size_t>(t - 2)], swapped.perm[static_cast<size_t>(t - 1)]);
      if (std::abs(order.perm[static_cast<size_t>(t - 2)] - order.perm[static_cast<size_t>(t - 1)]) <= 1)
        continue;
      require(induced_subgraph(links, select_compatible(tbl, order)).subgraph_key() ==
                  induced_subgraph(links, select_compatible(tbl, swapped)).subgraph_key(),
              order.str() + ": swapping the distant top pair changed the subgraph");
      if (t <= 4) {
        for (const Triad& tr : triads(induced_subgraph(links, select_compatible(tbl, order)))) {
          const std::set<int> pair{tr.outer, tr.inner};
          require(pair != std::set<int>{order.perm[static_cast<size_t>(t - 2)],
                                        order.perm[static_cast<size_t>(t - 1)]},
                  order.str() + ": found a triad on the swappable top pair");
        }
      }
    }
  }
}

void check_classify(int max_t) {
  const int top = capped(5, max_t);
  for (int t = 1; t <= top; ++t) {
    const auto blocks = classify(t);
    require(static_cast<long long>(blocks.size()) == catalan(t),
            "t=" + std::to_string(t) + ": " + std::to_string(blocks.size()) +
                " labelled graphs, expected the Catalan number " + std::to_string(catalan(t)));
    if (t <= 4) {
      for (const auto& block : blocks) {
        const LabeledGraph first = build_sgraph(block.orders.front());
        for (size_t i = 1; i < block.orders.size(); ++i)
          require(isomorphic(first, build_sgraph(block.orders[i])),
                  "orders in one block are not isomorphic as labelled graphs");
      }
    }
  }
}

void check_hypercube(int max_t) {
  const int top = capped(5, max_t);
  for (int t = 1; t <= top; ++t) {
    for (const LinearOrderC& order : LinearOrderC::all(t)) {
      const HypercubeEmbedding emb = embed(order);  // asserts the embedding rules
      const LabelMultiplicities direct = direct_multiplicities(emb.graph);
      const LabelMultiplicities recursed = multiplicities(order);
      require(direct == recursed, order.str() + ": multiplicity recursion disagrees with counts");
      // The top label has as many edges as vertices.
      const int s = order.top();
      require(recursed.edge_power[static_cast<size_t>(s - 1)] ==
                  recursed.vertex_power[static_cast<size_t>(s - 1)],
              order.str() + ": top-label edge and vertex counts differ");
      // Switching any descent preserves the multiplicities.
      const std::vector<int> seq = canonical_sequence(order);
      for (size_t i = 0; i + 1 < seq.size(); ++i) {
        if (seq[i] > seq[i + 1]) {
          std::vector<int> switched = seq;
          switched[i] = seq[i + 1];
          switched[i + 1] = seq[i] + 1;
          require(multiplicities_of_sequence(switched) == recursed,
                  order.str() + ": a switch changed the multiplicities");
        }
      }
    }
  }
  const int roundtrip_top = capped(6, max_t);
  for (int t = 1; t <= roundtrip_top; ++t)
    for (const LinearOrderC& order : LinearOrderC::all(t))
      require(invert_canonical_sequence(canonical_sequence(order)).perm == order.perm,
              order.str() + ": canonical sequence does not invert");
}

void check_degeneration(int max_t) {
  const int top = capped(4, max_t);
  for (int t = 1; t <= top; ++t) {
    for (const LinearOrderC& order : LinearOrderC::all(t)) {
      const int r = order.perm.front();
      const ZeroDegeneration zd = degenerate_zero(order, r);
      require(zd.sides_equal(), order.str() + ": the two sides of the zero specialization differ");
      require(static_cast<int>(zd.specialized.size()) == (1 << (t - 1)),
              order.str() + ": expected 2^{t-1} specialized functions");
      require(t == 1 || zd.components_after_erasing >= 2,
              order.str() + ": erasing the smallest label did not disconnect");

      // Coalescing the top pair whenever their indices are adjacent.
      if (t >= 2 &&
          std::abs(order.perm[static_cast<size_t>(t - 2)] - order.perm[static_cast<size_t>(t - 1)]) ==
              1) {
        const Coalescence cp = coalesce_pair(order);
        require(separation_check(cp.quotient_1.graph, cp.assignment),
                order.str() + ": separation fails after coalescing");
        // A second grid: primes below, a larger coalesced value on top.
        const long long primes[] = {2, 3, 5, 7, 11};
        CoefficientAssignment grid;
        grid.values.assign(static_cast<size_t>(t), 0);
        for (int j = 0; j < t - 2; ++j)
          grid.values[static_cast<size_t>(cp.order_1.perm[static_cast<size_t>(j)] - 1)] = primes[j];
        grid.values[static_cast<size_t>(cp.order_1.perm[static_cast<size_t>(t - 2)] - 1)] = 1009;
        grid.values[static_cast<size_t>(cp.order_1.perm[static_cast<size_t>(t - 1)] - 1)] = 1009;
        const ClassTable tbl = enumerate_classes(t + 1);
        const LabeledGraph g1 =
            induced_subgraph(build_graph_of_links(tbl), select_compatible(tbl, cp.order_1));
        const QuotientResult q = quotient_by_equal_functions(g1, grid);
        require(separation_check(q.graph, grid), order.str() + ": separation fails on the prime grid");
        require(isomorphic(q.graph, cp.g_c), order.str() + ": prime-grid quotient differs");
      }
    }

    // The all-equal limit collapses to the labelled simplex.
    const ClassTable tbl = enumerate_classes(t + 1);
    const LabeledGraph links = build_graph_of_links(tbl);
    for (const LinearOrderC& order : LinearOrderC::all(t)) {
      CoefficientAssignment ones;
      ones.values.assign(static_cast<size_t>(t), 1);
      const LabeledGraph g = induced_subgraph(links, select_compatible(tbl, order));
      const QuotientResult q = quotient_by_equal_functions(g, ones);
      require(q.graph.order() == t + 1, order.str() + ": the all-equal limit is not a simplex");
      std::set<int> labels;
      for (const GraphVertex& v : q.graph.vertices) labels.insert(v.label);
      require(static_cast<int>(labels.size()) == t + 1, "limit labels are not 1..t+1");
      for (int u = 0; u < q.graph.order(); ++u)
        for (int v = u + 1; v < q.graph.order(); ++v)
          require(q.graph.has_edge(u, v, 1), "limit vertices are not pairwise adjacent");
      all_equal_limit_chain(q.graph);  // asserts the unbranched chain
    }
  }

  // The printed examples, matched exactly.
  const Coalescence ex1 = coalesce_pair(LinearOrderC::parse("1<2<3"));
  require(isomorphic(ex1.g_c, figure_limit_t3()), "the order-3 limit drawing is not reproduced");
  const Coalescence ex2 = coalesce_pair(LinearOrderC::parse("1<4<2<3"));
  require(isomorphic(ex2.g_c, figure_limit_t4()), "the order-4 limit drawing is not reproduced");
  require(isomorphic(build_sgraph(ex2.order_1), figure_coalesce_t4_original()),
          "the doubling graph of 1<4<2<3 does not match its drawing");
  require(isomorphic(build_sgraph(ex2.order_2), figure_coalesce_t4_swapped()),
          "the doubling graph of 1<4<3<2 does not match its drawing");

  const ClassTable tbl4 = enumerate_classes(4);
  const LabeledGraph octagon = induced_subgraph(
      build_graph_of_links(tbl4), select_compatible(tbl4, LinearOrderC::parse("2<3<1")));
  CoefficientAssignment a{{2, 1, 1}};
  const QuotientResult q = quotient_by_equal_functions(octagon, a);
  require(isomorphic(q.graph, figure_octagon_coalesced()),
          "the coalesced octagon does not match its drawing");
  CoefficientAssignment all1{{1, 1, 1}};
  require(isomorphic(quotient_by_equal_functions(octagon, all1).graph, figure_simplex_t3()),
          "the octagon does not collapse to the labelled simplex");
}

void check_uniqueness(int max_t) {
  const auto start = std::chrono::steady_clock::now();
  const int top = capped(3, max_t);
  for (int t = 1; t <= top; ++t) {
    const ClassTable tbl = enumerate_classes(t + 1);
    const LabeledGraph links = build_graph_of_links(tbl);
    for (const LinearOrderC& order : LinearOrderC::all(t)) {
      const auto found = unique_ssubgraph_search(order);
      require(found.size() == 1, order.str() + ": " + std::to_string(found.size()) +
                                     " S-subgraphs found, expected exactly one");
      require(found.front().subgraph_key() ==
                  induced_subgraph(links, select_compatible(tbl, order)).subgraph_key(),
              order.str() + ": the unique S-subgraph is not the doubling graph");
    }
  }
  if (top >= 3) {
    const LinearOrderC probe = LinearOrderC::parse("2<1<3");
    require(unique_ssubgraph_search(probe, 3, false).size() == 1,
            "the unpruned search found a different count");
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  require(secs < 300.0, "search took " + std::to_string(secs) + " s, budget is 300 s");
}

void check_fixtures(int) {
  const LinearOrderC order = LinearOrderC::parse("2<3<1");
  const LabeledGraph pendant = fixture_pendant_octagon();
  const SGraphReport rep = is_S_graph(pendant, order);
  require(rep.pass(), "the pendant-extended octagon fails the axioms:\n" + rep.properties.str() +
                          rep.p7_witness);

  const LabeledGraph two = fixture_two_octagons();
  const PropertyReport props = check_properties(
      two, {Property::P1, Property::P2, Property::P3, Property::P5, Property::P6});
  require(props.all_pass(), "the two-block graph fails a property:\n" + props.str());
  int designated = -1;
  for (int v = 0; v < two.order(); ++v)
    if (two.vertices[static_cast<size_t>(v)].tag == "designated") designated = v;
  require(designated >= 0, "missing designated vertex");
  const auto ws = ordered_paths(two, order, designated, 1);
  require(ws.size() == 2, "expected two ordered-path witnesses, found " +
                              std::to_string(ws.size()));
  std::set<std::vector<int>> label_paths;
  for (const auto& w : ws) {
    std::vector<int> labs;
    for (int v : w.vertices) labs.push_back(two.vertices[static_cast<size_t>(v)].label);
    label_paths.insert(labs);
  }
  require(label_paths == std::set<std::vector<int>>{{2, 1}, {2, 3, 4, 1}},
          "the two witnesses do not follow the printed label paths");

  bool has12 = false, has21 = false;
  for (const Triad& tr : triads(two)) {
    has12 |= tr.outer == 1 && tr.inner == 2;
    has21 |= tr.outer == 2 && tr.inner == 1;
  }
  require(has12 && has21, "expected triads defining both c1<c2 and c2<c1");
}

struct SuiteSpec {
  std::string name;
  std::string id;
  std::string description;
  void (*body)(int);
};

const SuiteSpec kSuites[] = {
    {"counts", "A1", "class counts match the Catalan numbers for orders 1..7", check_counts},
    {"counts", "A2", "per-column counts match the product formula for orders <= 7", check_columns},
    {"counts", "A3", "height polynomials, cumulative and planted-tree recursions agree",
     check_polynomials},
    {"classes", "A4", "each move class has one deplete and two reduced complete members",
     check_class_structure},
    {"links", "A5", "graphs of links match the drawings and satisfy P1,P2,P3,P5,P6",
     check_links},
    {"sgraphs", "A6", "every doubling graph is the compatible-class subgraph with 2^t vertices",
     check_sgraphs},
    {"classify", "A7", "labelled doubling graphs fall into Catalan-many classes", check_classify},
    {"hypercube", "A8", "hypercube embedding and multiplicity recursions hold", check_hypercube},
    {"degeneration", "A9", "zero and coalescence degenerations reproduce the printed limits",
     check_degeneration},
    {"uniqueness", "A10", "the doubling graph is the unique S-subgraph at t <= 3",
     check_uniqueness},
    {"fixtures", "A11", "the bundled non-doubling S-graphs behave as printed", check_fixtures},
};

}  // namespace

bool VerifyReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

std::string VerifyReport::str() const {
  std::ostringstream os;
  for (const CheckResult& c : checks) {
    os << c.id << ' ' << (c.pass ? "pass" : "FAIL") << "  " << c.description << "  ["
       << static_cast<long long>(c.ms) << " ms]";
    if (!c.pass) os << "\n    " << c.witness;
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out{"all"};
  for (const SuiteSpec& s : kSuites)
    if (std::find(out.begin(), out.end(), s.name) == out.end()) out.push_back(s.name);
  return out;
}

bool is_suite(const std::string& name) {
  const auto names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

VerifyReport run_suites(const std::vector<std::string>& suites, int max_t, bool parallel) {
  std::vector<const SuiteSpec*> todo;
  for (const SuiteSpec& s : kSuites) {
    bool wanted = false;
    for (const std::string& name : suites) wanted |= name == "all" || name == s.name;
    if (wanted) todo.push_back(&s);
  }
  VerifyReport report;
  if (parallel) {
    std::vector<std::future<CheckResult>> futures;
    for (const SuiteSpec* s : todo)
      futures.push_back(std::async(std::launch::async, [s, max_t] {
        return run_check(s->id, s->description, [s, max_t] { s->body(max_t); });
      }));
    for (auto& f : futures) report.checks.push_back(f.get());
  } else {
    for (const SuiteSpec* s : todo)
      report.checks.push_back(run_check(s->id, s->description, [s, max_t] { s->body(max_t); }));
  }
  return report;
}

}  // namespace catalania
