#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "catalania/cache.hpp"
#include "catalania/degeneration.hpp"
#include "catalania/figures.hpp"
#include "catalania/hypercube.hpp"
#include "catalania/verify.hpp"

namespace {

using namespace catalania;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

void emit_graph(const LabeledGraph& g, const std::string& dot, const std::string& json,
                const std::string& name) {
  if (!dot.empty()) write_file(dot, to_dot(g, name));
  if (!json.empty()) write_file(json, to_json(g));
}

// "1<4<2=3": groups separated by '<', ties by '='.  Returns the groups.
std::vector<std::vector<int>> parse_chain_groups(const std::string& text) {
  std::vector<std::vector<int>> groups;
  std::vector<int> current;
  size_t pos = 0;
  auto read_index = [&] {
    size_t start = pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw std::invalid_argument("chain parse error at position " + std::to_string(start) +
                                  ": expected an index");
    return std::stoi(text.substr(start, pos - start));
  };
  current.push_back(read_index());
  while (pos < text.size()) {
    const char sep = text[pos];
    if (sep != '<' && sep != '=')
      throw std::invalid_argument("chain parse error at position " + std::to_string(pos) +
                                  ": expected '<' or '='");
    ++pos;
    const int idx = read_index();
    if (sep == '=') {
      current.push_back(idx);
    } else {
      groups.push_back(current);
      current = {idx};
    }
  }
  groups.push_back(current);
  return groups;
}

int cmd_enumerate(int order, bool by_column, const std::string& json, const std::string& cache_dir) {
  const ClassTable tbl = cache_dir.empty()
                             ? enumerate_classes(order)
                             : cached_enumerate(order, cache_dir);
  std::cout << "order " << order << ": " << tbl.classes.size() << " classes (Catalan number "
            << catalan(order) << ")\n";
  for (const ClassKey& key : tbl.classes)
    std::cout << "  " << key.str() << "  column " << key.strongly_extremal << "  height "
              << key.class_height << '\n';
  if (by_column) {
    std::cout << "by column:";
    for (auto [j, n] : count_by_column(tbl)) {
      (void)j;
      std::cout << ' ' << n;
    }
    std::cout << '\n';
  }
  const CatalanPoly poly = catalan_polynomial(tbl);
  std::cout << "height polynomial coefficients:";
  for (long long c : poly.coeff) std::cout << ' ' << c;
  std::cout << '\n';
  if (!json.empty()) write_file(json, table_to_json(tbl));
  if (!cache_dir.empty()) {
    // Spot check: one random cached order must agree with a fresh run.
    std::mt19937 rng{std::random_device{}()};
    const int probe = std::uniform_int_distribution<int>(1, order)(rng);
    const ClassTable fresh = enumerate_classes(probe);
    const ClassTable cached = cached_enumerate(probe, cache_dir);
    if (!(fresh.classes == cached.classes))
      throw std::logic_error("cache disagrees with a fresh enumeration at order " +
                             std::to_string(probe));
  }
  return 0;
}

int cmd_polynomial(int order) {
  const CatalanPoly poly = catalan_polynomial_recursive(order);
  std::cout << "order " << order << " coefficients:";
  for (long long c : poly.coeff) std::cout << ' ' << c;
  std::cout << "\ncumulative:";
  for (int r = 0; r < order; ++r) std::cout << ' ' << cumulative_count(order, r);
  std::cout << '\n';
  return 0;
}

int cmd_graph(int order, const std::string& dot, const std::string& json) {
  emit_graph(build_graph_of_links(order), dot, json, "links");
  std::cout << "graph of links of order " << order << " written\n";
  return 0;
}

int cmd_sgraph(const std::string& chain, const std::string& dot, const std::string& json) {
  const LinearOrderC order = LinearOrderC::parse(chain);
  const LabeledGraph g = build_sgraph(order);
  emit_graph(g, dot, json, "sgraph");
  std::cout << "doubling graph of " << order.str() << ": " << g.order() << " vertices, "
            << g.edges.size() << " edges\n";
  return 0;
}

int cmd_classify(int t, const std::string& json, bool tsv) {
  const auto blocks = classify(t);
  std::ostringstream os;
  if (tsv) {
    os << "normal_form\torders\tvertex_powers\tedge_powers\n";
    for (const auto& b : blocks) {
      for (size_t i = 0; i < b.normal_form.size(); ++i)
        os << (i ? "," : "") << b.normal_form[i];
      os << '\t';
      for (size_t i = 0; i < b.orders.size(); ++i)
        os << (i ? ";" : "") << b.orders[i].str();
      os << '\t';
      for (size_t i = 0; i < b.mult.vertex_power.size(); ++i)
        os << (i ? "," : "") << b.mult.vertex_power[i];
      os << '\t';
      for (size_t i = 0; i < b.mult.edge_power.size(); ++i)
        os << (i ? "," : "") << b.mult.edge_power[i];
      os << '\n';
    }
  } else {
    os << blocks.size() << " labelled graphs for t=" << t << " (Catalan number " << catalan(t)
       << ")\n";
    for (const auto& b : blocks) {
      os << "  normal form (";
      for (size_t i = 0; i < b.normal_form.size(); ++i)
        os << (i ? "," : "") << b.normal_form[i];
      os << ") <-";
      for (const auto& o : b.orders) os << ' ' << o.str();
      os << '\n';
    }
  }
  std::cout << os.str();
  if (!json.empty()) {
    std::ostringstream js;
    js << "[\n";
    for (size_t bi = 0; bi < blocks.size(); ++bi) {
      const auto& b = blocks[bi];
      js << "  {\"normal_form\": [";
      for (size_t i = 0; i < b.normal_form.size(); ++i) js << (i ? "," : "") << b.normal_form[i];
      js << "], \"orders\": [";
      for (size_t i = 0; i < b.orders.size(); ++i)
        js << (i ? "," : "") << '"' << b.orders[i].str() << '"';
      js << "], \"vertex_powers\": [";
      for (size_t i = 0; i < b.mult.vertex_power.size(); ++i)
        js << (i ? "," : "") << b.mult.vertex_power[i];
      js << "], \"edge_powers\": [";
      for (size_t i = 0; i < b.mult.edge_power.size(); ++i)
        js << (i ? "," : "") << b.mult.edge_power[i];
      js << "]}" << (bi + 1 < blocks.size() ? "," : "") << '\n';
    }
    js << "]\n";
    write_file(json, js.str());
  }
  return 0;
}

int cmd_degenerate(int order_n, const std::string& chain, const std::string& values,
                   const std::string& dot, const std::string& json) {
  const auto groups = parse_chain_groups(chain);
  std::vector<int> flat;
  for (const auto& g : groups)
    for (int idx : g) flat.push_back(idx);
  const int t = static_cast<int>(flat.size());
  if (order_n > 0 && order_n != t + 1)
    throw std::invalid_argument("--order disagrees with the chain length");
  std::vector<int> sorted = flat;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < t; ++i)
    if (sorted[static_cast<size_t>(i)] != i + 1)
      throw std::invalid_argument("chain must mention each index 1..t exactly once");

  CoefficientAssignment assignment;
  if (!values.empty()) {
    assignment = CoefficientAssignment::parse(values, t);
    for (const auto& group : groups)
      for (size_t i = 1; i < group.size(); ++i)
        if (assignment.value(group[i]) != assignment.value(group[0]))
          throw std::invalid_argument("values break a tie declared in the chain");
  } else {
    long long v = 1;
    assignment.values.assign(static_cast<size_t>(t), 0);
    for (const auto& group : groups) {
      for (int idx : group) assignment.values[static_cast<size_t>(idx - 1)] = v;
      v *= 100;
    }
  }

  // Ties broken by index for the ambient linear order.
  LinearOrderC linear;
  for (const auto& group : groups) {
    std::vector<int> g = group;
    std::sort(g.begin(), g.end());
    for (int idx : g) linear.perm.push_back(idx);
  }
  const ClassTable tbl = enumerate_classes(t + 1);
  const LabeledGraph g = induced_subgraph(build_graph_of_links(tbl), select_compatible(tbl, linear));
  const QuotientResult q = quotient_by_equal_functions(g, assignment);
  std::cout << "order " << linear.str() << " at " << assignment.str() << ": quotient has "
            << q.graph.order() << " vertices, " << q.graph.edges.size() << " edges\n";

  // When the chain ties exactly the top pair on adjacent indices, the
  // three-copy limit is available and must agree.
  if (groups.back().size() == 2 && std::abs(groups.back()[0] - groups.back()[1]) == 1) {
    const Coalescence cp = coalesce_pair(linear);
    std::cout << "coalescence limit: " << cp.g_c.order() << " vertices, matches quotient: "
              << (isomorphic(cp.g_c, quotient_by_equal_functions(g, cp.assignment).graph) ? "yes"
                                                                                          : "no")
              << '\n';
  }
  emit_graph(q.graph, dot, json, "degenerate");
  return 0;
}

int cmd_verify(const std::vector<std::string>& suites, int max_t) {
  for (const std::string& s : suites)
    if (!is_suite(s)) {
      std::cerr << "unknown suite: " << s << '\n';
      return kExitUsage;
    }
  const VerifyReport report = run_suites(suites, max_t);
  std::cout << report.str();
  return report.all_pass() ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalan classes of boundary diagrams, their graphs and degenerations"};
  app.require_subcommand(1);

  int order = 3;
  bool by_column = false;
  std::string dot, json, chain, values, cache_dir;
  int max_t = 0;
  int classify_t = 3;
  bool tsv = false;
  std::vector<std::string> suites{"all"};

  auto* enumerate = app.add_subcommand("enumerate", "list the classes of one order");
  enumerate->add_option("--order,-t", order, "diagram order t+1")->required();
  enumerate->add_flag("--by-column", by_column, "print counts per strongly extremal column");
  enumerate->add_option("--json", json, "write the class table as JSON");
  enumerate->add_option("--cache", cache_dir, "cache directory (default CATALANIA_CACHE)");

  auto* polynomial = app.add_subcommand("polynomial", "height polynomial by recursion");
  polynomial->add_option("--order,-t", order, "diagram order t+1")->required();

  auto* graph = app.add_subcommand("graph", "graph of links of one order");
  graph->add_option("--order,-t", order, "diagram order t+1")->required();
  graph->add_option("--dot", dot, "write DOT");
  graph->add_option("--json", json, "write JSON");

  auto* sgraph = app.add_subcommand("sgraph", "doubling graph of a linear order");
  sgraph->add_option("--chain", chain, "linear order, e.g. 2<1<3")->required();
  sgraph->add_option("--dot", dot, "write DOT");
  sgraph->add_option("--json", json, "write JSON");

  auto* classify_cmd = app.add_subcommand("classify", "labelled-graph classes of all orders");
  classify_cmd->add_option("-t", classify_t, "number of coefficients")->required();
  classify_cmd->add_option("--json", json, "write JSON");
  classify_cmd->add_flag("--tsv", tsv, "tab-separated table");

  auto* degenerate = app.add_subcommand("degenerate", "specialize coefficients");
  degenerate->add_option("--order", order, "diagram order t+1 (optional cross-check)");
  degenerate->add_option("--chain", chain, "weak order, e.g. 1<4<2=3")->required();
  degenerate->add_option("--values", values, "assignment, e.g. c1=1,c4=2,c2=9,c3=9");
  degenerate->add_option("--dot", dot, "write DOT of the quotient");
  degenerate->add_option("--json", json, "write JSON of the quotient");

  auto* verify = app.add_subcommand("verify", "run the acceptance suites");
  verify->add_option("--suite", suites, "counts, classes, links, sgraphs, classify, hypercube, "
                                        "degeneration, uniqueness, fixtures, all");
  verify->add_option("--max-t", max_t, "cap the sweeps at this t");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) {
      if (cache_dir.empty() && std::getenv("CATALANIA_CACHE")) cache_dir = std::getenv("CATALANIA_CACHE");
      return cmd_enumerate(order, by_column, json, cache_dir);
    }
    if (*polynomial) return cmd_polynomial(order);
    if (*graph) return cmd_graph(order, dot, json);
    if (*sgraph) return cmd_sgraph(chain, dot, json);
    if (*classify_cmd) return cmd_classify(classify_t, json, tsv);
    if (*degenerate)
      return cmd_degenerate(degenerate->count("--order") > 0 ? order : 0, chain, values, dot, json);
    if (*verify) return cmd_verify(suites, max_t);
  } catch (const capacity_error& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
