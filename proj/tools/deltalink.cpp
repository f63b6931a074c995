// Command-line front end: invariants, classification, distance and
// splitting bounds, pathway search, table and graph reproduction.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "deltalink/analysis.hpp"
#include "deltalink/catalog.hpp"
#include "deltalink/construct.hpp"

using namespace deltalink;

namespace {

Catalog load_catalog(const std::string& override_path) {
  std::string path = override_path.empty() ? Catalog::default_path() : override_path;
  Catalog cat = Catalog::load(path);
  for (const std::string& w : cat.warnings()) std::cerr << "warning: " << w << "\n";
  return cat;
}

PathwayGraph load_evidence_or_empty(const std::string& override_path) {
  std::string path = override_path.empty() ? default_evidence_path() : override_path;
  try {
    return load_evidence(path);
  } catch (const Error&) {
    return PathwayGraph{};
  }
}

void print_invariants(const Catalog& cat, const std::string& ref) {
  LinkDiagram d = cat.resolve(ref);
  InvariantCache& cache = cat.cache();
  std::cout << "link: " << ref << "\n";
  std::cout << "crossings: " << d.crossing_count() << "\n";
  std::cout << "components: " << d.component_count() << "\n";
  LinkingMatrix lk = linking_matrix(d);
  std::cout << "linking matrix:";
  for (int i = 0; i < lk.m; i++) {
    std::cout << (i ? " ;" : "");
    for (int j = 0; j < lk.m; j++) std::cout << " " << lk.at(i, j);
  }
  std::cout << "\n";
  std::cout << "conway: " << conway(d, &cache).str() << "\n";
  auto a = arf(d, &cache);
  std::cout << "arf: " << (a ? std::to_string(*a) : std::string("undefined (not proper)"))
            << "\n";
  if (d.component_count() == 2) {
    FamilyKey k = delta_invariants(d, &cache);
    std::cout << "delta1: " << k.delta1 << "\n";
    std::cout << "delta2: " << k.delta2 << "\n";
  }
  std::cout << "component polynomials:";
  for (int i = 0; i < d.component_count(); i++)
    std::cout << (i ? " ;" : "") << " " << conway(d.sublink({i}), &cache).str();
  std::cout << "\n";
}

void print_classify(const Catalog& cat, const std::string& ref) {
  LinkDiagram d = cat.resolve(ref);
  LinkDiagram s = simplify(d);
  std::vector<std::string> ids = cat.identify(s);
  std::cout << "identified:";
  if (ids.empty()) std::cout << " (no catalog match)";
  for (const std::string& n : ids) std::cout << " " << n;
  std::cout << "\n";
  if (s.component_count() == 2) {
    FamilyKey k = delta_invariants(s, &cat.cache());
    long long a2 = k.delta2 < 0 ? -k.delta2 : k.delta2;
    std::cout << "family: (" << k.delta1 << "," << (k.delta2 < 0 ? "-" : "") << a2
              << ")\n";
    if (k.delta1 == 0 && a2 <= 2) {
      std::cout << "family members:";
      for (const std::string& n : cat.family_members(0, (int)a2))
        std::cout << " " << n;
      std::cout << "\n";
    }
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"link-diagram computations: Delta moves, invariants, pathway search"};
  app.require_subcommand(1);
  std::string catalog_path, evidence_path;
  app.add_option("--catalog", catalog_path, "catalog file (default: data/catalog.txt)");
  app.add_option("--evidence", evidence_path,
                 "evidence cache (default: data/evidence.txt)");

  std::string link_a, link_b, moves = "self";
  auto* inv = app.add_subcommand("invariants", "print the invariant bundle of a link");
  inv->add_option("link", link_a)->required();

  auto* cls = app.add_subcommand("classify", "identify a link against the catalog");
  cls->add_option("link", link_a)->required();

  auto* dist = app.add_subcommand("distance", "Delta-Gordian distance bounds");
  dist->add_option("first", link_a)->required();
  dist->add_option("second", link_b)->required();
  dist->add_option("--moves", moves, "self|mixed|any")->capture_default_str();

  auto* split = app.add_subcommand("split", "Delta-splitting number bounds");
  split->add_option("link", link_a)->required();

  std::vector<std::string> starts;
  int depth = 1, crossing_cap = 11;
  long long state_budget = 20000;
  std::string out_path;
  auto* search = app.add_subcommand("search", "breadth-first Delta-move search");
  search->add_option("--start", starts, "start links")->required();
  search->add_option("--moves", moves, "self|mixed|any")->capture_default_str();
  search->add_option("--depth", depth)->capture_default_str();
  search->add_option("--crossing-cap", crossing_cap)->capture_default_str();
  search->add_option("--state-budget", state_budget)->capture_default_str();
  search->add_option("--out", out_path, "write witnessed edges to this file");

  std::string which = "tab3", format = "md";
  auto* table = app.add_subcommand("table", "reproduce a printed table");
  table->add_option("--which", which, "tab1|tab2|tab3|fig2")->capture_default_str();
  table->add_option("--format", format, "csv|md")->capture_default_str();
  table->add_option("--out", out_path, "write to this file instead of stdout");

  std::string gwhich = "fig9";
  auto* graph = app.add_subcommand("graph", "emit a pathway graph in DOT form");
  graph->add_option("--which", gwhich, "fig3|fig4|fig9")->capture_default_str();
  graph->add_option("--format", format, "dot")->capture_default_str();
  graph->add_option("--out", out_path, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    Catalog cat = load_catalog(catalog_path);

    if (inv->parsed()) {
      print_invariants(cat, link_a);
    } else if (cls->parsed()) {
      print_classify(cat, link_a);
    } else if (dist->parsed()) {
      PathwayGraph ev = load_evidence_or_empty(evidence_path);
      DistanceReport r = distance_between(cat, ev, link_a, link_b, moves);
      for (const std::string& line : r.derivation) std::cout << "  " << line << "\n";
      if (auto v = r.bound.exact_value())
        std::cout << "exact " << *v << "\n";
      else
        std::cout << "bound " << r.bound.str() << "\n";
    } else if (split->parsed()) {
      PathwayGraph ev = load_evidence_or_empty(evidence_path);
      SplitReport r = splitting_bounds(cat, ev, link_a);
      for (const std::string& line : r.derivation) std::cout << "  " << line << "\n";
      std::cout << "sp_delta: " << r.sp_delta.str() << "\n";
      std::cout << "sp_mdelta: " << r.sp_mdelta.str() << "\n";
    } else if (search->parsed()) {
      SearchOptions opts;
      opts.depth = depth;
      opts.crossing_cap = crossing_cap;
      opts.state_budget = state_budget;
      opts.use_r2_add = true;
      opts.isotopy_states = 300;
      PathwayGraph g = bfs_pathways(cat, starts, parse_move_filter(moves), opts);
      std::cout << "nodes: " << g.nodes.size() << "\n";
      for (const std::string& n : g.nodes) std::cout << "  " << n << "\n";
      std::cout << "edges: " << g.edges.size() << "\n";
      for (const PathwayEdge& e : g.edges)
        std::cout << "  " << e.a << " -- " << e.b << " [" << e.kind << "]\n";
      if (!out_path.empty()) save_evidence(g, out_path);
    } else if (table->parsed()) {
      PathwayGraph ev = load_evidence_or_empty(evidence_path);
      TableDoc doc = reproduce_table(cat, ev, which);
      std::string text = format == "csv" ? doc.to_csv() : doc.to_md();
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        out << text;
      }
    } else if (graph->parsed()) {
      PathwayGraph ev = load_evidence_or_empty(evidence_path);
      std::string text = graph_dot(cat, ev, gwhich);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        out << text;
      }
    }
  } catch (const UnknownValue& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
