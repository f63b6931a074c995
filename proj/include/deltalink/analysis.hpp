#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "deltalink/catalog.hpp"
#include "deltalink/moves.hpp"

namespace deltalink {

// Interval + parity knowledge of a distance. Merging inconsistent evidence
// throws; the bound is exact when a single value survives.
struct DistanceBound {
  int lower = 0;
  std::optional<int> upper;
  std::optional<int> parity;

  void add_lower(int n);
  void add_upper(int n);
  void add_parity(int p);
  void check() const; // throws InconsistentEvidence when no value survives
  std::optional<int> exact_value() const;
  bool exact() const { return exact_value().has_value(); }
  std::string str() const;
  BoundInterval as_interval() const { return {lower, upper, parity}; }
};

struct WitnessStep {
  std::string pd;  // diagram the move is applied on
  int site = -1;   // index into enumerate_sites(pd, delta kinds)
};

struct PathwayEdge {
  std::string a, b;    // endpoint names, lexicographically sorted
  std::string kind;    // "self" or "mixed"
  std::vector<WitnessStep> witness;
};

struct PathwayGraph {
  std::set<std::string> nodes;
  std::vector<PathwayEdge> edges;

  void add_edge(PathwayEdge e);
  bool has_edge(const std::string& a, const std::string& b) const;
  // unweighted hop distances from a node, using edges of the given kinds
  std::map<std::string, int> distances_from(const std::string& start,
                                            bool self_edges, bool mixed_edges) const;
  std::optional<int> distance(const std::string& a, const std::string& b,
                              bool self_edges, bool mixed_edges) const;
  void merge(const PathwayGraph& other);
};

struct SearchOptions {
  int depth = 1;
  int crossing_cap = 13;
  long long state_budget = 20000;
  int isotopy_states = 24; // R3/R2-add variants explored per state
  bool use_r2_add = false;
  int simplify_budget = 300;
};

// "self", "mixed" or "any"
KindMask parse_move_filter(const std::string& s);

struct DeltaChild {
  LinkDiagram diagram;
  MoveKind kind;
  WitnessStep witness;
};

// All Delta-children of a state, exploring bounded isotopy variants (R3 and
// optionally R2 additions under the crossing cap) to expose more trigons.
std::vector<DeltaChild> delta_children(const LinkDiagram& d, KindMask kinds,
                                       const SearchOptions& opts);

// Breadth-first search over the Delta-move graph. States are canonical
// simplified diagrams, identified against the catalog by fingerprint;
// unidentified states become numbered internal nodes.
PathwayGraph bfs_pathways(const Catalog& cat, const std::vector<std::string>& starts,
                          KindMask kinds, const SearchOptions& opts);

// Verify a witnessed edge by replaying its moves and re-identifying both
// endpoints.
bool replay_edge(const Catalog& cat, const PathwayEdge& edge, std::string* why = nullptr);

void save_evidence(const PathwayGraph& g, const std::string& path);
PathwayGraph load_evidence(const std::string& path);
std::string default_evidence_path();

// ---------------------------------------------------------------------------
// bounds from the paper's congruences and inequalities

// parity of any self Delta-pathway length between two links of one family
int parity_self(const Catalog& cat, const std::string& a, const std::string& b);
// parity of any Delta-pathway length between proper links
int parity_proper(const Catalog& cat, const std::string& a, const std::string& b);
// lower bound |sum u_delta(components) - sum u_delta(components')|
int lower_self(const Catalog& cat, const std::string& a, const std::string& b);
// mixed Delta-equivalence: equal pairwise linking numbers up to renumbering
bool mixed_equivalent(const LinkDiagram& d1, const LinkDiagram& d2);
// parity of the mixed splitting number
int split_parity(const Catalog& cat, const std::string& name);

struct PartialBound {
  int value = 0;
  bool partial = false;               // some ingredient was unavailable
  std::vector<std::string> missing;
};
// max of the lower bounds for the mixed splitting number
PartialBound split_lower(const Catalog& cat, const std::string& name);

bool is_split_entry(const Catalog& cat, const std::string& name);

// ---------------------------------------------------------------------------
// clasp words: the combinatorial shadow of the splitting procedure

// cyclic word over '+', '-' (clasps of the pair being split) and 'x'
// (other symbols along the component)
struct ClaspWord {
  std::string symbols;
};

// number of mixed Delta-moves the splitting procedure spends: adjacent
// opposite clasps cancel freely, each transposition past a symbol costs one
int clasp_split_upper(const ClaspWord& w);

// ---------------------------------------------------------------------------
// assembled reports

struct DistanceReport {
  DistanceBound bound;
  std::vector<std::string> derivation;
};

DistanceReport distance_between(const Catalog& cat, const PathwayGraph& evidence,
                                const std::string& a, const std::string& b,
                                const std::string& moves);

struct SplitReport {
  DistanceBound sp_delta;
  DistanceBound sp_mdelta;
  std::vector<std::string> derivation;
};

SplitReport splitting_bounds(const Catalog& cat, const PathwayGraph& evidence,
                             const std::string& name);

struct TableDoc {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> diffs; // per-cell report against the printed values
  std::string to_csv() const;
  std::string to_md() const;
};

// which: "fig2", "tab1", "tab2", "tab3"
TableDoc reproduce_table(const Catalog& cat, const PathwayGraph& evidence,
                         const std::string& which);

// which: "fig3", "fig4", "fig9"
std::string graph_dot(const Catalog& cat, const PathwayGraph& evidence,
                      const std::string& which);

// the printed family tables this build reproduces (paper rows/columns)
const std::vector<std::string>& family_table_names(const std::string& which);

} // namespace deltalink
