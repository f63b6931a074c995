#include "deltalink/analysis.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

namespace deltalink {

// ---------------------------------------------------------------------------
// DistanceBound

void DistanceBound::add_lower(int n) {
  lower = std::max(lower, n);
  check();
}

void DistanceBound::add_upper(int n) {
  upper = upper ? std::min(*upper, n) : n;
  check();
}

void DistanceBound::add_parity(int p) {
  if (parity && *parity != p)
    throw InconsistentEvidence("conflicting parity constraints");
  parity = ((p % 2) + 2) % 2;
  check();
}

void DistanceBound::check() const {
  if (upper && *upper < lower)
    throw InconsistentEvidence("upper bound " + std::to_string(*upper) +
                               " below lower bound " + std::to_string(lower));
  if (upper && parity) {
    bool any = false;
    for (int n = lower; n <= *upper; n++)
      if (n % 2 == *parity) any = true;
    if (!any)
      throw InconsistentEvidence("no value satisfies interval [" +
                                 std::to_string(lower) + "," + std::to_string(*upper) +
                                 "] with parity " + std::to_string(*parity));
  }
}

std::optional<int> DistanceBound::exact_value() const {
  if (!upper) return std::nullopt;
  std::optional<int> only;
  for (int n = lower; n <= *upper; n++) {
    if (parity && n % 2 != *parity) continue;
    if (only) return std::nullopt;
    only = n;
  }
  return only;
}

std::string DistanceBound::str() const {
  if (auto v = exact_value()) return std::to_string(*v);
  std::ostringstream os;
  if (!upper) {
    os << ">=" << lower;
    if (parity) os << " parity " << *parity;
    return os.str();
  }
  // two admissible values print in the paper's "a or b" style
  std::vector<int> vals;
  for (int n = lower; n <= *upper; n++)
    if (!parity || n % 2 == *parity) vals.push_back(n);
  if (vals.size() == 2) return std::to_string(vals[0]) + " or " + std::to_string(vals[1]);
  os << lower << "-" << *upper;
  if (parity) os << " parity " << *parity;
  return os.str();
}

// ---------------------------------------------------------------------------
// PathwayGraph

void PathwayGraph::add_edge(PathwayEdge e) {
  if (e.a > e.b) {
    std::swap(e.a, e.b);
  }
  nodes.insert(e.a);
  nodes.insert(e.b);
  for (const PathwayEdge& x : edges)
    if (x.a == e.a && x.b == e.b && x.kind == e.kind) return;
  edges.push_back(std::move(e));
}

bool PathwayGraph::has_edge(const std::string& a, const std::string& b) const {
  std::string x = a, y = b;
  if (x > y) std::swap(x, y);
  for (const PathwayEdge& e : edges)
    if (e.a == x && e.b == y) return true;
  return false;
}

std::map<std::string, int> PathwayGraph::distances_from(const std::string& start,
                                                        bool self_edges,
                                                        bool mixed_edges) const {
  std::map<std::string, std::vector<std::string>> adj;
  for (const PathwayEdge& e : edges) {
    if (e.kind == "self" && !self_edges) continue;
    if (e.kind == "mixed" && !mixed_edges) continue;
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  std::map<std::string, int> dist{{start, 0}};
  std::deque<std::string> queue{start};
  while (!queue.empty()) {
    std::string u = queue.front();
    queue.pop_front();
    auto it = adj.find(u);
    if (it == adj.end()) continue;
    for (const std::string& v : it->second)
      if (!dist.count(v)) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

std::optional<int> PathwayGraph::distance(const std::string& a, const std::string& b,
                                          bool self_edges, bool mixed_edges) const {
  auto d = distances_from(a, self_edges, mixed_edges);
  auto it = d.find(b);
  if (it == d.end()) return std::nullopt;
  return it->second;
}

void PathwayGraph::merge(const PathwayGraph& other) {
  nodes.insert(other.nodes.begin(), other.nodes.end());
  for (const PathwayEdge& e : other.edges) add_edge(e);
}

// ---------------------------------------------------------------------------
// search

KindMask parse_move_filter(const std::string& s) {
  if (s == "self") return kDeltaSelfKind;
  if (s == "mixed") return kDeltaMixedKinds;
  if (s == "any") return kDeltaKinds;
  throw UnknownValue("move filter must be self, mixed or any, got '" + s + "'");
}

std::vector<DeltaChild> delta_children(const LinkDiagram& d, KindMask kinds,
                                       const SearchOptions& opts) {
  std::vector<LinkDiagram> variants{d};
  std::set<std::string> seen{d.state_key()};
  for (size_t i = 0; i < variants.size() && (int)variants.size() < opts.isotopy_states;
       i++) {
    LinkDiagram cur = variants[i];
    KindMask iso = kind_bit(MoveKind::R3);
    if (opts.use_r2_add && cur.crossing_count() + 2 <= opts.crossing_cap)
      iso |= kind_bit(MoveKind::R2Add);
    for (const MoveSite& s : enumerate_sites(cur, iso)) {
      if ((int)variants.size() >= opts.isotopy_states) break;
      LinkDiagram next = apply(cur, s);
      if (seen.insert(next.state_key()).second) variants.push_back(std::move(next));
    }
  }

  std::vector<DeltaChild> out;
  std::set<std::string> child_seen;
  for (const LinkDiagram& v : variants) {
    std::vector<MoveSite> sites = enumerate_sites(v, kDeltaKinds);
    for (int i = 0; i < (int)sites.size(); i++) {
      if (!(kinds & kind_bit(sites[i].kind))) continue;
      LinkDiagram child = simplify(apply(v, sites[i]), opts.simplify_budget);
      if (child.crossing_count() > opts.crossing_cap) continue;
      if (!child_seen.insert(child.state_key()).second) continue;
      out.push_back({std::move(child), sites[i].kind, {v.pd_string(), i}});
    }
  }
  return out;
}

namespace {

std::string kind_str(MoveKind k) {
  return k == MoveKind::DeltaSelf ? "self" : "mixed";
}

} // namespace

PathwayGraph bfs_pathways(const Catalog& cat, const std::vector<std::string>& starts,
                          KindMask kinds, const SearchOptions& opts) {
  PathwayGraph g;
  std::map<std::string, std::string> name_of_state;
  int anon = 0;
  long long budget = opts.state_budget;

  auto node_name = [&](const LinkDiagram& d) {
    std::string key = d.state_key();
    auto it = name_of_state.find(key);
    if (it != name_of_state.end()) return it->second;
    std::vector<std::string> ids = cat.identify(d);
    std::string name = ids.empty() ? "~" + std::to_string(++anon) : ids.front();
    name_of_state[key] = name;
    return name;
  };

  struct QItem {
    LinkDiagram diagram;
    std::string name;
    int depth;
  };
  std::deque<QItem> queue;
  std::set<std::string> expanded;

  for (const std::string& s : starts) {
    LinkDiagram d = simplify(cat.resolve(s), opts.simplify_budget);
    std::string name = node_name(d);
    g.nodes.insert(name);
    queue.push_back({std::move(d), name, 0});
  }

  while (!queue.empty()) {
    QItem item = std::move(queue.front());
    queue.pop_front();
    if (item.depth >= opts.depth) continue;
    if (!expanded.insert(item.diagram.state_key()).second) continue;

    for (DeltaChild& ch : delta_children(item.diagram, kinds, opts)) {
      if (--budget < 0) throw ResourceLimit("search state budget exceeded");
      std::string child_name = node_name(ch.diagram);
      if (child_name != item.name) {
        PathwayEdge e;
        e.a = item.name;
        e.b = child_name;
        e.kind = kind_str(ch.kind);
        e.witness = {ch.witness};
        g.add_edge(std::move(e));
      }
      g.nodes.insert(child_name);
      queue.push_back({std::move(ch.diagram), child_name, item.depth + 1});
    }
  }
  return g;
}

bool replay_edge(const Catalog& cat, const PathwayEdge& edge, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (edge.witness.empty()) return fail("edge has no witness");
  LinkDiagram d = LinkDiagram::parse_pd(edge.witness.front().pd);
  auto ids_contain = [&](const LinkDiagram& x, const std::string& name) {
    if (name.rfind("~", 0) == 0) return cat.identify(x).empty();
    for (const std::string& n : cat.identify(x))
      if (n == name) return true;
    return false;
  };
  std::string first, second;
  if (ids_contain(d, edge.a)) {
    first = edge.a;
    second = edge.b;
  } else if (ids_contain(d, edge.b)) {
    first = edge.b;
    second = edge.a;
  } else {
    return fail("witness start identifies as neither endpoint");
  }
  LinkDiagram cur = d;
  for (size_t i = 0; i < edge.witness.size(); i++) {
    if (i > 0) cur = LinkDiagram::parse_pd(edge.witness[i].pd);
    std::vector<MoveSite> sites = enumerate_sites(cur, kDeltaKinds);
    int idx = edge.witness[i].site;
    if (idx < 0 || idx >= (int)sites.size()) return fail("witness site out of range");
    if (kind_str(sites[(size_t)idx].kind) != edge.kind)
      return fail("witness site has kind " + std::string(kind_name(sites[(size_t)idx].kind)));
    cur = apply(cur, sites[(size_t)idx]);
  }
  cur = simplify(cur);
  if (!ids_contain(cur, second)) return fail("witness end does not identify as " + second);
  return true;
}

// ---------------------------------------------------------------------------
// evidence cache

std::string default_evidence_path() {
  if (const char* env = std::getenv("DELTALINK_EVIDENCE")) return env;
#ifdef DELTALINK_DATA_DIR
  return std::string(DELTALINK_DATA_DIR) + "/evidence.txt";
#else
  return "data/evidence.txt";
#endif
}

void save_evidence(const PathwayGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write evidence file '" + path + "'");
  for (const PathwayEdge& e : g.edges) {
    out << "edge: " << e.a << "|" << e.b << " ; kind=" << e.kind << " ; witness=";
    for (size_t i = 0; i < e.witness.size(); i++) {
      if (i) out << ",";
      out << e.witness[i].pd << "@" << e.witness[i].site;
    }
    out << "\n";
  }
}

PathwayGraph load_evidence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open evidence file '" + path + "'");
  PathwayGraph g;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    std::string t = line;
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("edge:", 0) != 0)
      throw ParseError("evidence line " + std::to_string(line_no) +
                       ": expected 'edge:'");
    PathwayEdge e;
    size_t semi1 = t.find(';');
    size_t semi2 = t.find(';', semi1 == std::string::npos ? 0 : semi1 + 1);
    if (semi1 == std::string::npos || semi2 == std::string::npos)
      throw ParseError("evidence line " + std::to_string(line_no) + ": bad format");
    std::string names = t.substr(5, semi1 - 5);
    size_t bar = names.find('|');
    if (bar == std::string::npos)
      throw ParseError("evidence line " + std::to_string(line_no) + ": missing '|'");
    auto strip = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    e.a = strip(names.substr(0, bar));
    e.b = strip(names.substr(bar + 1));
    std::string kind_field = strip(t.substr(semi1 + 1, semi2 - semi1 - 1));
    if (kind_field.rfind("kind=", 0) != 0)
      throw ParseError("evidence line " + std::to_string(line_no) + ": missing kind");
    e.kind = kind_field.substr(5);
    std::string wit = strip(t.substr(semi2 + 1));
    if (wit.rfind("witness=", 0) != 0)
      throw ParseError("evidence line " + std::to_string(line_no) + ": missing witness");
    wit = wit.substr(8);
    // steps are "<pd>@<index>" separated by commas; pd codes contain commas,
    // so split after the digits following each '@'
    size_t pos = 0;
    while (pos < wit.size()) {
      size_t at = wit.find('@', pos);
      if (at == std::string::npos)
        throw ParseError("evidence line " + std::to_string(line_no) + ": bad witness");
      size_t j = at + 1;
      while (j < wit.size() && std::isdigit((unsigned char)wit[j])) j++;
      WitnessStep step;
      step.pd = strip(wit.substr(pos, at - pos));
      step.site = std::atoi(wit.substr(at + 1, j - at - 1).c_str());
      e.witness.push_back(std::move(step));
      pos = (j < wit.size() && wit[j] == ',') ? j + 1 : j;
    }
    g.add_edge(std::move(e));
  }
  return g;
}

// ---------------------------------------------------------------------------
// bounds

namespace {

int component_arf_sum(const Catalog& cat, const CatalogEntry& e) {
  int sum = 0;
  for (int i = 0; i < e.diagram.component_count(); i++) {
    auto a = arf(e.diagram.sublink({i}), &cat.cache());
    if (!a) throw NotProper("component of " + e.name + " is not proper");
    sum += *a;
  }
  return sum % 2;
}

} // namespace

int parity_self(const Catalog& cat, const std::string& a, const std::string& b) {
  const CatalogEntry& ea = cat.at(a);
  const CatalogEntry& eb = cat.at(b);
  if (ea.diagram.component_count() != eb.diagram.component_count())
    throw NotSelfEquivalent(a + " and " + b + " have different component counts");
  if (ea.deltas && eb.deltas) {
    if (ea.deltas->delta1 != eb.deltas->delta1 ||
        ea.deltas->delta2 != eb.deltas->delta2)
      throw NotSelfEquivalent(a + " and " + b + " lie in different (delta1,delta2) families");
  } else if (linking_matrix(ea.diagram).canonical_class() !=
             linking_matrix(eb.diagram).canonical_class()) {
    throw NotSelfEquivalent(a + " and " + b + " have different linking data");
  }
  return (component_arf_sum(cat, ea) + component_arf_sum(cat, eb)) % 2;
}

int parity_proper(const Catalog& cat, const std::string& a, const std::string& b) {
  const CatalogEntry& ea = cat.at(a);
  const CatalogEntry& eb = cat.at(b);
  if (!ea.arf_computed) throw NotProper(a + " is not a proper link");
  if (!eb.arf_computed) throw NotProper(b + " is not a proper link");
  return (*ea.arf_computed + *eb.arf_computed) % 2;
}

int lower_self(const Catalog& cat, const std::string& a, const std::string& b) {
  auto sum_u = [&](const CatalogEntry& e) {
    if (e.components.empty())
      throw UnknownComponentValue(e.name + " has no component list");
    int sum = 0;
    for (const std::string& k : e.components) {
      auto u = cat.knot_u_delta(k);
      if (!u)
        throw UnknownComponentValue("no u_delta value for component knot " + k);
      sum += *u;
    }
    return sum;
  };
  int diff = sum_u(cat.at(a)) - sum_u(cat.at(b));
  return diff < 0 ? -diff : diff;
}

bool mixed_equivalent(const LinkDiagram& d1, const LinkDiagram& d2) {
  if (d1.component_count() != d2.component_count()) return false;
  return linking_matrix(d1).canonical_class() == linking_matrix(d2).canonical_class();
}

int split_parity(const Catalog& cat, const std::string& name) {
  const CatalogEntry& e = cat.at(name);
  if (!linking_matrix(e.diagram).all_zero())
    throw NotAlgebraicallySplit(name + " is not algebraically split");
  if (!e.arf_computed) throw NotProper(name + " is not proper");
  return (*e.arf_computed + component_arf_sum(cat, e)) % 2;
}

bool is_split_entry(const Catalog& cat, const std::string& name) {
  if (name.rfind("trivial", 0) == 0) return true;
  const CatalogEntry& e = cat.at(name);
  if (e.diagram.crossing_count() == 0) return true;
  if (e.components.empty()) return false;
  LinkDiagram split(std::vector<CrossingTuple>{}, 0);
  for (const std::string& k : e.components)
    split = LinkDiagram::disjoint_union(split, cat.resolve(k));
  return fingerprint(split, &cat.cache()) == e.fp;
}

PartialBound split_lower(const Catalog& cat, const std::string& name) {
  const CatalogEntry& e = cat.at(name);
  PartialBound out;
  if (!is_split_entry(cat, name)) out.value = 1;

  if (e.u_delta) {
    bool have_comps = !e.components.empty();
    int sum = 0;
    if (have_comps)
      for (const std::string& k : e.components) {
        auto u = cat.knot_u_delta(k);
        if (!u) {
          have_comps = false;
          break;
        }
        sum += *u;
      }
    if (have_comps)
      out.value = std::max(out.value, e.u_delta->lower - sum);
    else {
      out.partial = true;
      out.missing.push_back("component u_delta values");
    }
  } else {
    out.partial = true;
    out.missing.push_back("u_delta(" + name + ")");
  }

  if (e.sp) {
    out.value = std::max(out.value, (*e.sp + 1) / 2);
  } else {
    out.partial = true;
    out.missing.push_back("sp(" + name + ")");
  }
  return out;
}

// ---------------------------------------------------------------------------
// clasp words

int clasp_split_upper(const ClaspWord& w) {
  std::string word = w.symbols;
  long long balance = 0;
  for (char ch : word) {
    if (ch == '+') balance++;
    else if (ch == '-') balance--;
    else if (ch != 'x') throw Error("clasp word symbols are '+', '-' and 'x'");
  }
  if (balance != 0)
    throw NonzeroLinking("clasp word has nonzero signed sum; only |sum| clasps remain");

  // greedy nearest-opposite pairing: repeatedly cancel the pair of opposite
  // clasps with the fewest symbols between them, paying one move per symbol
  // crossed; adjacent pairs are free
  int cost = 0;
  for (;;) {
    int n = (int)word.size();
    int best_gap = -1, best_i = -1, best_j = -1;
    for (int i = 0; i < n; i++) {
      if (word[(size_t)i] != '+' && word[(size_t)i] != '-') continue;
      for (int j = i + 1; j < n; j++) {
        bool opposite = (word[(size_t)i] == '+' && word[(size_t)j] == '-') ||
                        (word[(size_t)i] == '-' && word[(size_t)j] == '+');
        if (!opposite) continue;
        int gap = j - i - 1;
        if (best_gap < 0 || gap < best_gap) {
          best_gap = gap;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_gap < 0) break;
    cost += best_gap;
    std::string next;
    for (int k = 0; k < n; k++)
      if (k != best_i && k != best_j) next += word[(size_t)k];
    word = std::move(next);
  }
  return cost;
}

// ---------------------------------------------------------------------------
// reports

DistanceReport distance_between(const Catalog& cat, const PathwayGraph& evidence,
                                const std::string& a, const std::string& b,
                                const std::string& moves) {
  DistanceReport r;
  if (a == b) {
    r.bound.add_upper(0);
    r.derivation.push_back("identical links: distance 0");
    return r;
  }
  bool self_edges = moves == "self" || moves == "any";
  bool mixed_edges = moves == "mixed" || moves == "any";
  if (!self_edges && !mixed_edges) throw UnknownValue("bad move filter " + moves);

  const CatalogEntry& ea = cat.at(a);
  const CatalogEntry& eb = cat.at(b);

  if (moves == "self") {
    int p = parity_self(cat, a, b); // throws NotSelfEquivalent when applicable
    r.bound.add_parity(p);
    r.derivation.push_back("parity from component Arf sums: " + std::to_string(p));
    try {
      int l = lower_self(cat, a, b);
      if (l > 0) {
        r.bound.add_lower(l);
        r.derivation.push_back("lower bound |sum u_delta - sum u_delta'| = " +
                               std::to_string(l));
      }
    } catch (const UnknownComponentValue&) {
      r.derivation.push_back("component u_delta values unavailable");
    }
  } else {
    if (!mixed_equivalent(ea.diagram, eb.diagram))
      throw NotAlgebraicallySplit(a + " and " + b +
                                  " have different pairwise linking numbers");
    if (ea.arf_computed && eb.arf_computed) {
      int p = (*ea.arf_computed + *eb.arf_computed) % 2;
      r.bound.add_parity(p);
      r.derivation.push_back("parity from Arf invariants: " + std::to_string(p));
    }
  }

  if (!(ea.fp == eb.fp)) {
    r.bound.add_lower(1);
    r.derivation.push_back("distinct fingerprints: distance >= 1");
  }

  if (auto u = evidence.distance(a, b, self_edges, mixed_edges)) {
    r.bound.add_upper(*u);
    r.derivation.push_back("witnessed pathway of length " + std::to_string(*u));
  } else {
    r.derivation.push_back("no witnessed pathway in evidence");
  }
  r.bound.check();
  return r;
}

SplitReport splitting_bounds(const Catalog& cat, const PathwayGraph& evidence,
                             const std::string& name) {
  const CatalogEntry& e = cat.at(name);
  if (!linking_matrix(e.diagram).all_zero())
    throw NotAlgebraicallySplit(name + " is not algebraically split");

  SplitReport r;
  if (is_split_entry(cat, name)) {
    r.sp_delta.add_upper(0);
    r.sp_mdelta.add_upper(0);
    r.derivation.push_back(name + " is already split");
    return r;
  }
  r.sp_delta.add_lower(1);
  r.sp_mdelta.add_lower(1);
  r.derivation.push_back("non-split: both numbers >= 1");

  int p = split_parity(cat, name);
  r.sp_mdelta.add_parity(p);
  r.derivation.push_back("mixed splitting parity arf(L)+sum arf(L_i) = " +
                         std::to_string(p));

  PartialBound pl = split_lower(cat, name);
  if (pl.value > 0) {
    r.sp_mdelta.add_lower(pl.value);
    r.derivation.push_back("mixed splitting lower bound " + std::to_string(pl.value) +
                           (pl.partial ? " (partial evidence)" : ""));
  }

  // witnessed upper bounds: nearest split node in the evidence graph
  auto nearest_split = [&](bool self_edges, bool mixed_edges) -> std::optional<int> {
    auto dist = evidence.distances_from(name, self_edges, mixed_edges);
    std::optional<int> best;
    for (const auto& [node, d] : dist) {
      if (node.rfind("~", 0) == 0 || node == name) continue;
      bool split = node.rfind("trivial", 0) == 0 ||
                   (cat.has(node) && is_split_entry(cat, node));
      if (split && (!best || d < *best)) best = d;
    }
    return best;
  };
  if (auto u = nearest_split(true, true)) {
    r.sp_delta.add_upper(*u);
    r.derivation.push_back("witnessed Delta-pathway to a split link: length " +
                           std::to_string(*u));
  }
  if (auto u = nearest_split(false, true)) {
    r.sp_mdelta.add_upper(*u);
    r.derivation.push_back("witnessed mixed pathway to a split link: length " +
                           std::to_string(*u));
  }
  // a mixed pathway bound also serves the unrestricted number
  if (r.sp_mdelta.upper) r.sp_delta.add_upper(*r.sp_mdelta.upper);
  return r;
}

// ---------------------------------------------------------------------------
// tables

namespace {

const std::vector<std::string> kFig2Names = {"trivial2", "L8a2", "L8a4"};
const std::vector<std::string> kTab1Names = {"mL5a1", "L7n2", "mL8n2", "L9n3",
                                             "L7a1",  "L9n8", "L9a3",  "L8a1",
                                             "L9a1",  "L9n6", "L9a2"};
const std::vector<std::string> kTab2Names = {"L7a3", "L7a4",   "L9a4",   "L9a8",
                                             "mL9a9", "mL9a10", "L9n2", "mL9n5"};
const std::vector<std::string> kTab3Names = {
    "L5a1",  "L6a4",  "L7a1",  "L7a3",  "L7a4",  "L7n2",  "L8a1",  "L8a2",  "L8a4",
    "L8n2",  "L9a1",  "L9a2",  "L9a3",  "L9a4",  "L9a8",  "L9a9",  "L9a10", "L9a14",
    "L9a15", "L9a17", "L9a18", "L9a35", "L9a38", "L9a40", "L9a42", "L9a53", "L9a54",
    "L9n2",  "L9n3",  "L9n5",  "L9n6",  "L9n8",  "L9n25", "L9n27"};

std::string data_file(const std::string& name) {
#ifdef DELTALINK_DATA_DIR
  return std::string(DELTALINK_DATA_DIR) + "/" + name;
#else
  return "data/" + name;
#endif
}

// printed cell semantics: "n" exact; "n*" upper bound with the parity of n;
// "a-b" range; "a or b" range with parity
BoundInterval parse_printed(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  if (!t.empty() && t.back() == '*') {
    int n = std::atoi(t.substr(0, t.size() - 1).c_str());
    return {1, n, n % 2};
  }
  size_t orp = t.find("or");
  if (orp != std::string::npos) {
    int a = std::atoi(t.substr(0, orp).c_str());
    int b = std::atoi(t.substr(orp + 2).c_str());
    return {a, b, a % 2};
  }
  size_t dash = t.find('-');
  if (dash != std::string::npos && dash > 0) {
    int a = std::atoi(t.substr(0, dash).c_str());
    int b = std::atoi(t.substr(dash + 1).c_str());
    BoundInterval bi{a, b, std::nullopt};
    if ((b - a) % 2 == 0) bi.parity = a % 2; // tentative, as printed
    return bi;
  }
  int n = std::atoi(t.c_str());
  return BoundInterval::exactly(n);
}

std::map<std::pair<std::string, std::string>, std::string> load_printed_cells(
    const std::string& file) {
  std::map<std::pair<std::string, std::string>, std::string> out;
  std::ifstream in(data_file(file));
  if (!in) throw Error("cannot open printed-table file " + data_file(file));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string a, b, v;
    if (!std::getline(is, a, ';') || !std::getline(is, b, ';') || !std::getline(is, v))
      throw ParseError("bad printed-table line: " + line);
    auto strip = [](std::string s) {
      size_t x = s.find_first_not_of(" \t");
      size_t y = s.find_last_not_of(" \t");
      return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
    };
    out[{strip(a), strip(b)}] = strip(v);
  }
  return out;
}

std::string cell_for(const Catalog& cat, const PathwayGraph& ev, const std::string& a,
                     const std::string& b, std::string* annotation) {
  try {
    DistanceReport r = distance_between(cat, ev, a, b, "self");
    if (auto v = r.bound.exact_value()) {
      *annotation = "exact";
      return std::to_string(*v);
    }
    if (r.bound.upper) {
      if (r.bound.parity && *r.bound.upper % 2 == *r.bound.parity &&
          r.bound.lower <= 1) {
        *annotation = "upper-bound";
        return std::to_string(*r.bound.upper) + "*";
      }
      *annotation = "range";
      return r.bound.str();
    }
    *annotation = "lower-only";
    return r.bound.str();
  } catch (const Error& err) {
    *annotation = std::string("error: ") + err.what();
    return "?";
  }
}

TableDoc family_table(const Catalog& cat, const PathwayGraph& ev,
                      const std::vector<std::string>& names,
                      const std::string& printed_file, const std::string& title) {
  TableDoc doc;
  doc.title = title;
  doc.header.push_back("");
  for (const std::string& n : names) doc.header.push_back(n);

  auto printed = load_printed_cells(printed_file);

  for (size_t i = 0; i < names.size(); i++) {
    std::vector<std::string> row{names[i]};
    for (size_t j = 0; j < names.size(); j++) {
      if (j < i) {
        row.push_back("-");
        continue;
      }
      if (j == i) {
        row.push_back("0");
        continue;
      }
      std::string ann;
      std::string cell = cell_for(cat, ev, names[i], names[j], &ann);
      row.push_back(cell);

      auto it = printed.find({names[i], names[j]});
      if (it == printed.end()) it = printed.find({names[j], names[i]});
      if (it != printed.end()) {
        BoundInterval want = parse_printed(it->second);
        BoundInterval got = parse_printed(cell == "?" ? "0-99" : cell);
        std::string verdict;
        if (cell == it->second)
          verdict = "match";
        else if (got.contains(want))
          verdict = "consistent";
        else if (want.contains(got))
          verdict = "sharper";
        else
          verdict = "MISMATCH";
        doc.diffs.push_back(names[i] + " vs " + names[j] + ": computed " + cell +
                            " [" + ann + "], printed " + it->second + " -> " + verdict);
      }
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

} // namespace

const std::vector<std::string>& family_table_names(const std::string& which) {
  if (which == "fig2") return kFig2Names;
  if (which == "tab1") return kTab1Names;
  if (which == "tab2") return kTab2Names;
  if (which == "tab3") return kTab3Names;
  throw UnknownValue("unknown table '" + which + "'");
}

TableDoc reproduce_table(const Catalog& cat, const PathwayGraph& evidence,
                         const std::string& which) {
  if (which == "fig2")
    return family_table(cat, evidence, kFig2Names, "paper_fig2.txt",
                        "self Delta-Gordian distances, family (0,0)");
  if (which == "tab1")
    return family_table(cat, evidence, kTab1Names, "paper_table1.txt",
                        "self Delta-Gordian distances, family (0,+-1)");
  if (which == "tab2")
    return family_table(cat, evidence, kTab2Names, "paper_table2.txt",
                        "self Delta-Gordian distances, family (0,+-2)");
  if (which != "tab3") throw UnknownValue("unknown table '" + which + "'");

  TableDoc doc;
  doc.title = "Delta-splitting numbers for algebraically split links";
  doc.header = {"link", "components", "sp_delta", "sp_mdelta",
                "u_delta", "sum_u_delta", "sp", "arf", "sum_arf"};
  for (const std::string& name : kTab3Names) {
    const CatalogEntry& e = cat.at(name);
    SplitReport r = splitting_bounds(cat, evidence, name);
    std::vector<std::string> row;
    row.push_back(name);
    std::string comps;
    for (size_t i = 0; i < e.components.size(); i++)
      comps += (i ? "," : "") + e.components[i];
    row.push_back(comps);
    row.push_back(r.sp_delta.str());
    row.push_back(r.sp_mdelta.str());
    row.push_back(e.u_delta ? e.u_delta->str() : "?");
    int sum_u = 0;
    bool have_u = true;
    for (const std::string& k : e.components) {
      auto u = cat.knot_u_delta(k);
      if (!u) have_u = false;
      else sum_u += *u;
    }
    row.push_back(have_u ? std::to_string(sum_u) : "?");
    row.push_back(e.sp ? std::to_string(*e.sp) : "?");
    row.push_back(e.arf_computed ? std::to_string(*e.arf_computed) : "undefined");
    row.push_back(std::to_string(component_arf_sum(cat, e)));
    doc.rows.push_back(std::move(row));

    // diff against the stored printed columns
    auto diff_col = [&](const char* col, const std::optional<BoundInterval>& printed,
                        const DistanceBound& got) {
      if (!printed) return;
      BoundInterval mine = got.as_interval();
      std::string verdict = mine.contains(*printed)
                                ? (mine.exact() && printed->exact() ? "match" : "contains")
                                : "MISMATCH";
      doc.diffs.push_back(name + " " + col + ": computed " + got.str() +
                          ", printed " + printed->str() + " -> " + verdict);
    };
    diff_col("sp_delta", e.sp_delta, r.sp_delta);
    diff_col("sp_mdelta", e.sp_mdelta, r.sp_mdelta);
  }
  return doc;
}

std::string TableDoc::to_csv() const {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); i++) {
      if (i) os << ",";
      bool quote = cells[i].find(',') != std::string::npos;
      if (quote) os << '"';
      os << cells[i];
      if (quote) os << '"';
    }
    os << "\n";
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  return os.str();
}

std::string TableDoc::to_md() const {
  std::ostringstream os;
  os << "# " << title << "\n\n|";
  for (const std::string& h : header) os << " " << h << " |";
  os << "\n|";
  for (size_t i = 0; i < header.size(); i++) os << " --- |";
  os << "\n";
  for (const auto& r : rows) {
    os << "|";
    for (const std::string& c : r) os << " " << c << " |";
    os << "\n";
  }
  if (!diffs.empty()) {
    os << "\nDiff against the printed values:\n\n";
    for (const std::string& d : diffs) os << "- " << d << "\n";
  }
  return os.str();
}

std::string graph_dot(const Catalog& cat, const PathwayGraph& evidence,
                      const std::string& which) {
  (void)cat;
  std::set<std::string> keep;
  std::string kind;
  if (which == "fig3") {
    keep.insert(kTab1Names.begin(), kTab1Names.end());
    kind = "self";
  } else if (which == "fig4") {
    keep.insert(kTab2Names.begin(), kTab2Names.end());
    kind = "self";
  } else if (which == "fig9") {
    kind = "mixed";
  } else {
    throw UnknownValue("unknown graph '" + which + "'");
  }

  std::ostringstream os;
  os << "graph \"" << which << "\" {\n";
  os << "  node [shape=ellipse];\n";
  for (const PathwayEdge& e : evidence.edges) {
    if (e.kind != kind) continue;
    if (!keep.empty() && (!keep.count(e.a) || !keep.count(e.b))) continue;
    os << "  \"" << e.a << "\" -- \"" << e.b << "\" [kind=" << e.kind << "];\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace deltalink
