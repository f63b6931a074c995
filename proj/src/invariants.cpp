#include "deltalink/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "deltalink/moves.hpp"

namespace deltalink {

int LinkingMatrix::total() const {
  int t = 0;
  for (int i = 0; i < m; i++)
    for (int j = i + 1; j < m; j++) t += entries[(size_t)i][(size_t)j];
  return t;
}

bool LinkingMatrix::all_zero() const {
  for (int i = 0; i < m; i++)
    for (int j = 0; j < m; j++)
      if (entries[(size_t)i][(size_t)j] != 0) return false;
  return true;
}

std::string LinkingMatrix::canonical_class() const {
  std::vector<int> perm((size_t)m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    for (int signs = 0; signs < (1 << std::max(0, m - 1)); signs++) {
      std::vector<int> sgn((size_t)m, 1);
      for (int i = 1; i < m; i++)
        if (signs & (1 << (i - 1))) sgn[(size_t)i] = -1;
      std::vector<int> flat;
      flat.reserve((size_t)(m * (m - 1) / 2));
      for (int i = 0; i < m; i++)
        for (int j = i + 1; j < m; j++)
          flat.push_back(sgn[(size_t)i] * sgn[(size_t)j] *
                         entries[(size_t)perm[(size_t)i]][(size_t)perm[(size_t)j]]);
      if (best.empty() || flat < best) best = std::move(flat);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::ostringstream os;
  os << m << ":";
  for (size_t i = 0; i < best.size(); i++) os << best[i] << (i + 1 < best.size() ? "," : "");
  return os.str();
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  LinkingMatrix lm;
  lm.m = d.component_count();
  lm.entries.assign((size_t)lm.m, std::vector<int>((size_t)lm.m, 0));
  std::vector<std::vector<int>> twice = lm.entries;
  for (int c = 0; c < d.crossing_count(); c++) {
    int i = d.component_of(c, 0);
    int j = d.component_of(c, 1);
    if (i == j) continue;
    twice[(size_t)i][(size_t)j] += d.sign(c);
    twice[(size_t)j][(size_t)i] += d.sign(c);
  }
  for (int i = 0; i < lm.m; i++)
    for (int j = 0; j < lm.m; j++) lm.entries[(size_t)i][(size_t)j] = twice[(size_t)i][(size_t)j] / 2;
  return lm;
}

// ---------------------------------------------------------------------------
// Conway polynomial

namespace {

int piece_count(const LinkDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return 0;
  std::vector<int> parent((size_t)n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[(size_t)x] != x) {
      parent[(size_t)x] = parent[(size_t)parent[(size_t)x]];
      x = parent[(size_t)x];
    }
    return x;
  };
  for (Arc a : d.arcs()) {
    const auto& e = d.arc_ends(a);
    parent[(size_t)find(e[0].crossing)] = find(e[1].crossing);
  }
  int k = 0;
  for (int c = 0; c < n; c++)
    if (find(c) == c) k++;
  return k;
}

LinkDiagram reduce_r1r2(const LinkDiagram& d) {
  LinkDiagram cur = d;
  for (;;) {
    std::vector<MoveSite> red = enumerate_sites(cur, kReductionKinds);
    if (red.empty()) return cur;
    cur = apply(cur, red[0]);
  }
}

// First crossing along the basepoint walk whose first visit happens on the
// under strand. -1 when the diagram is descending.
int first_bad_crossing(const LinkDiagram& d) {
  std::vector<char> seen((size_t)d.crossing_count(), 0);
  for (const auto& cycle : d.component_cycles())
    for (Arc a : cycle) {
      Endpoint head = d.arc_ends(a)[0];
      if (!d.slot_is_inflow(head.crossing, head.slot)) head = d.arc_ends(a)[1];
      if (seen[(size_t)head.crossing]) continue;
      seen[(size_t)head.crossing] = 1;
      if (head.slot == 0) return head.crossing; // arrived on the under strand
    }
  return -1;
}

LinkDiagram switch_crossing(const LinkDiagram& d, int c) {
  std::vector<CrossingTuple> tuples = d.crossings();
  const CrossingTuple& t = tuples[(size_t)c];
  tuples[(size_t)c] = d.over_in_slot(c) == 3
                          ? CrossingTuple{t[3], t[0], t[1], t[2]}
                          : CrossingTuple{t[1], t[2], t[3], t[0]};
  return d.with_tuples(std::move(tuples), d.closed_components());
}

LinkDiagram smooth_oriented(const LinkDiagram& d, int c) {
  // the orientation-respecting smoothing joins each inflow to the adjacent
  // outflow
  Splice sp;
  sp.crossing = c;
  if (d.sign(c) > 0)
    sp.partner = {1, 0, 3, 2};
  else
    sp.partner = {3, 2, 1, 0};
  return d.resolved({sp});
}

struct SkeinContext {
  InvariantCache* cache;
  long long budget;
  long long nodes = 0;
};

ZPoly conway_rec(const LinkDiagram& d0, SkeinContext& ctx) {
  if (++ctx.nodes > ctx.budget)
    throw ResourceLimit("skein recursion budget exceeded");

  LinkDiagram d = reduce_r1r2(d0);

  if (d.crossing_count() == 0)
    return d.component_count() == 1 ? ZPoly::constant(1) : ZPoly::zero();
  if (d.closed_components() > 0 || piece_count(d) > 1) return ZPoly::zero();

  std::string key;
  const bool memoize = ctx.cache && d.crossing_count() >= 6;
  if (memoize) {
    key = d.canonical_key(false, false);
    auto it = ctx.cache->conway.find(key);
    if (it != ctx.cache->conway.end()) return it->second;
  }

  int bad = first_bad_crossing(d);
  ZPoly result;
  if (bad < 0) {
    // descending: unknot or a split stack of components
    result = d.component_count() == 1 ? ZPoly::constant(1) : ZPoly::zero();
  } else {
    ZPoly switched = conway_rec(switch_crossing(d, bad), ctx);
    ZPoly smoothed = conway_rec(smooth_oriented(d, bad), ctx);
    result = d.sign(bad) > 0 ? switched + smoothed.shifted(1)
                             : switched - smoothed.shifted(1);
  }
  if (memoize) ctx.cache->conway[key] = result;
  return result;
}

} // namespace

ZPoly conway(const LinkDiagram& d, InvariantCache* cache, long long budget) {
  SkeinContext ctx{cache, budget};
  return conway_rec(d, ctx);
}

// ---------------------------------------------------------------------------
// Kauffman bracket

namespace {

Laurent bracket_delta() { return Laurent(-2, {-1, 0, 0, 0, -1}); } // -A^2 - A^-2

Laurent bracket_rec(const LinkDiagram& d, SkeinContext& ctx) {
  if (++ctx.nodes > ctx.budget)
    throw ResourceLimit("bracket recursion budget exceeded");

  if (d.crossing_count() == 0) {
    int loops = d.component_count();
    Laurent r = Laurent::mono(1, 0);
    for (int i = 1; i < loops; i++) r = r * bracket_delta();
    return r;
  }

  std::string key;
  const bool memoize = ctx.cache && d.crossing_count() >= 6;
  if (memoize) {
    key = d.canonical_key(true, false);
    auto it = ctx.cache->bracket.find(key);
    if (it != ctx.cache->bracket.end()) return it->second;
  }

  Splice a_sp{d.crossing_count() - 1, {1, 0, 3, 2}};
  Splice b_sp{d.crossing_count() - 1, {3, 2, 1, 0}};
  Laurent result =
      Laurent::mono(1, 1) * bracket_rec(d.resolved_unoriented({a_sp}), ctx) +
      Laurent::mono(1, -1) * bracket_rec(d.resolved_unoriented({b_sp}), ctx);
  if (memoize) ctx.cache->bracket[key] = result;
  return result;
}

} // namespace

Laurent bracket(const LinkDiagram& d, InvariantCache* cache, long long budget) {
  SkeinContext ctx{cache, budget};
  return bracket_rec(d, ctx);
}

// ---------------------------------------------------------------------------
// Arf, delta invariants, fingerprint

std::optional<int> arf(const LinkDiagram& d, InvariantCache* cache) {
  LinkingMatrix lm = linking_matrix(d);
  if (lm.total() % 2 != 0) return std::nullopt; // not proper
  const int m = d.component_count();
  ZPoly nabla = conway(d, cache);
  if (m == 1) return (int)(((nabla.coeff(2) % 2) + 2) % 2);
  long long total = nabla.coeff(m + 1);
  for (int i = 0; i < m; i++)
    total += conway(d.sublink({i}), cache).coeff(2);
  return (int)(((total % 2) + 2) % 2);
}

FamilyKey delta_invariants(const LinkDiagram& d, InvariantCache* cache) {
  if (d.component_count() != 2)
    throw WrongComponentCount("delta invariants need a 2-component link");
  ZPoly nabla = conway(d, cache);
  long long a2_comps = conway(d.sublink({0}), cache).coeff(2) +
                       conway(d.sublink({1}), cache).coeff(2);
  FamilyKey k;
  k.delta1 = nabla.coeff(1);
  k.delta2 = nabla.coeff(3) - nabla.coeff(2) * a2_comps;
  return k;
}

bool Fingerprint::operator<(const Fingerprint& o) const {
  auto tie = [](const Fingerprint& f) {
    return std::tie(f.m, f.linking_class, f.conway_orients, f.component_polys,
                    f.bracket_orients);
  };
  return tie(*this) < tie(o);
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "m=" << m << " lk[" << linking_class << "]";
  os << " conway{";
  for (size_t i = 0; i < conway_orients.size(); i++)
    os << (i ? " | " : "") << conway_orients[i];
  os << "} comps{";
  for (size_t i = 0; i < component_polys.size(); i++)
    os << (i ? " | " : "") << component_polys[i];
  os << "} bracket{";
  for (size_t i = 0; i < bracket_orients.size(); i++)
    os << (i ? " | " : "") << bracket_orients[i];
  os << "}";
  return os.str();
}

Fingerprint fingerprint(const LinkDiagram& d, InvariantCache* cache) {
  std::string state;
  if (cache) {
    state = d.state_key();
    auto it = cache->fingerprints.find(state);
    if (it != cache->fingerprints.end()) return it->second;
  }

  Fingerprint fp;
  fp.m = d.component_count();
  fp.linking_class = linking_matrix(d).canonical_class();

  Laurent br = bracket(d, cache);

  const int ns = d.strand_component_count();
  const int free_flips = std::max(0, ns - 1);
  for (int mask = 0; mask < (1 << free_flips); mask++) {
    std::vector<int> flip;
    for (int i = 0; i < free_flips; i++)
      if (mask & (1 << i)) flip.push_back(i + 1);
    LinkDiagram rd = flip.empty() ? d : d.reversed(flip);
    fp.conway_orients.push_back(conway(rd, cache).str());
    int w = rd.writhe();
    Laurent f = Laurent::mono((w % 2 == 0) ? 1 : -1, -3 * w) * br;
    fp.bracket_orients.push_back(f.str());
  }
  std::sort(fp.conway_orients.begin(), fp.conway_orients.end());
  fp.conway_orients.erase(
      std::unique(fp.conway_orients.begin(), fp.conway_orients.end()),
      fp.conway_orients.end());
  std::sort(fp.bracket_orients.begin(), fp.bracket_orients.end());
  fp.bracket_orients.erase(
      std::unique(fp.bracket_orients.begin(), fp.bracket_orients.end()),
      fp.bracket_orients.end());

  for (int i = 0; i < fp.m; i++)
    fp.component_polys.push_back(conway(d.sublink({i}), cache).str());
  std::sort(fp.component_polys.begin(), fp.component_polys.end());

  if (cache) cache->fingerprints[state] = fp;
  return fp;
}

} // namespace deltalink
