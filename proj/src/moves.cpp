#include "deltalink/moves.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace deltalink {

const char* kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1Reduce: return "R1_reduce";
    case MoveKind::R1Add: return "R1_add";
    case MoveKind::R2Reduce: return "R2_reduce";
    case MoveKind::R2Add: return "R2_add";
    case MoveKind::R3: return "R3";
    case MoveKind::DeltaSelf: return "delta_self";
    case MoveKind::DeltaMixed2: return "delta_mixed2";
    case MoveKind::DeltaMixed3: return "delta_mixed3";
  }
  return "?";
}

namespace {

// Build a crossing tuple from oriented passage data.
// Positive crossings carry the over strand from slot 3 to slot 1.
CrossingTuple make_tuple(Arc u_in, Arc u_out, Arc o_in, Arc o_out, int sign) {
  if (sign > 0) return {u_in, o_out, u_out, o_in};
  return {u_in, o_in, u_out, o_out};
}

bool slot_is_over(int slot) { return slot == 1 || slot == 3; }

struct TrigonSide {
  Arc arc = 0;        // boundary arc of this side
  int near_slot = -1; // slot at corner k
  int far_slot = -1;  // slot at corner k+1
  bool forward = false; // strand runs corner k -> corner k+1
  Arc ext_near = 0;   // external continuation at corner k
  Arc ext_far = 0;    // external continuation at corner k+1
};

// Trigon geometry: corners 0,1,2 with side k between corners k and k+1.
struct Trigon {
  std::array<int, 3> corner{};
  std::array<TrigonSide, 3> side{};

  static bool build(const LinkDiagram& d, const Face& f, Trigon& out) {
    if (f.degree() != 3) return false;
    std::set<int> cs;
    std::set<Arc> as;
    for (int k = 0; k < 3; k++) {
      cs.insert(f.corners[(size_t)k].crossing);
      as.insert(f.boundary[(size_t)k].first);
    }
    if (cs.size() != 3 || as.size() != 3) return false;
    for (int k = 0; k < 3; k++)
      out.corner[(size_t)k] = f.corners[(size_t)k].crossing;
    for (int k = 0; k < 3; k++) {
      TrigonSide& s = out.side[(size_t)k];
      s.arc = f.boundary[(size_t)k].first;
      s.near_slot = f.corners[(size_t)k].slot;
      // the face step leaves this corner along the arc and turns; undo the turn
      s.far_slot = (f.corners[(size_t)(k + 1) % 3].slot + 3) % 4;
      int far_corner = out.corner_at(k + 1);
      Endpoint head = d.arc_ends(s.arc)[0];
      if (!d.slot_is_inflow(head.crossing, head.slot)) head = d.arc_ends(s.arc)[1];
      s.forward = head.crossing == far_corner && head.slot == s.far_slot;
      s.ext_near = d.crossings()[(size_t)out.corner[(size_t)k]][(s.near_slot + 2) % 4];
      s.ext_far = d.crossings()[(size_t)far_corner][(s.far_slot + 2) % 4];
    }
    return true;
  }

  int corner_at(int k) const { return corner[(size_t)(k % 3)]; }

  // Over-passage count per side strand: {1,1,1} is the cyclic (Delta)
  // pattern, {2,1,0} the ordered (R3) pattern.
  std::array<int, 3> over_counts() const {
    std::array<int, 3> n{};
    for (int k = 0; k < 3; k++)
      n[(size_t)k] = (slot_is_over(side[(size_t)k].near_slot) ? 1 : 0) +
                     (slot_is_over(side[(size_t)k].far_slot) ? 1 : 0);
    return n;
  }
  bool is_cyclic() const {
    auto n = over_counts();
    return n[0] == 1 && n[1] == 1 && n[2] == 1;
  }
};

MoveKind classify_trigon(const LinkDiagram& d, const Trigon& t) {
  if (!t.is_cyclic()) return MoveKind::R3;
  std::set<int> comps;
  for (int k = 0; k < 3; k++) comps.insert(d.component_of_arc(t.side[(size_t)k].arc));
  if (comps.size() == 1) return MoveKind::DeltaSelf;
  if (comps.size() == 2) return MoveKind::DeltaMixed2;
  return MoveKind::DeltaMixed3;
}

// The trigon flip: every strand slides across the opposite crossing. Each
// pairwise crossing keeps its over/under assignment and its sign; the order
// of the two corners along every strand reverses.
LinkDiagram flip_trigon(const LinkDiagram& d, const Trigon& t) {
  Arc fresh = 0;
  for (Arc a : d.arcs()) fresh = std::max(fresh, a);
  std::array<Arc, 3> mid{fresh + 1, fresh + 2, fresh + 3};

  // new (in, out) arcs of side strand k at each of its two corners
  struct PassageArcs { Arc in = 0, out = 0; };
  std::array<PassageArcs, 3> at_near{}, at_far{};
  for (int k = 0; k < 3; k++) {
    const TrigonSide& s = t.side[(size_t)k];
    if (s.forward) {
      at_far[(size_t)k] = {s.ext_near, mid[(size_t)k]};
      at_near[(size_t)k] = {mid[(size_t)k], s.ext_far};
    } else {
      at_near[(size_t)k] = {s.ext_far, mid[(size_t)k]};
      at_far[(size_t)k] = {mid[(size_t)k], s.ext_near};
    }
  }

  std::vector<CrossingTuple> tuples = d.crossings();
  for (int j = 0; j < 3; j++) {
    // corner j meets side j (near) and side j-1 (far)
    int prev = (j + 2) % 3;
    const TrigonSide& sj = t.side[(size_t)j];
    PassageArcs a_j = at_near[(size_t)j];
    PassageArcs a_prev = at_far[(size_t)prev];
    bool side_j_under = !slot_is_over(sj.near_slot);
    PassageArcs u = side_j_under ? a_j : a_prev;
    PassageArcs o = side_j_under ? a_prev : a_j;
    int c = t.corner[(size_t)j];
    tuples[(size_t)c] = make_tuple(u.in, u.out, o.in, o.out, d.sign(c));
  }
  return d.with_tuples(std::move(tuples), d.closed_components());
}

// All planar realizations of adding a kink on the given arc. The four
// variants differ in writhe sign and in which side carries the monogon.
std::vector<LinkDiagram> r1_add_variants(const LinkDiagram& d, Arc alpha) {
  Arc fresh = 0;
  for (Arc a : d.arcs()) fresh = std::max(fresh, a);
  Arc a2 = fresh + 1, loop = fresh + 2;

  Endpoint head = d.arc_ends(alpha)[0];
  if (!d.slot_is_inflow(head.crossing, head.slot)) head = d.arc_ends(alpha)[1];

  std::vector<LinkDiagram> out;
  for (int variant = 0; variant < 4; variant++) {
    CrossingTuple t;
    switch (variant) {
      case 0: t = {alpha, loop, loop, a2}; break;
      case 1: t = {alpha, a2, loop, loop}; break;
      case 2: t = {loop, alpha, a2, loop}; break;
      case 3: t = {loop, loop, a2, alpha}; break;
    }
    std::vector<CrossingTuple> tuples = d.crossings();
    // reroute the head end of alpha through the new crossing
    tuples[(size_t)head.crossing][head.slot] = a2;
    tuples.push_back(t);
    try {
      out.push_back(d.with_tuples(std::move(tuples), d.closed_components()));
    } catch (const Error&) {
      // not planar in this configuration
    }
  }
  return out;
}

// All planar realizations of poking one boundary arc of a face across
// another. over = the poked strand passes over at both new crossings.
std::vector<LinkDiagram> r2_add_variants(const LinkDiagram& d, const Face& f,
                                         int pos_a, int pos_b, bool over) {
  Arc fresh = 0;
  for (Arc a : d.arcs()) fresh = std::max(fresh, a);
  Arc alpha = f.boundary[(size_t)pos_a].first;
  Arc beta = f.boundary[(size_t)pos_b].first;
  if (alpha == beta) return {};
  Arc am = fresh + 1, a2 = fresh + 2, bm = fresh + 3, b2 = fresh + 4;

  auto head_of = [&](Arc a) {
    Endpoint h = d.arc_ends(a)[0];
    if (!d.slot_is_inflow(h.crossing, h.slot)) h = d.arc_ends(a)[1];
    return h;
  };
  Endpoint ha = head_of(alpha), hb = head_of(beta);

  std::vector<LinkDiagram> out;
  for (int parallel = 0; parallel < 2; parallel++)
    for (int sp = -1; sp <= 1; sp += 2) {
      // alpha passes P then Q; beta passes P,Q (parallel) or Q,P
      struct P2 { Arc in, out; };
      P2 aP{alpha, am}, aQ{am, a2};
      P2 bP{}, bQ{};
      if (parallel) {
        bP = {beta, bm};
        bQ = {bm, b2};
      } else {
        bQ = {beta, bm};
        bP = {bm, b2};
      }
      CrossingTuple tP = over ? make_tuple(bP.in, bP.out, aP.in, aP.out, sp)
                              : make_tuple(aP.in, aP.out, bP.in, bP.out, sp);
      CrossingTuple tQ = over ? make_tuple(bQ.in, bQ.out, aQ.in, aQ.out, -sp)
                              : make_tuple(aQ.in, aQ.out, bQ.in, bQ.out, -sp);
      std::vector<CrossingTuple> tuples = d.crossings();
      tuples[(size_t)ha.crossing][ha.slot] = a2;
      tuples[(size_t)hb.crossing][hb.slot] = b2;
      tuples.push_back(tP);
      tuples.push_back(tQ);
      try {
        out.push_back(d.with_tuples(std::move(tuples), d.closed_components()));
      } catch (const Error&) {
      }
    }
  return out;
}

bool r2_reducible(const LinkDiagram& d, const Face& f) {
  if (f.degree() != 2) return false;
  int c1 = f.corners[0].crossing, c2 = f.corners[1].crossing;
  Arc a1 = f.boundary[0].first, a2 = f.boundary[1].first;
  if (c1 == c2 || a1 == a2) return false;
  // the same strand must be on top at both corners
  const auto& ends = d.arc_ends(a1);
  bool over_at_c1 = false, over_at_c2 = false;
  for (const Endpoint& e : ends) {
    if (e.crossing == c1) over_at_c1 = slot_is_over(e.slot);
    if (e.crossing == c2) over_at_c2 = slot_is_over(e.slot);
  }
  return over_at_c1 == over_at_c2;
}

} // namespace

std::vector<MoveSite> enumerate_sites(const LinkDiagram& d, KindMask kinds) {
  std::vector<MoveSite> sites;
  const std::string pd = d.pd_string();
  std::vector<Face> fs = d.faces();

  auto add = [&](MoveSite s) {
    s.source_pd = pd;
    sites.push_back(std::move(s));
  };

  for (int fi = 0; fi < (int)fs.size(); fi++) {
    const Face& f = fs[(size_t)fi];
    if (f.degree() == 1 && (kinds & kind_bit(MoveKind::R1Reduce))) {
      MoveSite s;
      s.kind = MoveKind::R1Reduce;
      s.face = fi;
      add(s);
    }
    if (f.degree() == 2 && (kinds & kind_bit(MoveKind::R2Reduce)) && r2_reducible(d, f)) {
      MoveSite s;
      s.kind = MoveKind::R2Reduce;
      s.face = fi;
      add(s);
    }
    if (f.degree() == 3 &&
        (kinds & (kind_bit(MoveKind::R3) | kDeltaKinds))) {
      Trigon t;
      if (Trigon::build(d, f, t)) {
        MoveKind k = classify_trigon(d, t);
        if (kinds & kind_bit(k)) {
          MoveSite s;
          s.kind = k;
          s.face = fi;
          add(s);
        }
      }
    }
    if (kinds & kind_bit(MoveKind::R2Add)) {
      for (int i = 0; i < f.degree(); i++)
        for (int j = 0; j < f.degree(); j++) {
          if (i == j) continue;
          for (int over = 0; over < 2; over++) {
            int n = (int)r2_add_variants(d, f, i, j, over != 0).size();
            for (int v = 0; v < n; v++) {
              MoveSite s;
              s.kind = MoveKind::R2Add;
              s.face = fi;
              s.pos_a = i;
              s.pos_b = j;
              s.over = over != 0;
              s.variant = v;
              add(s);
            }
          }
        }
    }
  }

  if (kinds & kind_bit(MoveKind::R1Add)) {
    for (Arc a : d.arcs()) {
      int n = (int)r1_add_variants(d, a).size();
      for (int v = 0; v < n; v++) {
        MoveSite s;
        s.kind = MoveKind::R1Add;
        s.arc = a;
        s.variant = v;
        add(s);
      }
    }
  }
  return sites;
}

LinkDiagram apply(const LinkDiagram& d, const MoveSite& site) {
  if (site.source_pd != d.pd_string())
    throw StaleSite("move site does not belong to this diagram");
  std::vector<Face> fs = d.faces();

  switch (site.kind) {
    case MoveKind::R1Reduce: {
      const Face& f = fs.at((size_t)site.face);
      if (f.degree() != 1) throw StaleSite("face is not a monogon");
      return d.resolved({Splice{f.corners[0].crossing, {2, 3, 0, 1}}});
    }
    case MoveKind::R2Reduce: {
      const Face& f = fs.at((size_t)site.face);
      if (!r2_reducible(d, f)) throw StaleSite("face is not a reducible bigon");
      return d.resolved({Splice{f.corners[0].crossing, {2, 3, 0, 1}},
                         Splice{f.corners[1].crossing, {2, 3, 0, 1}}});
    }
    case MoveKind::R3:
    case MoveKind::DeltaSelf:
    case MoveKind::DeltaMixed2:
    case MoveKind::DeltaMixed3: {
      const Face& f = fs.at((size_t)site.face);
      Trigon t;
      if (!Trigon::build(d, f, t) || classify_trigon(d, t) != site.kind)
        throw StaleSite("face is not a trigon of the recorded kind");
      return flip_trigon(d, t);
    }
    case MoveKind::R1Add: {
      auto vars = r1_add_variants(d, site.arc);
      if (site.variant < 0 || site.variant >= (int)vars.size())
        throw StaleSite("kink variant out of range");
      return vars[(size_t)site.variant];
    }
    case MoveKind::R2Add: {
      const Face& f = fs.at((size_t)site.face);
      auto vars = r2_add_variants(d, f, site.pos_a, site.pos_b, site.over);
      if (site.variant < 0 || site.variant >= (int)vars.size())
        throw StaleSite("poke variant out of range");
      return vars[(size_t)site.variant];
    }
  }
  throw Error("unreachable");
}

LinkDiagram simplify(const LinkDiagram& d, int r3_budget) {
  LinkDiagram cur = d;
  for (;;) {
    std::vector<MoveSite> red = enumerate_sites(cur, kReductionKinds);
    if (!red.empty()) {
      cur = apply(cur, red[0]);
      continue;
    }
    if (r3_budget <= 0 || cur.crossing_count() < 3) return cur;

    // breadth-first over R3 variants, looking for any state that admits a
    // reduction
    std::set<std::string> visited{cur.state_key()};
    std::deque<LinkDiagram> queue{cur};
    bool found = false;
    while (!queue.empty() && r3_budget > 0 && !found) {
      LinkDiagram s = queue.front();
      queue.pop_front();
      for (const MoveSite& ms : enumerate_sites(s, kind_bit(MoveKind::R3))) {
        LinkDiagram child = apply(s, ms);
        if (!visited.insert(child.state_key()).second) continue;
        if (--r3_budget < 0) break;
        if (!enumerate_sites(child, kReductionKinds).empty()) {
          cur = child;
          found = true;
          break;
        }
        queue.push_back(child);
      }
    }
    if (!found) return cur;
  }
}

} // namespace deltalink
