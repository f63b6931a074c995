#include "deltalink/construct.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace deltalink {

LinkDiagram from_unoriented_tuples(std::vector<CrossingTuple> tuples, int closed) {
  return LinkDiagram::from_unoriented(std::move(tuples), closed);
}

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw Error("braid needs at least one strand");
  std::vector<Arc> init((size_t)strands), cur((size_t)strands);
  Arc next = 1;
  for (int p = 0; p < strands; p++) init[(size_t)p] = cur[(size_t)p] = next++;

  std::vector<CrossingTuple> tuples;
  for (int letter : word) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i >= strands) throw Error("braid letter out of range");
    int p = i - 1, q = i;
    Arc fresh_l = next++, fresh_r = next++;
    if (letter > 0) {
      // left strand crosses over: under enters top-right
      tuples.push_back({cur[(size_t)q], cur[(size_t)p], fresh_l, fresh_r});
    } else {
      tuples.push_back({cur[(size_t)p], fresh_l, fresh_r, cur[(size_t)q]});
    }
    cur[(size_t)p] = fresh_l;
    cur[(size_t)q] = fresh_r;
  }

  // close up: identify each final arc with the initial arc of its position
  int closed = 0;
  for (int p = 0; p < strands; p++) {
    Arc from = cur[(size_t)p], to = init[(size_t)p];
    if (from == to) {
      closed++; // strand untouched by any crossing
      continue;
    }
    for (auto& t : tuples)
      for (int s = 0; s < 4; s++)
        if (t[s] == from) t[s] = to;
  }
  return from_unoriented_tuples(std::move(tuples), closed);
}

// ---------------------------------------------------------------------------
// tangles

Tangle Tangle::zero() {
  Tangle t;
  t.nw = t.ne = 1;
  t.sw = t.se = 2;
  t.next = 3;
  return t;
}

Tangle Tangle::infinity() {
  Tangle t;
  t.nw = t.sw = 1;
  t.ne = t.se = 2;
  t.next = 3;
  return t;
}

Tangle Tangle::twisted_right(int sign) const {
  Tangle t = *this;
  Arc ne2 = t.next++, se2 = t.next++;
  // counterclockwise order around the new crossing: (se, se2, ne2, ne)
  if (sign > 0)
    t.tuples.push_back({ne, se, se2, ne2}); // strand se-ne2 passes over
  else
    t.tuples.push_back({se, se2, ne2, ne});
  t.ne = ne2;
  t.se = se2;
  return t;
}

Tangle Tangle::twisted_bottom(int sign) const {
  Tangle t = *this;
  Arc sw2 = t.next++, se2 = t.next++;
  // counterclockwise order around the new crossing: (se, sw, sw2, se2)
  if (sign > 0)
    t.tuples.push_back({sw, sw2, se2, se}); // strand se-sw2 passes over
  else
    t.tuples.push_back({se, sw, sw2, se2});
  t.sw = sw2;
  t.se = se2;
  return t;
}

Tangle Tangle::rotated() const {
  Tangle t = *this;
  Arc onw = t.nw, one = t.ne, ose = t.se, osw = t.sw;
  t.nw = one;
  t.sw = onw;
  t.se = osw;
  t.ne = ose;
  return t;
}

Tangle Tangle::horizontal(int n) {
  Tangle t = zero();
  for (int i = 0; i < (n > 0 ? n : -n); i++) t = t.twisted_right(n > 0 ? 1 : -1);
  return t;
}

Tangle Tangle::vertical(int n) {
  Tangle t = infinity();
  for (int i = 0; i < (n > 0 ? n : -n); i++) t = t.twisted_bottom(n > 0 ? 1 : -1);
  return t;
}

namespace {

Tangle shifted(const Tangle& t, Arc shift) {
  Tangle r = t;
  for (auto& x : r.tuples)
    for (int s = 0; s < 4; s++) x[s] += shift;
  r.nw += shift;
  r.ne += shift;
  r.se += shift;
  r.sw += shift;
  r.next += shift;
  return r;
}

// Substitute arc label `from` with `to` in a tangle under construction.
void subst(Tangle& t, Arc from, Arc to) {
  if (from == to) return;
  for (auto& x : t.tuples)
    for (int s = 0; s < 4; s++)
      if (x[s] == from) x[s] = to;
  for (Arc* p : {&t.nw, &t.ne, &t.se, &t.sw})
    if (*p == from) *p = to;
}

} // namespace

Tangle tangle_sum(const Tangle& a, const Tangle& b0) {
  if (a.ne == a.se && b0.nw == b0.sw)
    throw Error("tangle sum would trap a closed loop");
  Tangle b = shifted(b0, a.next - 1);
  Tangle r;
  r.tuples = a.tuples;
  r.tuples.insert(r.tuples.end(), b.tuples.begin(), b.tuples.end());
  r.next = b.next;
  r.nw = a.nw;
  r.sw = a.sw;
  r.ne = b.ne;
  r.se = b.se;
  Arc bnw = b.nw, bsw = b.sw;
  subst(r, bnw, a.ne);
  subst(r, bsw == bnw ? a.ne : bsw, a.se);
  return r;
}

Tangle tangle_stack(const Tangle& a, const Tangle& b0) {
  if (a.sw == a.se && b0.nw == b0.ne)
    throw Error("tangle stack would trap a closed loop");
  Tangle b = shifted(b0, a.next - 1);
  Tangle r;
  r.tuples = a.tuples;
  r.tuples.insert(r.tuples.end(), b.tuples.begin(), b.tuples.end());
  r.next = b.next;
  r.nw = a.nw;
  r.ne = a.ne;
  r.sw = b.sw;
  r.se = b.se;
  Arc bnw = b.nw, bne = b.ne;
  subst(r, bnw, a.sw);
  subst(r, bne == bnw ? a.sw : bne, a.se);
  return r;
}

namespace {

LinkDiagram close_tangle(const Tangle& t, bool numerator) {
  Tangle r = t;
  int closed = 0;
  auto join = [&](Arc x, Arc y) {
    if (x == y) {
      closed++;
      return;
    }
    subst(r, y, x);
  };
  if (numerator) {
    join(r.nw, r.ne);
    join(r.sw, r.se);
  } else {
    join(r.nw, r.sw);
    join(r.ne, r.se);
  }
  return from_unoriented_tuples(std::move(r.tuples), closed);
}

} // namespace

LinkDiagram numerator_closure(const Tangle& t) { return close_tangle(t, true); }
LinkDiagram denominator_closure(const Tangle& t) { return close_tangle(t, false); }

Tangle rational_tangle(const std::vector<int>& word) {
  // twist groups alternate horizontal/vertical; the last group is always
  // horizontal so the numerator closure realizes the continued fraction.
  // A leading vertical group twists the infinity tangle.
  bool first_horizontal = word.empty() || (word.size() - 1) % 2 == 0;
  Tangle t = first_horizontal ? Tangle::zero() : Tangle::infinity();
  for (size_t i = 0; i < word.size(); i++) {
    int n = word[i];
    bool horizontal = (word.size() - 1 - i) % 2 == 0;
    for (int k = 0; k < (n > 0 ? n : -n); k++)
      t = horizontal ? t.twisted_right(n > 0 ? 1 : -1)
                     : t.twisted_bottom(n > 0 ? 1 : -1);
  }
  return t;
}

LinkDiagram rational_link(const std::vector<int>& word) {
  return numerator_closure(rational_tangle(word));
}

LinkDiagram pretzel_link(const std::vector<int>& twists) {
  if (twists.empty()) throw Error("pretzel needs at least one twist region");
  Tangle t = Tangle::vertical(twists[0]);
  for (size_t i = 1; i < twists.size(); i++)
    t = tangle_sum(t, Tangle::vertical(twists[i]));
  return numerator_closure(t);
}

bool is_alternating(const LinkDiagram& d) {
  if (d.crossing_count() == 0) return true;
  for (Arc a : d.arcs()) {
    const auto& es = d.arc_ends(a);
    bool over0 = es[0].slot == 1 || es[0].slot == 3;
    bool over1 = es[1].slot == 1 || es[1].slot == 3;
    if (over0 == over1) return false;
  }
  return true;
}

} // namespace deltalink
