#include "deltalink/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace deltalink {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

LinkDiagram::LinkDiagram(std::vector<CrossingTuple> tuples, int closed_components)
    : tuples_(std::move(tuples)), closed_(closed_components) {
  if (closed_ < 0) throw MalformedInput("negative closed-component count");
  validate();
}

void LinkDiagram::validate() {
  const int n = (int)tuples_.size();

  // collect arc occurrences
  std::map<Arc, std::vector<Endpoint>> occ;
  for (int c = 0; c < n; c++)
    for (int s = 0; s < 4; s++) {
      Arc a = tuples_[(size_t)c][s];
      if (a <= 0) throw MalformedInput("arc labels must be positive integers");
      occ[a].push_back({c, s});
    }

  arcs_.clear();
  ends_.clear();
  for (auto& [a, es] : occ) {
    if (es.size() != 2)
      throw DanglingArc("arc " + std::to_string(a) + " occurs " +
                        std::to_string(es.size()) + " times (expected 2)");
    arcs_.push_back(a);
    ends_.push_back({es[0], es[1]});
  }

  // orientation propagation: every dart is inflow or outflow; under passages
  // seed the process (slot 0 in, slot 2 out), arcs and over passages carry
  // constraints across the diagram.
  std::vector<std::array<int8_t, 4>> into((size_t)n, {-1, -1, -1, -1});
  std::vector<Endpoint> work;
  auto set_into = [&](int c, int s, int8_t v) {
    int8_t& cur = into[(size_t)c][(size_t)s];
    if (cur == v) return;
    if (cur != -1)
      throw MalformedInput("inconsistent strand orientation at crossing " +
                           std::to_string(c));
    cur = v;
    work.push_back({c, s});
  };
  for (int c = 0; c < n; c++) {
    set_into(c, 0, 1);
    set_into(c, 2, 0);
  }
  auto propagate = [&]() {
    while (!work.empty()) {
      Endpoint e = work.back();
      work.pop_back();
      int8_t v = into[(size_t)e.crossing][(size_t)e.slot];
      Endpoint o = other_end(e.crossing, e.slot);
      set_into(o.crossing, o.slot, (int8_t)(1 - v));
      if (e.slot == 1 || e.slot == 3)
        set_into(e.crossing, 4 - e.slot, (int8_t)(1 - v));
    }
  };
  propagate();
  for (int c = 0; c < n; c++) {
    if (into[(size_t)c][1] == -1) { // component never goes under; pick a direction
      set_into(c, 1, 1);
      propagate();
    }
  }

  over_in_.assign((size_t)n, 0);
  for (int c = 0; c < n; c++) over_in_[(size_t)c] = into[(size_t)c][1] == 1 ? 1 : 3;

  // strand tracing: follow each arc into its consuming passage and out
  comp_of_arc_.assign(arcs_.size(), -1);
  comp_cycles_.clear();
  for (size_t i = 0; i < arcs_.size(); i++) {
    if (comp_of_arc_[i] != -1) continue;
    int comp = (int)comp_cycles_.size();
    std::vector<Arc> cycle;
    size_t cur = i;
    while (comp_of_arc_[cur] == -1) {
      comp_of_arc_[cur] = comp;
      cycle.push_back(arcs_[cur]);
      // inflow dart of this arc
      Endpoint in = ends_[cur][0];
      if (into[(size_t)in.crossing][(size_t)in.slot] != 1) in = ends_[cur][1];
      int out_slot = in.slot == 0 ? 2 : 4 - in.slot;
      Arc next = tuples_[(size_t)in.crossing][out_slot];
      cur = (size_t)arc_index(next);
    }
    comp_cycles_.push_back(std::move(cycle));
  }
  n_strands_ = (int)comp_cycles_.size();

  trace_planarity();
}

void LinkDiagram::trace_planarity() const {
  const int n = (int)tuples_.size();
  if (n == 0) return;

  UnionFind uf(n);
  for (size_t i = 0; i < arcs_.size(); i++)
    uf.unite(ends_[i][0].crossing, ends_[i][1].crossing);

  // face orbits of the combinatorial map: next dart = rotate(opposite(dart))
  std::vector<std::array<int8_t, 4>> seen((size_t)n, {0, 0, 0, 0});
  std::vector<int> faces_of_piece((size_t)n, 0);
  for (int c = 0; c < n; c++)
    for (int s = 0; s < 4; s++) {
      if (seen[(size_t)c][(size_t)s]) continue;
      int fc = c, fs = s;
      while (!seen[(size_t)fc][(size_t)fs]) {
        seen[(size_t)fc][(size_t)fs] = 1;
        Endpoint o = other_end(fc, fs);
        fc = o.crossing;
        fs = (o.slot + 1) % 4;
      }
      faces_of_piece[(size_t)uf.find(c)]++;
    }

  std::vector<int> piece_v((size_t)n, 0);
  for (int c = 0; c < n; c++) piece_v[(size_t)uf.find(c)]++;
  for (int c = 0; c < n; c++) {
    if (uf.find(c) != c) continue;
    // 4-valent: E = 2V, so planarity demands F = V + 2 per connected piece
    if (faces_of_piece[(size_t)c] != piece_v[(size_t)c] + 2)
      throw NonPlanar("face tracing fails the Euler check (virtual code?)");
  }
}

int LinkDiagram::arc_index(Arc a) const {
  auto it = std::lower_bound(arcs_.begin(), arcs_.end(), a);
  if (it == arcs_.end() || *it != a) return -1;
  return (int)(it - arcs_.begin());
}

int LinkDiagram::component_of_arc(Arc a) const {
  int i = arc_index(a);
  if (i < 0) throw Error("unknown arc " + std::to_string(a));
  return comp_of_arc_[(size_t)i];
}

const std::array<Endpoint, 2>& LinkDiagram::arc_ends(Arc a) const {
  int i = arc_index(a);
  if (i < 0) throw Error("unknown arc " + std::to_string(a));
  return ends_[(size_t)i];
}

Endpoint LinkDiagram::other_end(int crossing, int slot) const {
  Arc a = tuples_[(size_t)crossing][slot];
  const auto& es = arc_ends(a);
  if (es[0].crossing == crossing && es[0].slot == slot) return es[1];
  return es[0];
}

bool LinkDiagram::slot_is_inflow(int crossing, int slot) const {
  if (slot == 0) return true;
  if (slot == 2) return false;
  return over_in_[(size_t)crossing] == slot;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (int c = 0; c < crossing_count(); c++) w += sign(c);
  return w;
}

std::vector<Face> LinkDiagram::faces() const {
  const int n = (int)tuples_.size();
  std::vector<Face> fs;
  std::vector<std::array<int8_t, 4>> seen((size_t)n, {0, 0, 0, 0});
  for (int c = 0; c < n; c++)
    for (int s = 0; s < 4; s++) {
      if (seen[(size_t)c][(size_t)s]) continue;
      Face f;
      int fc = c, fs_ = s;
      while (!seen[(size_t)fc][(size_t)fs_]) {
        seen[(size_t)fc][(size_t)fs_] = 1;
        Arc a = tuples_[(size_t)fc][fs_];
        const auto& es = arc_ends(a);
        int side = (es[0].crossing == fc && es[0].slot == fs_) ? 0 : 1;
        f.boundary.push_back({a, side});
        f.corners.push_back({fc, fs_});
        Endpoint o = other_end(fc, fs_);
        fc = o.crossing;
        fs_ = (o.slot + 1) % 4;
      }
      fs.push_back(std::move(f));
    }
  // each zero-crossing unknot bounds its own disk; alone in the plane it also
  // has the outer region
  for (int k = 0; k < closed_; k++) fs.push_back(Face{});
  if (n == 0 && closed_ > 0) fs.push_back(Face{});
  return fs;
}

LinkDiagram LinkDiagram::parse_pd(const std::string& text) {
  std::vector<CrossingTuple> tuples;
  int closed = 0;
  size_t i = 0;
  auto skip_ws = [&]() {
    while (i < text.size() && std::isspace((unsigned char)text[i])) i++;
  };
  skip_ws();
  while (i < text.size()) {
    char ch = text[i];
    if (ch == 'X' || ch == 'x') {
      i++;
      if (i >= text.size() || (text[i] != '(' && text[i] != '['))
        throw MalformedInput("expected '(' after X");
      char close = text[i] == '(' ? ')' : ']';
      i++;
      CrossingTuple t;
      for (int s = 0; s < 4; s++) {
        skip_ws();
        size_t j = i;
        while (j < text.size() && std::isdigit((unsigned char)text[j])) j++;
        if (j == i) throw MalformedInput("expected arc number in crossing tuple");
        t[s] = (Arc)std::strtol(text.substr(i, j - i).c_str(), nullptr, 10);
        i = j;
        skip_ws();
        if (s < 3) {
          if (i >= text.size() || text[i] != ',')
            throw MalformedInput("crossing tuples need exactly 4 arcs");
          i++;
        }
      }
      if (i >= text.size() || text[i] != close)
        throw MalformedInput("crossing tuples need exactly 4 arcs");
      i++;
      tuples.push_back(t);
    } else if (ch == '+') {
      i++;
      size_t j = i;
      while (j < text.size() && std::isdigit((unsigned char)text[j])) j++;
      if (j == i) throw MalformedInput("expected count after '+'");
      closed += (int)std::strtol(text.substr(i, j - i).c_str(), nullptr, 10);
      i = j;
    } else {
      throw MalformedInput(std::string("unexpected character '") + ch + "' in PD code");
    }
    skip_ws();
  }
  return LinkDiagram(std::move(tuples), closed);
}

std::string LinkDiagram::pd_string() const {
  std::ostringstream os;
  for (size_t c = 0; c < tuples_.size(); c++) {
    if (c) os << " ";
    os << "X(" << tuples_[c][0] << "," << tuples_[c][1] << "," << tuples_[c][2]
       << "," << tuples_[c][3] << ")";
  }
  if (closed_ > 0) {
    if (!tuples_.empty()) os << " ";
    os << "+" << closed_;
  }
  return os.str();
}

LinkDiagram LinkDiagram::mirrored() const {
  std::vector<CrossingTuple> out;
  out.reserve(tuples_.size());
  for (int c = 0; c < crossing_count(); c++) {
    const CrossingTuple& t = tuples_[(size_t)c];
    // the old over passage becomes the under passage, keeping its direction
    if (over_in_[(size_t)c] == 3)
      out.push_back({t[3], t[0], t[1], t[2]});
    else
      out.push_back({t[1], t[2], t[3], t[0]});
  }
  return LinkDiagram(std::move(out), closed_);
}

LinkDiagram LinkDiagram::reversed(const std::vector<int>& comps) const {
  std::vector<char> flip((size_t)component_count(), 0);
  for (int c : comps) {
    if (c < 0 || c >= component_count()) throw Error("component index out of range");
    flip[(size_t)c] = 1;
  }
  std::vector<CrossingTuple> out;
  out.reserve(tuples_.size());
  for (size_t c = 0; c < tuples_.size(); c++) {
    const CrossingTuple& t = tuples_[c];
    if (flip[(size_t)component_of_arc(t[0])])
      out.push_back({t[2], t[3], t[0], t[1]});
    else
      out.push_back(t);
  }
  return LinkDiagram(std::move(out), closed_);
}

LinkDiagram LinkDiagram::sublink(const std::vector<int>& keep) const {
  if (keep.empty()) throw EmptySelection("sublink needs a nonempty component set");
  std::vector<char> kept((size_t)component_count(), 0);
  for (int c : keep) {
    if (c < 0 || c >= component_count())
      throw EmptySelection("component index out of range");
    kept[(size_t)c] = 1;
  }

  int kept_closed = 0;
  for (int k = 0; k < closed_; k++)
    if (kept[(size_t)(n_strands_ + k)]) kept_closed++;

  UnionFind uf((int)arcs_.size());
  std::vector<char> survives(tuples_.size(), 0);
  for (size_t c = 0; c < tuples_.size(); c++) {
    const CrossingTuple& t = tuples_[c];
    bool under_kept = kept[(size_t)component_of_arc(t[0])];
    bool over_kept = kept[(size_t)component_of_arc(t[1])];
    if (under_kept && over_kept) {
      survives[c] = 1;
    } else if (under_kept) {
      uf.unite(arc_index(t[0]), arc_index(t[2]));
    } else if (over_kept) {
      uf.unite(arc_index(t[1]), arc_index(t[3]));
    }
  }

  // relabel surviving arc classes densely
  std::map<int, Arc> label;
  std::vector<CrossingTuple> out;
  for (size_t c = 0; c < tuples_.size(); c++) {
    if (!survives[c]) continue;
    CrossingTuple t = tuples_[c];
    for (int s = 0; s < 4; s++) {
      int root = uf.find(arc_index(t[s]));
      auto it = label.find(root);
      if (it == label.end()) it = label.insert({root, (Arc)(label.size() + 1)}).first;
      t[s] = it->second;
    }
    out.push_back(t);
  }

  // kept strand components with no surviving crossings close up into
  // zero-crossing unknots
  std::vector<char> comp_survives((size_t)n_strands_, 0);
  for (size_t c = 0; c < tuples_.size(); c++)
    if (survives[c]) {
      comp_survives[(size_t)component_of_arc(tuples_[c][0])] = 1;
      comp_survives[(size_t)component_of_arc(tuples_[c][1])] = 1;
    }
  int vanished = 0;
  for (int comp = 0; comp < n_strands_; comp++)
    if (kept[(size_t)comp] && !comp_survives[(size_t)comp]) vanished++;

  return LinkDiagram(std::move(out), kept_closed + vanished);
}

LinkDiagram LinkDiagram::disjoint_union(const LinkDiagram& d1, const LinkDiagram& d2) {
  Arc shift = 0;
  for (Arc a : d1.arcs_) shift = std::max(shift, a);
  std::vector<CrossingTuple> out = d1.tuples_;
  for (const CrossingTuple& t : d2.tuples_)
    out.push_back({t[0] + shift, t[1] + shift, t[2] + shift, t[3] + shift});
  return LinkDiagram(std::move(out), d1.closed_ + d2.closed_);
}

LinkDiagram LinkDiagram::from_unoriented(std::vector<CrossingTuple> tuples, int closed) {
  // occurrences per arc
  std::map<Arc, std::vector<Endpoint>> occ;
  for (int c = 0; c < (int)tuples.size(); c++)
    for (int s = 0; s < 4; s++) occ[tuples[(size_t)c][s]].push_back({c, s});
  for (auto& [a, es] : occ)
    if (es.size() != 2)
      throw DanglingArc("arc " + std::to_string(a) + " occurs " +
                        std::to_string(es.size()) + " times (expected 2)");

  // walk strands, recording the arrival end of every arc
  std::map<Arc, Endpoint> head;
  for (auto& [a0, es0] : occ) {
    if (head.count(a0)) continue;
    Arc a = a0;
    Endpoint at = es0[1]; // declare the arc directed toward its second end
    while (!head.count(a)) {
      head[a] = at;
      int out_slot = (at.slot + 2) % 4;
      Arc next = tuples[(size_t)at.crossing][out_slot];
      const auto& es = occ[next];
      Endpoint tail{at.crossing, out_slot};
      at = (es[0] == tail) ? es[1] : es[0];
      a = next;
    }
  }

  // rotate tuples whose under strand arrives at slot 2
  for (int c = 0; c < (int)tuples.size(); c++) {
    Arc a2 = tuples[(size_t)c][2];
    if (head[a2] == Endpoint{c, 2}) {
      CrossingTuple& t = tuples[(size_t)c];
      t = {t[2], t[3], t[0], t[1]};
    }
  }
  return LinkDiagram(std::move(tuples), closed);
}

std::pair<std::vector<CrossingTuple>, int> LinkDiagram::splice_out(
    const std::vector<Splice>& splices) const {
  std::vector<char> removed(tuples_.size(), 0);
  UnionFind uf((int)arcs_.size());
  for (const Splice& sp : splices) {
    if (sp.crossing < 0 || sp.crossing >= crossing_count() || removed[(size_t)sp.crossing])
      throw Error("bad splice instruction");
    removed[(size_t)sp.crossing] = 1;
    const CrossingTuple& t = tuples_[(size_t)sp.crossing];
    for (int s = 0; s < 4; s++) {
      int p = sp.partner[(size_t)s];
      if (p < 0 || p > 3 || sp.partner[(size_t)p] != s || p == s)
        throw Error("splice partners must pair all four slots");
      uf.unite(arc_index(t[s]), arc_index(t[p]));
    }
  }

  std::map<int, Arc> label;
  std::vector<CrossingTuple> out;
  std::vector<char> root_survives(arcs_.size(), 0);
  for (size_t c = 0; c < tuples_.size(); c++) {
    if (removed[c]) continue;
    CrossingTuple t = tuples_[c];
    for (int s = 0; s < 4; s++) {
      int root = uf.find(arc_index(t[s]));
      root_survives[(size_t)root] = 1;
      auto it = label.find(root);
      if (it == label.end()) it = label.insert({root, (Arc)(label.size() + 1)}).first;
      t[s] = it->second;
    }
    out.push_back(t);
  }

  // arc classes that vanished from all surviving crossings are closed loops
  int new_closed = closed_;
  for (size_t i = 0; i < arcs_.size(); i++)
    if (uf.find((int)i) == (int)i && !root_survives[i]) new_closed++;

  return {std::move(out), new_closed};
}

LinkDiagram LinkDiagram::resolved(const std::vector<Splice>& splices) const {
  auto [tuples, closed] = splice_out(splices);
  return LinkDiagram(std::move(tuples), closed);
}

LinkDiagram LinkDiagram::resolved_unoriented(const std::vector<Splice>& splices) const {
  auto [tuples, closed] = splice_out(splices);
  return from_unoriented(std::move(tuples), closed);
}

LinkDiagram LinkDiagram::with_tuples(std::vector<CrossingTuple> tuples, int closed) const {
  return LinkDiagram(std::move(tuples), closed);
}

// ---------------------------------------------------------------------------
// canonical encoding

namespace {

// Encode one connected piece starting from a given dart. sense=+1 walks the
// rotation as stored, sense=-1 walks the reflected map (view from behind the
// sphere, which also exchanges over and under strands).
struct PieceEncoder {
  const LinkDiagram& d;
  const std::vector<int>& piece_crossings;

  std::vector<int> encode(int c0, int s0, int sense, bool quotient_orientation) const {
    std::vector<int> newid((size_t)d.crossing_count(), -1);
    std::vector<int> entry((size_t)d.crossing_count(), -1);
    std::vector<int> order;
    newid[(size_t)c0] = 0;
    entry[(size_t)c0] = s0;
    order.push_back(c0);

    auto local_of = [&](int c, int g) {
      int e = entry[(size_t)c];
      return sense > 0 ? (g - e + 4) % 4 : (e - g + 4) % 4;
    };
    auto global_of = [&](int c, int l) {
      int e = entry[(size_t)c];
      return sense > 0 ? (e + l) % 4 : (e - l + 4) % 4;
    };

    std::vector<int> code;
    code.reserve(piece_crossings.size() * 9 + 1);
    code.push_back((int)piece_crossings.size());
    for (size_t qi = 0; qi < order.size(); qi++) {
      int c = order[qi];
      for (int l = 0; l < 4; l++) {
        int g = global_of(c, l);
        Endpoint o = d.other_end(c, g);
        if (newid[(size_t)o.crossing] == -1) {
          newid[(size_t)o.crossing] = (int)order.size();
          entry[(size_t)o.crossing] = o.slot;
          order.push_back(o.crossing);
        }
        code.push_back(newid[(size_t)o.crossing]);
        code.push_back(local_of(o.crossing, o.slot));
      }
      if (quotient_orientation) {
        // parity of the under passage in local coordinates; reflection
        // exchanges the roles of the two passages
        int e = entry[(size_t)c];
        int p = sense > 0 ? (e & 1) : ((e + 1) & 1);
        code.push_back(p);
      } else {
        int u_in = 0, o_in = d.over_in_slot(c);
        if (sense < 0) std::swap(u_in, o_in);
        code.push_back(local_of(c, u_in));
        code.push_back(local_of(c, o_in));
      }
    }
    return code;
  }
};

} // namespace

std::string LinkDiagram::canonical_key(bool quotient_orientation,
                                       bool with_reflection) const {
  const int n = crossing_count();
  std::vector<std::vector<int>> piece_codes;

  if (n > 0) {
    UnionFind uf(n);
    for (size_t i = 0; i < arcs_.size(); i++)
      uf.unite(ends_[i][0].crossing, ends_[i][1].crossing);
    std::map<int, std::vector<int>> pieces;
    for (int c = 0; c < n; c++) pieces[uf.find(c)].push_back(c);

    for (auto& [root, cs] : pieces) {
      PieceEncoder enc{*this, cs};
      std::vector<int> best;
      for (int c : cs)
        for (int s = 0; s < 4; s++)
          for (int sense : {1, -1}) {
            if (sense < 0 && !with_reflection) continue;
            std::vector<int> code = enc.encode(c, s, sense, quotient_orientation);
            if (best.empty() || code < best) best = std::move(code);
          }
      piece_codes.push_back(std::move(best));
    }
    std::sort(piece_codes.begin(), piece_codes.end());
  }

  std::ostringstream os;
  for (const auto& code : piece_codes) {
    for (size_t i = 0; i < code.size(); i++) os << code[i] << (i + 1 < code.size() ? "," : "");
    os << ";";
  }
  os << "+" << closed_;
  return os.str();
}

} // namespace deltalink
