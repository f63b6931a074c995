#pragma once

// Test-only oracles, independent of the engines they check.
//  - Alexander polynomial from the Wirtinger presentation (Fox calculus),
//    compared against the Conway polynomial through z = s - 1/s, t = s^2.
//  - exhaustive minimal transposition count for clasp words.

#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "deltalink/diagram.hpp"
#include "deltalink/poly.hpp"

namespace deltalink::oracle {

// Determinant of the reduced Alexander matrix of the Wirtinger presentation,
// as a Laurent polynomial in t (well-defined up to +-t^k).
inline Laurent alexander_minor(const LinkDiagram& d) {
  const int n = d.crossing_count();
  if (n == 0) return d.component_count() == 1 ? Laurent::mono(1, 0) : Laurent::zero();

  // Wirtinger generators: over-strands, i.e. arc classes joined through over
  // passages
  std::vector<int> parent((size_t)d.arc_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[(size_t)x] != x) {
      parent[(size_t)x] = parent[(size_t)parent[(size_t)x]];
      x = parent[(size_t)x];
    }
    return x;
  };
  for (int c = 0; c < n; c++) {
    const CrossingTuple& t = d.crossings()[(size_t)c];
    parent[(size_t)find(d.arc_index(t[1]))] = find(d.arc_index(t[3]));
  }
  std::map<int, int> gen;
  for (int i = 0; i < d.arc_count(); i++) {
    int r = find(i);
    if (!gen.count(r)) gen[r] = (int)gen.size();
  }
  const int g = (int)gen.size();
  if (g != n) return Laurent::zero(); // a component never passes under: split

  auto gen_of = [&](Arc a) { return gen[find(d.arc_index(a))]; };

  // rows of the Alexander matrix, one per crossing
  std::vector<std::vector<Laurent>> m((size_t)n,
                                      std::vector<Laurent>((size_t)g));
  for (int c = 0; c < n; c++) {
    const CrossingTuple& t = d.crossings()[(size_t)c];
    int o = gen_of(t[1]), ui = gen_of(t[0]), uo = gen_of(t[2]);
    auto& row = m[(size_t)c];
    if (d.sign(c) > 0) {
      row[(size_t)uo] += Laurent::mono(1, 0);
      row[(size_t)ui] += Laurent::mono(-1, 1);
      row[(size_t)o] += Laurent(0, {-1, 1}); // t - 1
    } else {
      // multiplied through by t to stay polynomial
      row[(size_t)uo] += Laurent::mono(1, 1);
      row[(size_t)ui] += Laurent::mono(-1, 0);
      row[(size_t)o] += Laurent(0, {1, -1}); // 1 - t
    }
  }

  // determinant after deleting the last row and column, by cofactor
  // expansion with memoized column masks
  std::map<std::pair<int, unsigned>, Laurent> memo;
  const int dim = n - 1;
  std::function<Laurent(int, unsigned)> det = [&](int row, unsigned used) -> Laurent {
    if (row == dim) return Laurent::mono(1, 0);
    auto key = std::make_pair(row, used);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Laurent acc;
    int sgn = 1, picked = 0;
    for (int col = 0; col < dim; col++) {
      if (used & (1u << col)) continue;
      if (!m[(size_t)row][(size_t)col].is_zero()) {
        Laurent sub = det(row + 1, used | (1u << col));
        Laurent term = m[(size_t)row][(size_t)col] * sub;
        if (sgn < 0) term = Laurent::zero() - term;
        acc += term;
      }
      sgn = -sgn;
      (void)picked;
    }
    memo[key] = acc;
    return acc;
  };
  return det(0, 0);
}

// nabla(z) evaluated at z = s - 1/s, as a Laurent polynomial in s.
inline Laurent conway_in_s(const ZPoly& nabla) {
  Laurent z_sub(-1, {-1, 0, 1}); // -1/s + s
  Laurent acc, power = Laurent::mono(1, 0);
  for (int i = 0; i <= nabla.degree(); i++) {
    if (nabla.coeff(i) != 0) acc += Laurent::mono(nabla.coeff(i), 0) * power;
    power = power * z_sub;
  }
  return acc;
}

// equality up to a unit +-s^k
inline bool equal_up_to_units(Laurent a, Laurent b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  a = Laurent(0, a.c);
  b = Laurent(0, b.c);
  if (a == b) return true;
  for (auto& x : b.c) x = -x;
  b.trim();
  return a == b;
}

// The skein Conway polynomial matches the Wirtinger Alexander oracle.
inline bool conway_matches_alexander(const LinkDiagram& d, const ZPoly& nabla) {
  Laurent minor = alexander_minor(d);
  Laurent m2; // substitute t = s^2
  if (!minor.is_zero()) {
    std::vector<long long> c(2 * minor.c.size() - 1, 0);
    for (size_t i = 0; i < minor.c.size(); i++) c[2 * i] = minor.c[i];
    m2 = Laurent(2 * minor.min_deg(), std::move(c));
  }
  return equal_up_to_units(m2, conway_in_s(nabla));
}

// ---------------------------------------------------------------------------
// clasp word oracle: minimal transposition count over all cancellation
// orders. Words are strings over '+', '-', 'x'; adjacent opposite clasps
// cancel for free, moving a clasp past an adjacent symbol costs one move.
inline int clasp_oracle(const std::string& word) {
  auto done = [](const std::string& w) {
    for (char ch : w)
      if (ch == '+' || ch == '-') return false;
    return true;
  };
  // 0-1 breadth-first search: cancellations are free, transpositions cost 1
  std::map<std::string, int> dist{{word, 0}};
  std::deque<std::string> queue{word};
  while (!queue.empty()) {
    std::string w = queue.front();
    queue.pop_front();
    int dw = dist[w];
    if (done(w)) return dw;
    int n = (int)w.size();
    auto push = [&](std::string v, int cost) {
      auto it = dist.find(v);
      if (it != dist.end() && it->second <= dw + cost) return;
      dist[v] = dw + cost;
      if (cost == 0)
        queue.push_front(std::move(v));
      else
        queue.push_back(std::move(v));
    };
    for (int i = 0; i + 1 < n; i++) {
      int j = i + 1;
      char a = w[(size_t)i], b = w[(size_t)j];
      if ((a == '+' && b == '-') || (a == '-' && b == '+')) {
        std::string v;
        for (int k = 0; k < n; k++)
          if (k != i && k != j) v += w[(size_t)k];
        push(std::move(v), 0);
      }
      if (a != b && (a == '+' || a == '-' || b == '+' || b == '-')) {
        std::string v = w;
        std::swap(v[(size_t)i], v[(size_t)j]);
        push(std::move(v), 1);
      }
    }
  }
  return -1; // unbalanced word: the pair cannot be emptied
}

} // namespace deltalink::oracle
