#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltalink/diagram.hpp"
#include "deltalink/poly.hpp"

namespace deltalink {

struct LinkingMatrix {
  int m = 0;
  std::vector<std::vector<int>> entries;

  int at(int i, int j) const { return entries[(size_t)i][(size_t)j]; }
  int total() const; // sum over i<j
  bool all_zero() const;
  // canonical form under simultaneous component permutation and
  // per-component sign flips
  std::string canonical_class() const;
};

struct FamilyKey {
  long long delta1 = 0;
  long long delta2 = 0;
  bool operator==(const FamilyKey&) const = default;
};

// Invariant bundle used to match diagrams against the catalog. Stable under
// Reidemeister moves, component renumbering and component orientation flips.
struct Fingerprint {
  int m = 0;
  std::string linking_class;
  std::vector<std::string> conway_orients;  // Conway polynomials over orientation classes
  std::vector<std::string> component_polys; // multiset of component Conway polynomials
  std::vector<std::string> bracket_orients; // writhe-normalized brackets, same classes
  bool operator==(const Fingerprint&) const = default;
  bool operator<(const Fingerprint& o) const;
  std::string str() const;
};

// Shared memo tables for the exponential engines. Deterministic contents;
// one instance per engine user.
struct InvariantCache {
  std::map<std::string, ZPoly> conway;
  std::map<std::string, Laurent> bracket;
  std::map<std::string, Fingerprint> fingerprints;
};

inline constexpr long long kDefaultSkeinBudget = 6'000'000;

LinkingMatrix linking_matrix(const LinkDiagram& d);

// Conway polynomial by the skein relation nabla(L+) - nabla(L-) = z nabla(L0),
// with nabla(unknot) = 1 and nabla(split diagram) = 0.
ZPoly conway(const LinkDiagram& d, InvariantCache* cache = nullptr,
             long long budget = kDefaultSkeinBudget);

// Kauffman bracket of the unoriented diagram.
Laurent bracket(const LinkDiagram& d, InvariantCache* cache = nullptr,
                long long budget = kDefaultSkeinBudget);

// Arf invariant: a2 mod 2 for knots; for proper links the Conway coefficient
// extension a_{m+1} + sum of component Arfs mod 2. nullopt for non-proper
// links.
std::optional<int> arf(const LinkDiagram& d, InvariantCache* cache = nullptr);

// (delta1, delta2) of a 2-component link.
FamilyKey delta_invariants(const LinkDiagram& d, InvariantCache* cache = nullptr);

Fingerprint fingerprint(const LinkDiagram& d, InvariantCache* cache = nullptr);

} // namespace deltalink
