#pragma once

#include <string>
#include <vector>

#include "deltalink/diagram.hpp"

namespace deltalink {

enum class MoveKind {
  R1Reduce,
  R1Add,
  R2Reduce,
  R2Add,
  R3,
  DeltaSelf,
  DeltaMixed2,
  DeltaMixed3,
};

const char* kind_name(MoveKind k);

using KindMask = unsigned;
constexpr KindMask kind_bit(MoveKind k) { return 1u << (unsigned)k; }
constexpr KindMask kReductionKinds = kind_bit(MoveKind::R1Reduce) | kind_bit(MoveKind::R2Reduce);
constexpr KindMask kDeltaSelfKind = kind_bit(MoveKind::DeltaSelf);
constexpr KindMask kDeltaMixedKinds =
    kind_bit(MoveKind::DeltaMixed2) | kind_bit(MoveKind::DeltaMixed3);
constexpr KindMask kDeltaKinds = kDeltaSelfKind | kDeltaMixedKinds;
constexpr KindMask kAllKinds = 0xffu;

// A move location on a specific diagram. Reductions, R3 and Delta flips are
// keyed by a face; additions carry placement data plus a construction
// variant index (several planar realizations can exist).
struct MoveSite {
  MoveKind kind = MoveKind::R3;
  int face = -1;
  int pos_a = -1;        // R2Add: boundary positions within the face
  int pos_b = -1;
  Arc arc = 0;           // R1Add: target arc
  int variant = 0;       // additions: index into the valid constructions
  bool over = false;     // R2Add: poked strand passes over
  std::string source_pd; // diagram this site was enumerated on
};

// All sites of the requested kinds, in deterministic order (face index, then
// kind, then placement).
std::vector<MoveSite> enumerate_sites(const LinkDiagram& d, KindMask kinds);

// Apply a site enumerated on this exact diagram. Throws StaleSite otherwise.
LinkDiagram apply(const LinkDiagram& d, const MoveSite& site);

// Greedy R1/R2 reduction, interleaved with bounded R3 exploration to expose
// further reductions. Deterministic; never increases the crossing count.
// The budget caps how many R3 variants may be visited in total.
LinkDiagram simplify(const LinkDiagram& d, int r3_budget = 600);

} // namespace deltalink
