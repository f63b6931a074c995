#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltalink/diagram.hpp"
#include "deltalink/invariants.hpp"

namespace deltalink {

// Partial knowledge of an integer quantity: interval plus optional parity.
// Text forms: "2", "1-3", "1-3p1" (interval with parity), "2-4p0".
struct BoundInterval {
  int lower = 0;
  std::optional<int> upper;
  std::optional<int> parity;

  static BoundInterval parse(const std::string& text);
  static BoundInterval exactly(int n) { return {n, n, std::nullopt}; }
  bool exact() const { return upper && *upper == lower; }
  bool admits(int n) const;
  // every value admitted by `other` is admitted here
  bool contains(const BoundInterval& other) const;
  std::string str() const;
};

struct CatalogEntry {
  std::string name;
  std::string pd;
  LinkDiagram diagram;
  std::vector<std::string> components; // knot name per component index
  std::optional<BoundInterval> u_delta;
  std::optional<BoundInterval> sp_delta;
  std::optional<BoundInterval> sp_mdelta;
  std::optional<int> sp;
  std::optional<int> arf_stored;
  std::optional<int> sum_arf_stored;
  std::optional<int> sum_u_delta_stored;
  std::optional<std::pair<int, int>> family; // (delta1, |delta2|), table membership
  std::optional<std::string> mirror_of;
  bool amphichiral = false;
  std::optional<std::string> note;

  // computed at load
  Fingerprint fp;
  std::optional<int> arf_computed;
  std::optional<FamilyKey> deltas; // 2-component entries only
};

class Catalog {
public:
  static Catalog load(const std::string& path);
  static std::string default_path();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& name) const;
  const CatalogEntry& at(const std::string& name) const;
  bool has(const std::string& name) const { return find(name) != nullptr; }

  // All entry names whose fingerprint matches; `trivial<m>` is synthesized
  // for trivial links even when not shipped.
  std::vector<std::string> identify(const Fingerprint& f) const;
  std::vector<std::string> identify(const LinkDiagram& d) const;

  // 2-component entries with computed (delta1, |delta2|) equal to the key,
  // deduplicated over mirror pairs: the table representative (the entry
  // carrying the family attribute) speaks for its pair.
  std::vector<std::string> family_members(int delta1, int abs_delta2) const;

  // u_delta of a knot by name (mirror prefix stripped); nullopt if unknown.
  std::optional<int> knot_u_delta(const std::string& knot_name) const;

  // Resolve a link reference: catalog name, m<name> (mirror), or "pd:<code>".
  LinkDiagram resolve(const std::string& ref) const;

  InvariantCache& cache() const { return cache_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

private:
  std::vector<CatalogEntry> entries_;
  std::map<std::string, size_t> index_;
  std::vector<std::string> warnings_;
  mutable InvariantCache cache_;

  void validate_loaded();
};

} // namespace deltalink
