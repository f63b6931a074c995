#include "deltalink/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace deltalink {

BoundInterval BoundInterval::parse(const std::string& text) {
  BoundInterval b;
  size_t i = 0;
  auto read_int = [&]() {
    size_t j = i;
    while (j < text.size() && (std::isdigit((unsigned char)text[j]))) j++;
    if (j == i) throw ParseError("bad interval '" + text + "'");
    int v = std::atoi(text.substr(i, j - i).c_str());
    i = j;
    return v;
  };
  b.lower = read_int();
  b.upper = b.lower;
  if (i < text.size() && text[i] == '-') {
    i++;
    b.upper = read_int();
  }
  if (i < text.size() && text[i] == 'p') {
    i++;
    b.parity = read_int();
  }
  if (i != text.size()) throw ParseError("bad interval '" + text + "'");
  return b;
}

bool BoundInterval::admits(int n) const {
  if (n < lower) return false;
  if (upper && n > *upper) return false;
  if (parity && ((n % 2 + 2) % 2) != *parity) return false;
  return true;
}

bool BoundInterval::contains(const BoundInterval& other) const {
  int hi = other.upper ? *other.upper : other.lower;
  for (int n = other.lower; n <= hi; n++)
    if (other.admits(n) && !admits(n)) return false;
  return true;
}

std::string BoundInterval::str() const {
  std::ostringstream os;
  os << lower;
  if (upper && *upper != lower) os << "-" << *upper;
  if (parity) os << "p" << *parity;
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_bit(const std::string& v, const std::string& what, int line_no) {
  if (v == "0") return 0;
  if (v == "1") return 1;
  throw ParseError("line " + std::to_string(line_no) + ": " + what +
                   " must be 0 or 1, got '" + v + "'");
}

} // namespace

std::string Catalog::default_path() {
  if (const char* env = std::getenv("DELTALINK_CATALOG")) return env;
#ifdef DELTALINK_DATA_DIR
  return std::string(DELTALINK_DATA_DIR) + "/catalog.txt";
#else
  return "data/catalog.txt";
#endif
}

Catalog Catalog::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file '" + path + "'");

  Catalog cat;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    line_no++;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;

    CatalogEntry e;
    bool have_pd = false;
    for (const std::string& field : split(t, ';')) {
      std::string f = trim(field);
      if (f.empty()) continue;
      size_t eq = f.find('=');
      if (eq == std::string::npos)
        throw ParseError("line " + std::to_string(line_no) + ": expected key = value");
      std::string key = trim(f.substr(0, eq));
      std::string val = trim(f.substr(eq + 1));
      try {
        if (key == "name") {
          e.name = val;
        } else if (key == "pd") {
          e.pd = val;
          have_pd = true;
        } else if (key == "components") {
          for (const std::string& c : split(val, ','))
            if (!trim(c).empty()) e.components.push_back(trim(c));
        } else if (key == "u_delta") {
          e.u_delta = BoundInterval::parse(val);
        } else if (key == "sp_delta") {
          e.sp_delta = BoundInterval::parse(val);
        } else if (key == "sp_mdelta") {
          e.sp_mdelta = BoundInterval::parse(val);
        } else if (key == "sp") {
          e.sp = std::atoi(val.c_str());
        } else if (key == "arf") {
          e.arf_stored = parse_bit(val, "arf", line_no);
        } else if (key == "sum_arf") {
          e.sum_arf_stored = parse_bit(val, "sum_arf", line_no);
        } else if (key == "sum_u_delta") {
          e.sum_u_delta_stored = std::atoi(val.c_str());
        } else if (key == "family") {
          auto parts = split(val, ',');
          if (parts.size() != 2)
            throw ParseError("line " + std::to_string(line_no) + ": family needs d1,d2");
          e.family = {std::atoi(trim(parts[0]).c_str()), std::atoi(trim(parts[1]).c_str())};
        } else if (key == "mirror_of") {
          e.mirror_of = val;
        } else if (key == "amphichiral") {
          e.amphichiral = parse_bit(val, "amphichiral", line_no) != 0;
        } else if (key == "note") {
          e.note = val;
        } else {
          cat.warnings_.push_back("line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "' ignored");
        }
      } catch (const ParseError&) {
        throw;
      } catch (const Error& err) {
        throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
      }
    }
    if (e.name.empty())
      throw ParseError("line " + std::to_string(line_no) + ": record without a name");
    if (!have_pd)
      throw ParseError("line " + std::to_string(line_no) + ": record without a pd");
    if (cat.index_.count(e.name))
      throw ParseError("line " + std::to_string(line_no) + ": duplicate name '" +
                       e.name + "'");
    cat.index_[e.name] = cat.entries_.size();
    cat.entries_.push_back(std::move(e));
  }

  cat.validate_loaded();
  return cat;
}

void Catalog::validate_loaded() {
  for (CatalogEntry& e : entries_) {
    try {
      e.diagram = LinkDiagram::parse_pd(e.pd);
      e.fp = fingerprint(e.diagram, &cache_);
      e.arf_computed = arf(e.diagram, &cache_);
      if (e.diagram.component_count() == 2)
        e.deltas = delta_invariants(e.diagram, &cache_);
    } catch (const Error& err) {
      throw ValidationError("entry " + e.name + ": " + err.what());
    }
    if (!e.components.empty() &&
        (int)e.components.size() != e.diagram.component_count())
      throw ValidationError("entry " + e.name + ": components field has " +
                            std::to_string(e.components.size()) + " names for " +
                            std::to_string(e.diagram.component_count()) +
                            " components");
  }

  // component names must match sublink fingerprints as multisets
  for (const CatalogEntry& e : entries_) {
    if (e.components.empty()) continue;
    std::multiset<std::string> named, traced;
    for (const std::string& c : e.components) {
      const CatalogEntry* k = find(c);
      if (!k)
        throw ValidationError("entry " + e.name + ": unknown component knot '" + c + "'");
      named.insert(k->fp.str());
    }
    for (int i = 0; i < e.diagram.component_count(); i++)
      traced.insert(fingerprint(e.diagram.sublink({i}), &cache_).str());
    if (named != traced)
      throw ValidationError("entry " + e.name +
                            ": component knots do not match sublink fingerprints");
  }

  // mirror entries must be the mirror of their base
  for (const CatalogEntry& e : entries_) {
    if (!e.mirror_of) continue;
    const CatalogEntry* base = find(*e.mirror_of);
    if (!base)
      throw ValidationError("entry " + e.name + ": mirror_of unknown entry '" +
                            *e.mirror_of + "'");
    if (!(fingerprint(base->diagram.mirrored(), &cache_) == e.fp))
      throw ValidationError("entry " + e.name + ": not the mirror of " + *e.mirror_of);
  }

  // identification must be unambiguous except for recorded amphichiral pairs
  std::map<std::string, std::string> seen;
  for (const CatalogEntry& e : entries_) {
    std::string key = e.fp.str();
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen[key] = e.name;
      continue;
    }
    const CatalogEntry& other = at(it->second);
    bool recorded = (e.amphichiral && other.amphichiral) ||
                    (e.mirror_of && *e.mirror_of == other.name && e.amphichiral) ||
                    (other.mirror_of && *other.mirror_of == e.name && other.amphichiral);
    if (!recorded)
      throw ValidationError("entries " + it->second + " and " + e.name +
                            " share a fingerprint");
  }
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const CatalogEntry& Catalog::at(const std::string& name) const {
  const CatalogEntry* e = find(name);
  if (!e) throw UnknownValue("unknown catalog entry '" + name + "'");
  return *e;
}

std::vector<std::string> Catalog::identify(const Fingerprint& f) const {
  std::vector<std::string> out;
  for (const CatalogEntry& e : entries_)
    if (e.fp == f) out.push_back(e.name);
  if (out.empty() && f.m >= 1) {
    LinkDiagram trivial(std::vector<CrossingTuple>{}, f.m);
    if (fingerprint(trivial, &cache_) == f)
      out.push_back("trivial" + std::to_string(f.m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Catalog::identify(const LinkDiagram& d) const {
  return identify(fingerprint(d, &cache_));
}

std::vector<std::string> Catalog::family_members(int delta1, int abs_delta2) const {
  // collect matches, then let the table representative speak for a mirror pair
  std::vector<const CatalogEntry*> matches;
  for (const CatalogEntry& e : entries_) {
    if (!e.deltas) continue;
    long long d2 = e.deltas->delta2;
    if (e.deltas->delta1 == delta1 && (d2 < 0 ? -d2 : d2) == abs_delta2)
      matches.push_back(&e);
  }
  auto base_name = [](const std::string& n) {
    return n.size() > 1 && n[0] == 'm' && std::isupper((unsigned char)n[1])
               ? n.substr(1)
               : n;
  };
  std::map<std::string, std::vector<const CatalogEntry*>> pairs;
  for (const CatalogEntry* e : matches) pairs[base_name(e->name)].push_back(e);

  std::vector<std::string> out;
  for (auto& [base, group] : pairs) {
    const CatalogEntry* rep = nullptr;
    for (const CatalogEntry* e : group)
      if (e->family && e->family->first == delta1 && e->family->second == abs_delta2)
        rep = e;
    if (!rep) rep = group.front();
    out.push_back(rep->name);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> Catalog::knot_u_delta(const std::string& knot_name) const {
  std::string n = knot_name;
  while (n.size() > 1 && n[0] == 'm') {
    const CatalogEntry* direct = find(n);
    if (direct && direct->u_delta && direct->u_delta->exact()) break;
    n = n.substr(1);
  }
  const CatalogEntry* e = find(n);
  if (!e || !e->u_delta || !e->u_delta->exact()) return std::nullopt;
  return e->u_delta->lower;
}

LinkDiagram Catalog::resolve(const std::string& ref) const {
  if (ref.rfind("pd:", 0) == 0) return LinkDiagram::parse_pd(ref.substr(3));
  if (const CatalogEntry* e = find(ref)) return e->diagram;
  if (ref.rfind("trivial", 0) == 0) {
    int m = std::atoi(ref.substr(7).c_str());
    if (m >= 1) return LinkDiagram(std::vector<CrossingTuple>{}, m);
  }
  if (ref.size() > 1 && ref[0] == 'm')
    if (const CatalogEntry* base = find(ref.substr(1))) return base->diagram.mirrored();
  throw UnknownValue("unknown link reference '" + ref + "'");
}

} // namespace deltalink
