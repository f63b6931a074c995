#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace deltalink {

// Polynomial in z with integer coefficients, index = degree.
struct ZPoly {
  std::vector<long long> c;

  ZPoly() = default;
  explicit ZPoly(std::vector<long long> coeffs) : c(std::move(coeffs)) { trim(); }

  static ZPoly zero() { return ZPoly{}; }
  static ZPoly constant(long long k) { return k == 0 ? ZPoly{} : ZPoly{{k}}; }
  static ZPoly z() { return ZPoly{{0, 1}}; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return c.empty() ? -1 : (int)c.size() - 1; }
  long long coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : 0; }

  ZPoly& operator+=(const ZPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); i++) c[i] += o.c[i];
    trim();
    return *this;
  }
  ZPoly& operator-=(const ZPoly& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); i++) c[i] -= o.c[i];
    trim();
    return *this;
  }
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { a += b; return a; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { a -= b; return a; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); i++)
      for (size_t j = 0; j < b.c.size(); j++)
        r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  ZPoly negated() const {
    ZPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  // substitute z -> -z
  ZPoly flip_z() const {
    ZPoly r = *this;
    for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
  }
  ZPoly shifted(int k) const { // multiply by z^k
    if (is_zero()) return {};
    ZPoly r;
    r.c.assign(c.size() + k, 0);
    for (size_t i = 0; i < c.size(); i++) r.c[i + k] = c[i];
    return r;
  }
  bool operator==(const ZPoly& o) const { return c == o.c; }

  // prints like "1 + 2*z^2 - z^3", zero terms omitted
  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c.size(); i++) {
      long long a = c[i];
      if (a == 0) continue;
      if (first) {
        if (a < 0) os << "-";
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      long long m = a < 0 ? -a : a;
      if (i == 0) {
        os << m;
      } else {
        if (m != 1) os << m << "*";
        os << "z";
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }
};

// Laurent polynomial, used for the Kauffman bracket (variable A) and the
// Alexander oracle (variable t).
struct Laurent {
  int lo = 0;                  // degree of c[0]
  std::vector<long long> c;

  Laurent() = default;
  Laurent(int lo_, std::vector<long long> c_) : lo(lo_), c(std::move(c_)) { trim(); }
  static Laurent zero() { return {}; }
  static Laurent mono(long long k, int d) {
    if (k == 0) return {};
    Laurent r;
    r.lo = d;
    r.c = {k};
    return r;
  }

  void trim() {
    size_t lead = 0;
    while (lead < c.size() && c[lead] == 0) lead++;
    if (lead > 0) {
      c.erase(c.begin(), c.begin() + (long)lead);
      lo += (int)lead;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) lo = 0;
  }
  bool is_zero() const { return c.empty(); }
  int min_deg() const { return lo; }
  int max_deg() const { return lo + (int)c.size() - 1; }
  int span() const { return is_zero() ? 0 : max_deg() - min_deg(); }
  long long coeff(int d) const {
    int i = d - lo;
    return (i >= 0 && i < (int)c.size()) ? c[i] : 0;
  }

  Laurent& operator+=(const Laurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    int nlo = std::min(lo, o.lo);
    int nhi = std::max(max_deg(), o.max_deg());
    std::vector<long long> nc(nhi - nlo + 1, 0);
    for (int d = lo; d <= max_deg(); d++) nc[d - nlo] += coeff(d);
    for (int d = o.lo; d <= o.max_deg(); d++) nc[d - nlo] += o.coeff(d);
    lo = nlo;
    c = std::move(nc);
    trim();
    return *this;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { a += b; return a; }
  friend Laurent operator-(Laurent a, const Laurent& b) {
    Laurent nb = b;
    for (auto& x : nb.c) x = -x;
    a += nb;
    return a;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Laurent r;
    r.lo = a.lo + b.lo;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); i++)
      for (size_t j = 0; j < b.c.size(); j++)
        r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  // substitute variable -> variable^-1
  Laurent inverted() const {
    if (is_zero()) return {};
    Laurent r;
    r.c.assign(c.rbegin(), c.rend());
    r.lo = -max_deg();
    return r;
  }
  bool operator==(const Laurent& o) const { return lo == o.lo && c == o.c; }

  std::string str(const char* var = "A") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = lo; d <= max_deg(); d++) {
      long long a = coeff(d);
      if (a == 0) continue;
      if (first) {
        if (a < 0) os << "-";
        first = false;
      } else {
        os << (a < 0 ? " - " : " + ");
      }
      long long m = a < 0 ? -a : a;
      if (d == 0) {
        os << m;
      } else {
        if (m != 1) os << m << "*";
        os << var;
        if (d != 1) os << "^" << d;
      }
    }
    return os.str();
  }
};

} // namespace deltalink
