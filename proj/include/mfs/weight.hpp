#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mfs/rational.hpp"

namespace mfs {

// A point of a weight lattice in epsilon-coordinates.  One block of
// coordinates per simple component (type A uses the trace-zero model in
// rank+1 coordinates), plus one trailing coordinate per central torus
// factor.  Fundamental-weight coordinates are derived through the owning
// RootDatum, which keeps the two views consistent by construction.
struct Weight {
  std::vector<Rat> eps;

  Weight() = default;
  explicit Weight(std::vector<Rat> e) : eps(std::move(e)) {}
  explicit Weight(std::size_t dim) : eps(dim) {}

  std::size_t dim() const { return eps.size(); }
  const Rat& operator[](std::size_t i) const { return eps[i]; }
  Rat& operator[](std::size_t i) { return eps[i]; }

  friend bool operator==(const Weight& a, const Weight& b) { return a.eps == b.eps; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return a.eps < b.eps; }

  friend Weight operator+(const Weight& a, const Weight& b) {
    Weight r(a.eps.size());
    for (std::size_t i = 0; i < a.eps.size(); ++i) r.eps[i] = a.eps[i] + b.eps[i];
    return r;
  }
  friend Weight operator-(const Weight& a, const Weight& b) {
    Weight r(a.eps.size());
    for (std::size_t i = 0; i < a.eps.size(); ++i) r.eps[i] = a.eps[i] - b.eps[i];
    return r;
  }
  friend Weight operator*(const Rat& c, const Weight& w) {
    Weight r(w.eps.size());
    for (std::size_t i = 0; i < w.eps.size(); ++i) r.eps[i] = c * w.eps[i];
    return r;
  }
  Weight operator-() const { return Rat(-1) * *this; }
  Weight& operator+=(const Weight& o) { *this = *this + o; return *this; }
  Weight& operator-=(const Weight& o) { *this = *this - o; return *this; }

  bool is_zero() const {
    for (const auto& c : eps)
      if (!c.is_zero()) return false;
    return true;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < eps.size(); ++i) {
      if (i) s += ",";
      s += eps[i].str();
    }
    return s + ")";
  }
};

inline Rat dot(const Weight& a, const Weight& b) {
  Rat s;
  for (std::size_t i = 0; i < a.eps.size(); ++i) s += a.eps[i] * b.eps[i];
  return s;
}

}  // namespace mfs
