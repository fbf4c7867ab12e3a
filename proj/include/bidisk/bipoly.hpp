#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bidisk/errors.hpp"
#include "bidisk/scalar.hpp"
#include "bidisk/unipoly.hpp"

namespace bidisk {

struct Bidegree {
  int n1 = 0;
  int n2 = 0;
  friend bool operator==(const Bidegree& a, const Bidegree& b) { return a.n1 == b.n1 && a.n2 == b.n2; }
  friend bool operator!=(const Bidegree& a, const Bidegree& b) { return !(a == b); }
  bool covers(const Bidegree& o) const { return n1 >= o.n1 && n2 >= o.n2; }
};

inline Bidegree max(const Bidegree& a, const Bidegree& b) {
  return {std::max(a.n1, b.n1), std::max(a.n2, b.n2)};
}

// Dense bivariate polynomial; at(i, j) is the coefficient of z^i w^j.
// The bidegree is declared and only bounds the support.
template <class S>
class BiPoly {
 public:
  BiPoly() : BiPoly(Bidegree{0, 0}) {}
  explicit BiPoly(Bidegree d) : deg_(d), c_(size_for(d), S(0)) {}
  BiPoly(Bidegree d, std::vector<S> coeffs) : deg_(d), c_(std::move(coeffs)) {
    if (c_.size() != size_for(d)) throw DegreeError("BiPoly: coefficient count does not match bidegree");
  }
  BiPoly(Bidegree d, std::initializer_list<std::tuple<int, int, S>> terms) : BiPoly(d) {
    for (const auto& [i, j, a] : terms) at(i, j) += a;
  }

  static BiPoly constant(const S& a, Bidegree d = {0, 0}) {
    BiPoly p(d);
    p.at(0, 0) = a;
    return p;
  }

  const Bidegree& bidegree() const { return deg_; }
  int n1() const { return deg_.n1; }
  int n2() const { return deg_.n2; }
  const std::vector<S>& coeffs() const { return c_; }

  S& at(int i, int j) {
    check(i, j);
    return c_[static_cast<size_t>(i) * (deg_.n2 + 1) + j];
  }
  const S& at(int i, int j) const {
    check(i, j);
    return c_[static_cast<size_t>(i) * (deg_.n2 + 1) + j];
  }
  S coeff(int i, int j) const {
    if (i < 0 || j < 0 || i > deg_.n1 || j > deg_.n2) return S(0);
    return c_[static_cast<size_t>(i) * (deg_.n2 + 1) + j];
  }

  // Componentwise degrees of the exact support; (-1,-1) for the zero polynomial.
  Bidegree support() const {
    Bidegree s{-1, -1};
    for (int i = 0; i <= deg_.n1; ++i)
      for (int j = 0; j <= deg_.n2; ++j)
        if (!bidisk::is_zero(coeff(i, j))) {
          s.n1 = std::max(s.n1, i);
          s.n2 = std::max(s.n2, j);
        }
    return s;
  }
  bool is_zero() const { return support().n1 < 0; }

  double norm1() const {
    double s = 0;
    for (const auto& x : c_) s += sabs(x);
    return s;
  }

  // Same polynomial with another declared bidegree.
  BiPoly with_bidegree(Bidegree d) const {
    Bidegree s = support();
    if (s.n1 > d.n1 || s.n2 > d.n2) throw DegreeError("with_bidegree: support exceeds requested bidegree");
    BiPoly out(d);
    for (int i = 0; i <= std::min(d.n1, deg_.n1); ++i)
      for (int j = 0; j <= std::min(d.n2, deg_.n2); ++j) out.at(i, j) = coeff(i, j);
    return out;
  }

  // Coefficient polynomial p_j(z) of w^j.
  UniPoly<S> w_coeff(int j) const {
    std::vector<S> c(deg_.n1 + 1, S(0));
    for (int i = 0; i <= deg_.n1; ++i) c[i] = coeff(i, j);
    return UniPoly<S>(std::move(c));
  }
  // Coefficient polynomial of z^i as a polynomial in w.
  UniPoly<S> z_coeff(int i) const {
    std::vector<S> c(deg_.n2 + 1, S(0));
    for (int j = 0; j <= deg_.n2; ++j) c[j] = coeff(i, j);
    return UniPoly<S>(std::move(c));
  }

  BiPoly& operator+=(const BiPoly& o) {
    grow(o.deg_);
    for (int i = 0; i <= o.deg_.n1; ++i)
      for (int j = 0; j <= o.deg_.n2; ++j) at(i, j) += o.at(i, j);
    return *this;
  }
  BiPoly& operator-=(const BiPoly& o) {
    grow(o.deg_);
    for (int i = 0; i <= o.deg_.n1; ++i)
      for (int j = 0; j <= o.deg_.n2; ++j) at(i, j) -= o.at(i, j);
    return *this;
  }
  BiPoly& operator*=(const S& a) {
    for (auto& x : c_) x *= a;
    return *this;
  }
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const S& s) { return a *= s; }
  friend BiPoly operator*(const S& s, BiPoly a) { return a *= s; }
  friend BiPoly operator-(BiPoly a) { return a *= S(-1); }

  // Coefficientwise equality after trimming (declared bidegrees may differ).
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    Bidegree d = max(a.deg_, b.deg_);
    for (int i = 0; i <= d.n1; ++i)
      for (int j = 0; j <= d.n2; ++j)
        if (a.coeff(i, j) != b.coeff(i, j)) return false;
    return true;
  }
  friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

 private:
  static size_t size_for(Bidegree d) {
    if (d.n1 < 0 || d.n2 < 0) throw DegreeError("BiPoly: negative bidegree");
    return static_cast<size_t>(d.n1 + 1) * static_cast<size_t>(d.n2 + 1);
  }
  void check(int i, int j) const {
    if (i < 0 || j < 0 || i > deg_.n1 || j > deg_.n2) throw DegreeError("BiPoly: index outside bidegree");
  }
  void grow(Bidegree d) {
    if (deg_.covers(d)) return;
    BiPoly g(max(deg_, d));
    for (int i = 0; i <= deg_.n1; ++i)
      for (int j = 0; j <= deg_.n2; ++j) g.at(i, j) = at(i, j);
    *this = std::move(g);
  }

  Bidegree deg_;
  std::vector<S> c_;
};

}  // namespace bidisk
