#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "bidisk/errors.hpp"
#include "bidisk/scalar.hpp"

namespace bidisk {

// Univariate polynomial with ascending coefficients; the degree is the
// declared length minus one and may be overstated.
template <class S>
class UniPoly {
 public:
  UniPoly() : c_(1, S(0)) {}
  explicit UniPoly(std::vector<S> c) : c_(std::move(c)) {
    if (c_.empty()) c_.push_back(S(0));
  }

  static UniPoly monomial(const S& a, int k) {
    std::vector<S> c(k + 1, S(0));
    c[k] = a;
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<S>& coeffs() const { return c_; }
  S coeff(int k) const { return (k >= 0 && k <= degree()) ? c_[k] : S(0); }

  // Index of the highest exactly nonzero coefficient, -1 for the zero polynomial.
  int true_degree() const {
    for (int k = degree(); k >= 0; --k)
      if (!bidisk::is_zero(c_[k])) return k;
    return -1;
  }
  bool is_zero() const { return true_degree() < 0; }

  double norm1() const {
    double s = 0;
    for (const auto& x : c_) s += sabs(x);
    return s;
  }

  // Drops leading coefficients with |c| <= rel * norm1 (exact zeros when rel = 0).
  UniPoly trimmed(double rel = 0.0) const {
    double cut = rel * norm1();
    int d = degree();
    while (d > 0 && (bidisk::is_zero(c_[d]) || sabs(c_[d]) <= cut)) --d;
    return UniPoly(std::vector<S>(c_.begin(), c_.begin() + d + 1));
  }

  S operator()(const S& z) const {
    S acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * z + c_[k];
    return acc;
  }

  UniPoly derivative() const {
    if (degree() == 0) return UniPoly();
    std::vector<S> d(degree());
    for (int k = 1; k <= degree(); ++k) d[k - 1] = c_[k] * S(k);
    return UniPoly(std::move(d));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.degree() > degree()) c_.resize(o.c_.size(), S(0));
    for (int k = 0; k <= o.degree(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.degree() > degree()) c_.resize(o.c_.size(), S(0));
    for (int k = 0; k <= o.degree(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  UniPoly& operator*=(const S& a) {
    for (auto& x : c_) x *= a;
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const S& s) { return a *= s; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
    for (int i = 0; i <= a.degree(); ++i) {
      if (bidisk::is_zero(a.c_[i])) continue;
      for (int j = 0; j <= b.degree(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    int d = std::max(a.degree(), b.degree());
    for (int k = 0; k <= d; ++k)
      if (a.coeff(k) != b.coeff(k)) return false;
    return true;
  }

 private:
  std::vector<S> c_;
};

// q~(z) = z^n conj(q(1/conj z)).
template <class S>
UniPoly<S> reflect(const UniPoly<S>& q, int n) {
  if (q.true_degree() > n) throw DegreeError("reflect: degree exceeds declared degree");
  std::vector<S> c(n + 1, S(0));
  for (int k = 0; k <= n; ++k) c[k] = sconj(q.coeff(n - k));
  return UniPoly<S>(std::move(c));
}

// Euclidean division over the field; divisor must be nonzero after exact trimming.
template <class S>
std::pair<UniPoly<S>, UniPoly<S>> divmod(const UniPoly<S>& a, const UniPoly<S>& b) {
  int db = b.true_degree();
  if (db < 0) throw DomainError("divmod: division by zero polynomial");
  std::vector<S> r = a.coeffs();
  int da = a.true_degree();
  if (da < db) return {UniPoly<S>(), a};
  std::vector<S> q(da - db + 1, S(0));
  S lead = b.coeff(db);
  for (int k = da; k >= db; --k) {
    S f = r[k] / lead;
    q[k - db] = f;
    if (bidisk::is_zero(f)) continue;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
    r[k] = S(0);
  }
  r.resize(std::max(db, 1));
  return {UniPoly<S>(std::move(q)), UniPoly<S>(std::move(r)).trimmed()};
}

template <class S>
UniPoly<S> make_monic(const UniPoly<S>& a) {
  int d = a.true_degree();
  if (d < 0) return a;
  S inv = S(1) / a.coeff(d);
  return a.trimmed() * inv;
}

// Monic gcd by the Euclidean algorithm; meaningful in the exact backend.
template <class S>
UniPoly<S> poly_gcd(UniPoly<S> a, UniPoly<S> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// Exact multiplicity of z0 as a root (repeated division by z - z0).
template <class S>
int exact_root_order(UniPoly<S> q, const S& z0) {
  if (q.is_zero()) throw DomainError("exact_root_order: zero polynomial");
  UniPoly<S> lin(std::vector<S>{-z0, S(1)});
  int k = 0;
  for (;;) {
    auto [quo, rem] = divmod(q, lin);
    if (!rem.is_zero()) return k;
    q = quo;
    ++k;
  }
}

// Yun's square-free decomposition: q = c * prod_k a_k^k (exact backend).
template <class S>
std::vector<std::pair<UniPoly<S>, int>> squarefree_decomposition(const UniPoly<S>& q) {
  std::vector<std::pair<UniPoly<S>, int>> out;
  if (q.true_degree() <= 0) return out;
  UniPoly<S> f = make_monic(q);
  UniPoly<S> fp = f.derivative();
  UniPoly<S> a = poly_gcd(f, fp);
  UniPoly<S> b = divmod(f, a).first;
  UniPoly<S> c = divmod(fp, a).first;
  UniPoly<S> d = c - b.derivative();
  int k = 1;
  while (b.true_degree() > 0) {
    UniPoly<S> g = poly_gcd(b, d);
    if (g.true_degree() > 0) out.emplace_back(g, k);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

inline UniPoly<cplx> to_complex_poly(const UniPoly<GaussRat>& q) {
  std::vector<cplx> c;
  c.reserve(q.coeffs().size());
  for (const auto& x : q.coeffs()) c.push_back(to_cplx(x));
  return UniPoly<cplx>(std::move(c));
}

inline UniPoly<cplx> to_complex_poly(const UniPoly<cplx>& q) { return q; }

}  // namespace bidisk
