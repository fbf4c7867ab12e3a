#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "bidisk/bipoly.hpp"
#include "bidisk/errors.hpp"
#include "bidisk/scalar.hpp"
#include "bidisk/unipoly.hpp"

namespace bidisk {

template <class S>
S spow(const S& x, int k) {
  S r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// p~(z,w) = z^n1 w^n2 conj(p(1/conj z, 1/conj w)) at bidegree n.
template <class S>
BiPoly<S> reflect(const BiPoly<S>& p, Bidegree n) {
  Bidegree s = p.support();
  if (s.n1 > n.n1 || s.n2 > n.n2) throw DegreeError("reflect: support exceeds the declared bidegree");
  BiPoly<S> r(n);
  for (int i = 0; i <= n.n1; ++i)
    for (int j = 0; j <= n.n2; ++j) r.at(i, j) = sconj(p.coeff(n.n1 - i, n.n2 - j));
  return r;
}

template <class S>
BiPoly<S> reflect(const BiPoly<S>& p) {
  return reflect(p, p.bidegree());
}

template <class S>
S eval(const BiPoly<S>& p, const S& z, const S& w) {
  S acc(0);
  for (int i = p.n1(); i >= 0; --i) {
    S row(0);
    for (int j = p.n2(); j >= 0; --j) row = row * w + p.at(i, j);
    acc = acc * z + row;
  }
  return acc;
}

// Evaluation of an exact polynomial at a floating point.
inline cplx eval_c(const BiPoly<GaussRat>& p, cplx z, cplx w) {
  cplx acc(0);
  for (int i = p.n1(); i >= 0; --i) {
    cplx row(0);
    for (int j = p.n2(); j >= 0; --j) row = row * w + to_cplx(p.at(i, j));
    acc = acc * z + row;
  }
  return acc;
}

template <class S>
bool on_circle(const S& x, double tol) {
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return norm2(x) == S(1);
  } else {
    return std::abs(std::abs(x) - 1.0) <= tol;
  }
}

// z -> p(z zeta1, z zeta2).
template <class S>
UniPoly<S> slice(const BiPoly<S>& p, const S& zeta1, const S& zeta2, double torus_tol = 1e-10) {
  if (!on_circle(zeta1, torus_tol) || !on_circle(zeta2, torus_tol))
    throw DomainError("slice: base point is not on the torus");
  std::vector<S> c(p.n1() + p.n2() + 1, S(0));
  for (int i = 0; i <= p.n1(); ++i)
    for (int j = 0; j <= p.n2(); ++j) c[i + j] += p.at(i, j) * spow(zeta1, i) * spow(zeta2, j);
  return UniPoly<S>(std::move(c));
}

// phi_k(p)(z,w) = p(w^k z, w) at bidegree (n1, k n1 + n2).
template <class S>
BiPoly<S> shear(const BiPoly<S>& p, int k) {
  if (k < 0) throw DomainError("shear: negative exponent");
  BiPoly<S> r(Bidegree{p.n1(), k * p.n1() + p.n2()});
  for (int i = 0; i <= p.n1(); ++i)
    for (int j = 0; j <= p.n2(); ++j) r.at(i, j + k * i) = p.at(i, j);
  return r;
}

// p(a z, b w).
template <class S>
BiPoly<S> rotate(const BiPoly<S>& p, const S& a, const S& b) {
  BiPoly<S> r(p.bidegree());
  for (int i = 0; i <= p.n1(); ++i)
    for (int j = 0; j <= p.n2(); ++j) r.at(i, j) = p.at(i, j) * spow(a, i) * spow(b, j);
  return r;
}

// p(w, z).
template <class S>
BiPoly<S> swap_vars(const BiPoly<S>& p) {
  BiPoly<S> r(Bidegree{p.n2(), p.n1()});
  for (int i = 0; i <= p.n1(); ++i)
    for (int j = 0; j <= p.n2(); ++j) r.at(j, i) = p.at(i, j);
  return r;
}

template <class S>
BiPoly<S> linear_combine(const std::vector<std::pair<S, BiPoly<S>>>& terms) {
  Bidegree d{0, 0};
  for (const auto& t : terms) d = max(d, t.second.bidegree());
  BiPoly<S> r(d);
  for (const auto& [a, q] : terms)
    for (int i = 0; i <= q.n1(); ++i)
      for (int j = 0; j <= q.n2(); ++j) r.at(i, j) += a * q.at(i, j);
  return r;
}

template <class S>
BiPoly<S> multiply(const BiPoly<S>& p, const BiPoly<S>& q) {
  BiPoly<S> r(Bidegree{p.n1() + q.n1(), p.n2() + q.n2()});
  for (int i = 0; i <= p.n1(); ++i)
    for (int j = 0; j <= p.n2(); ++j) {
      if (is_zero(p.at(i, j))) continue;
      for (int k = 0; k <= q.n1(); ++k)
        for (int l = 0; l <= q.n2(); ++l) r.at(i + k, j + l) += p.at(i, j) * q.at(k, l);
    }
  return r;
}

template <class S>
BiPoly<S> dz(const BiPoly<S>& p) {
  BiPoly<S> r(Bidegree{std::max(p.n1() - 1, 0), p.n2()});
  for (int i = 1; i <= p.n1(); ++i)
    for (int j = 0; j <= p.n2(); ++j) r.at(i - 1, j) = p.at(i, j) * S(i);
  return r;
}

template <class S>
BiPoly<S> dw(const BiPoly<S>& p) {
  BiPoly<S> r(Bidegree{p.n1(), std::max(p.n2() - 1, 0)});
  for (int i = 0; i <= p.n1(); ++i)
    for (int j = 1; j <= p.n2(); ++j) r.at(i, j - 1) = p.at(i, j) * S(j);
  return r;
}

// Largest coefficient difference |a - b|.
template <class S>
double max_abs_diff(const BiPoly<S>& a, const BiPoly<S>& b) {
  Bidegree d = max(a.bidegree(), b.bidegree());
  double m = 0;
  for (int i = 0; i <= d.n1; ++i)
    for (int j = 0; j <= d.n2; ++j) m = std::max(m, sabs(a.coeff(i, j) - b.coeff(i, j)));
  return m;
}

// v = reflect(v, n); relative tolerance in the numeric backend, exact otherwise.
template <class S>
bool is_symmetric(const BiPoly<S>& v, Bidegree n, double tol = 1e-12) {
  Bidegree s = v.support();
  if (s.n1 > n.n1 || s.n2 > n.n2) return false;
  BiPoly<S> r = reflect(v, n);
  if constexpr (is_exact_v<S>) {
    (void)tol;
    return r == v;
  } else {
    return max_abs_diff(r, v) <= tol * std::max(1.0, v.norm1());
  }
}

inline BiPoly<cplx> to_complex(const BiPoly<GaussRat>& p) {
  std::vector<cplx> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.push_back(to_cplx(x));
  return BiPoly<cplx>(p.bidegree(), std::move(c));
}

inline BiPoly<cplx> to_complex(const BiPoly<cplx>& p) { return p; }

// Homogeneous parts of p(zeta - zeta o eta) in the shift variable eta.
template <class S>
struct HomogExpansion {
  S zeta1;
  S zeta2;
  std::vector<BiPoly<S>> parts;  // parts[j] is homogeneous of total degree j
  int order = 0;                 // first index with a nonzero part

  const BiPoly<S>& leading() const { return parts.at(order); }
};

inline long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

template <class S>
HomogExpansion<S> homog_expand(const BiPoly<S>& p, const S& zeta1, const S& zeta2, double rel_tol = 1e-9) {
  if (p.is_zero()) throw DomainError("homog_expand: zero polynomial");
  const int n1 = p.n1(), n2 = p.n2();
  HomogExpansion<S> h{zeta1, zeta2, {}, 0};
  h.parts.assign(n1 + n2 + 1, BiPoly<S>(p.bidegree()));
  for (int i = 0; i <= n1; ++i)
    for (int j = 0; j <= n2; ++j) {
      S c = p.at(i, j) * spow(zeta1, i) * spow(zeta2, j);
      if (is_zero(c)) continue;
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) {
          long s = binom(i, a) * binom(j, b) * (((a + b) % 2) ? -1 : 1);
          h.parts[a + b].at(a, b) += c * S(s);
        }
    }
  double scale = p.norm1();
  h.order = -1;
  for (int k = 0; k <= n1 + n2; ++k) {
    bool nonzero;
    if constexpr (is_exact_v<S>) {
      (void)rel_tol;
      nonzero = !h.parts[k].is_zero();
    } else {
      double m = 0;
      for (const auto& x : h.parts[k].coeffs()) m = std::max(m, std::abs(x));
      nonzero = m > rel_tol * scale * std::pow(2.0, k);
    }
    if (nonzero) {
      h.order = k;
      break;
    }
  }
  if (h.order < 0) throw NumericError("homog_expand: all parts vanish below tolerance");
  return h;
}

template <class S>
S eval(const HomogExpansion<S>& h, const S& eta1, const S& eta2) {
  S acc(0);
  for (const auto& part : h.parts) acc += eval(part, eta1, eta2);
  return acc;
}

}  // namespace bidisk
