#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "bidisk/bipoly.hpp"
#include "bidisk/config.hpp"
#include "bidisk/polycore.hpp"
#include "bidisk/roots.hpp"

namespace bidisk {

// Determinant by Gaussian elimination with magnitude pivoting.
template <class S>
S determinant(std::vector<std::vector<S>> a) {
  const size_t n = a.size();
  S det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t piv = n;
    double best = -1;
    for (size_t r = c; r < n; ++r) {
      if (is_zero(a[r][c])) continue;
      double m = sabs(a[r][c]);
      if (m > best) {
        best = m;
        piv = r;
      }
    }
    if (piv == n) return S(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      if (is_zero(a[r][c])) continue;
      S f = a[r][c] / a[c][c];
      for (size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

// Sylvester matrix in w at a fixed z: rows of f shifted, then rows of g shifted.
template <class S>
std::vector<std::vector<S>> sylvester_at(const BiPoly<S>& f, const BiPoly<S>& g, const S& z) {
  const int mf = f.n2(), mg = g.n2(), n = mf + mg;
  std::vector<S> fc(mf + 1), gc(mg + 1);
  for (int j = 0; j <= mf; ++j) fc[j] = f.w_coeff(j)(z);
  for (int j = 0; j <= mg; ++j) gc[j] = g.w_coeff(j)(z);
  std::vector<std::vector<S>> m(n, std::vector<S>(n, S(0)));
  for (int r = 0; r < mg; ++r)
    for (int j = 0; j <= mf; ++j) m[r][r + j] = fc[j];
  for (int r = 0; r < mf; ++r)
    for (int j = 0; j <= mg; ++j) m[mg + r][r + j] = gc[j];
  return m;
}

// Res_w(f, g) with the nominal w-degrees f.n2(), g.n2(), recovered by
// evaluation and interpolation (roots of unity numerically, integer nodes exactly).
template <class S>
UniPoly<S> sylvester_resultant(const BiPoly<S>& f, const BiPoly<S>& g) {
  const int D = f.n2() * g.n1() + g.n2() * f.n1();
  const int N = D + 1;
  if (f.n2() + g.n2() == 0) return UniPoly<S>(std::vector<S>{S(1)});
  if constexpr (is_exact_v<S>) {
    std::vector<S> xs(N), dd(N);
    for (int k = 0; k < N; ++k) {
      xs[k] = S(k);
      dd[k] = determinant(sylvester_at(f, g, xs[k]));
    }
    for (int lvl = 1; lvl < N; ++lvl)
      for (int k = N - 1; k >= lvl; --k) dd[k] = (dd[k] - dd[k - 1]) / (xs[k] - xs[k - lvl]);
    UniPoly<S> acc(std::vector<S>{dd[N - 1]});
    for (int k = N - 2; k >= 0; --k) {
      acc = acc * UniPoly<S>(std::vector<S>{-xs[k], S(1)});
      acc += UniPoly<S>(std::vector<S>{dd[k]});
    }
    std::vector<S> c = acc.coeffs();
    c.resize(N, S(0));
    return UniPoly<S>(std::move(c));
  } else {
    std::vector<cplx> vals(N);
    for (int k = 0; k < N; ++k) {
      cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / N);
      vals[k] = determinant(sylvester_at(f, g, z));
    }
    std::vector<cplx> c(N);
    for (int j = 0; j < N; ++j) {
      cplx s(0);
      for (int k = 0; k < N; ++k) s += vals[k] * std::polar(1.0, -2.0 * std::numbers::pi * double(j) * k / N);
      c[j] = s / double(N);
    }
    return UniPoly<S>(std::move(c));
  }
}

struct ResultantData {
  UniPoly<cplx> r;
  std::optional<UniPoly<GaussRat>> exact_r;
  std::vector<CircleRoot> circle_roots;
  int total_circle_multiplicity = 0;
  bool degenerate = false;
  double identity_residual = 0;  // max |r - z^{nm} det T_p| / scale on circle samples
  double scale = 1;
};

ResultantData resultant_inner(const BiPoly<cplx>& p, const Tolerances& tol = {});
ResultantData resultant_inner(const BiPoly<GaussRat>& p, const Tolerances& tol = {});

// max |r(z) - z^{nm} det T_p(z)| / scale over `samples` circle points.
double lemma_identity_residual(const BiPoly<cplx>& p, const UniPoly<cplx>& r, int samples);

// Affine common zeros of f and g (numeric).
std::vector<std::pair<cplx, cplx>> common_zeros(const BiPoly<cplx>& f, const BiPoly<cplx>& g,
                                                const Tolerances& tol = {});
// Common zeros of p and its reflection on the torus.
std::vector<std::pair<cplx, cplx>> torus_common_zeros(const BiPoly<cplx>& p, const Tolerances& tol = {});

struct PointMultiplicity {
  std::pair<cplx, cplx> point;
  int multiplicity = 0;
};

struct SaturationCertificate {
  bool saturated = false;
  bool degenerate = false;
  int count = 0;
  int required = 0;
  std::vector<PointMultiplicity> per_point;
  std::vector<CircleRoot> circle_roots;
};

SaturationCertificate is_saturated(const BiPoly<cplx>& p, const Tolerances& tol = {});
SaturationCertificate is_saturated(const BiPoly<GaussRat>& p, const Tolerances& tol = {});

int line_multiplicity(const BiPoly<cplx>& p, const BiPoly<cplx>& v, cplx z0, const Tolerances& tol = {});
int line_multiplicity(const BiPoly<GaussRat>& p, const BiPoly<GaussRat>& v, const GaussRat& z0);

int point_multiplicity(const BiPoly<cplx>& p, std::pair<cplx, cplx> zeta, const Tolerances& tol = {});
// Exact variant: rotation and resultant over Q(i); the shear exponent is chosen numerically.
int point_multiplicity(const BiPoly<GaussRat>& p, std::pair<GaussRat, GaussRat> zeta, const Tolerances& tol = {});

}  // namespace bidisk
