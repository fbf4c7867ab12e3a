#include "bidisk/intersect.hpp"

#include <algorithm>
#include <cmath>

#include "bidisk/errors.hpp"
#include "bidisk/stability.hpp"

namespace bidisk {

namespace {

double resultant_scale(const BiPoly<cplx>& p) {
  return std::pow(std::max(p.norm1(), 1e-300), 2 * p.n2());
}

bool vanishes(const UniPoly<cplx>& r, double scale) {
  double m = 0;
  for (auto c : r.coeffs()) m = std::max(m, std::abs(c));
  return m <= 1e-10 * scale;
}

// Coefficients of f(z0, w) as a polynomial in w.
UniPoly<cplx> fibre(const BiPoly<cplx>& f, cplx z0) {
  std::vector<cplx> c(f.n2() + 1);
  for (int j = 0; j <= f.n2(); ++j) c[j] = f.w_coeff(j)(z0);
  return UniPoly<cplx>(std::move(c));
}

std::pair<cplx, cplx> snap_torus(std::pair<cplx, cplx> x) {
  return {x.first / std::abs(x.first), x.second / std::abs(x.second)};
}

bool exact_unit(cplx x, GaussRat& out) {
  const std::pair<cplx, GaussRat> units[] = {{cplx(1, 0), GaussRat(1)},
                                             {cplx(-1, 0), GaussRat(-1)},
                                             {cplx(0, 1), GaussRat(0, 1)},
                                             {cplx(0, -1), GaussRat(0, -1)}};
  for (const auto& [c, g] : units)
    if (std::abs(x - c) < 1e-9) {
      out = g;
      return true;
    }
  return false;
}

// Smallest k >= 1 with a != b^k for every common zero (a, b) other than (1, 1).
int separating_shear(const BiPoly<cplx>& rotated, const Tolerances& tol) {
  auto zeros = common_zeros(rotated, reflect(rotated), tol);
  const int kmax = 2 * rotated.n1() * rotated.n2() + tol.shear_extra;
  for (int k = 1; k <= kmax; ++k) {
    bool ok = true;
    for (const auto& [a, b] : zeros) {
      if (std::abs(a - 1.0) + std::abs(b - 1.0) < 1e-5) continue;
      if (std::abs(a - std::pow(b, k)) < 1e-6) {
        ok = false;
        break;
      }
    }
    if (ok) return k;
  }
  throw UnknownResult("point_multiplicity: no separating shear exponent up to " + std::to_string(kmax));
}

}  // namespace

double lemma_identity_residual(const BiPoly<cplx>& p, const UniPoly<cplx>& r, int samples) {
  MatTrigPoly T = schur_cohn_form(p, Sweep::Z);
  const int nm = p.n1() * p.n2();
  double worst = 0;
  for (int k = 0; k < samples; ++k) {
    cplx z = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.37) / samples);
    cplx d = T.size > 0 ? T.eval(z).determinant() : cplx(1);
    worst = std::max(worst, std::abs(r(z) - std::pow(z, nm) * d));
  }
  return worst / resultant_scale(p);
}

ResultantData resultant_inner(const BiPoly<cplx>& p, const Tolerances& tol) {
  if (p.is_zero()) throw DomainError("resultant_inner: zero polynomial");
  ResultantData rd;
  rd.r = sylvester_resultant(p, reflect(p));
  rd.scale = resultant_scale(p);
  rd.degenerate = vanishes(rd.r, rd.scale);
  if (!rd.degenerate) {
    rd.circle_roots = circle_roots(rd.r, tol);
    rd.total_circle_multiplicity = total_multiplicity(rd.circle_roots);
  }
  rd.identity_residual = lemma_identity_residual(p, rd.r, 32);
  return rd;
}

ResultantData resultant_inner(const BiPoly<GaussRat>& p, const Tolerances& tol) {
  if (p.is_zero()) throw DomainError("resultant_inner: zero polynomial");
  ResultantData rd;
  UniPoly<GaussRat> r = sylvester_resultant(p, reflect(p));
  rd.exact_r = r;
  rd.r = to_complex_poly(r);
  BiPoly<cplx> pc = to_complex(p);
  rd.scale = resultant_scale(pc);
  rd.degenerate = r.is_zero();
  if (!rd.degenerate) {
    rd.circle_roots = circle_roots(r, tol);
    rd.total_circle_multiplicity = total_multiplicity(rd.circle_roots);
  }
  rd.identity_residual = lemma_identity_residual(pc, rd.r, 32);
  return rd;
}

std::vector<std::pair<cplx, cplx>> common_zeros(const BiPoly<cplx>& f, const BiPoly<cplx>& g, const Tolerances& tol) {
  UniPoly<cplx> r = sylvester_resultant(f, g);
  double scale = std::pow(std::max(f.norm1(), 1e-300), g.n2()) * std::pow(std::max(g.norm1(), 1e-300), f.n2());
  if (vanishes(r, scale)) throw DomainError("common_zeros: resultant vanishes identically");
  std::vector<std::pair<cplx, cplx>> out;
  for (const auto& cl : root_clusters(r, tol)) {
    cplx z0 = cl.center;
    UniPoly<cplx> fw = fibre(f, z0);
    UniPoly<cplx> gw = fibre(g, z0);
    double fs = fw.norm1(), gs = gw.norm1();
    if (fs <= 1e-10 * f.norm1() * std::pow(std::max(1.0, std::abs(z0)), f.n1())) {
      // f vanishes on the whole line; take the fibre roots of g instead.
      std::swap(fw, gw);
      std::swap(fs, gs);
    }
    std::vector<cplx> ws;
    for (const auto& wc : root_clusters(fw, tol)) ws.push_back(wc.center);
    for (cplx w : ws) {
      double wscale = gs * std::pow(std::max(1.0, std::abs(w)), gw.degree());
      if (std::abs(gw(w)) > tol.common_zero_rel * std::max(wscale, 1e-300)) continue;
      bool dup = false;
      for (const auto& [a, b] : out)
        if (std::abs(a - z0) < 1e-7 && std::abs(b - w) < 1e-4) dup = true;
      if (!dup) out.emplace_back(z0, w);
    }
  }
  return out;
}

std::vector<std::pair<cplx, cplx>> torus_common_zeros(const BiPoly<cplx>& p, const Tolerances& tol) {
  std::vector<std::pair<cplx, cplx>> out;
  for (const auto& x : common_zeros(p, reflect(p), tol)) {
    if (std::abs(std::abs(x.first) - 1.0) < 1e-9 && std::abs(std::abs(x.second) - 1.0) < 1e-5)
      out.push_back(snap_torus(x));
  }
  return out;
}

int line_multiplicity(const BiPoly<cplx>& p, const BiPoly<cplx>& v, cplx z0, const Tolerances& tol) {
  BiPoly<cplx> q = p + v;
  UniPoly<cplx> r = sylvester_resultant(q, reflect(q));
  if (vanishes(r, resultant_scale(q))) throw DomainError("line_multiplicity: resultant vanishes identically");
  return taylor_order(r, z0, tol.taylor_rel);
}

int line_multiplicity(const BiPoly<GaussRat>& p, const BiPoly<GaussRat>& v, const GaussRat& z0) {
  BiPoly<GaussRat> q = p + v;
  UniPoly<GaussRat> r = sylvester_resultant(q, reflect(q));
  if (r.is_zero()) throw DomainError("line_multiplicity: resultant vanishes identically");
  return exact_root_order(r, z0);
}

int point_multiplicity(const BiPoly<cplx>& p, std::pair<cplx, cplx> zeta, const Tolerances& tol) {
  auto [a, b] = zeta;
  if (std::abs(std::abs(a) - 1.0) > tol.torus || std::abs(std::abs(b) - 1.0) > tol.torus)
    throw DomainError("point_multiplicity: point is not on the torus");
  double s = p.norm1();
  if (std::abs(eval(p, a, b)) > 1e-6 * s || std::abs(eval(reflect(p), a, b)) > 1e-6 * s) return 0;
  BiPoly<cplx> pr = rotate(p, a, b);
  int k = separating_shear(pr, tol);
  BiPoly<cplx> sh = shear(pr, k);
  UniPoly<cplx> r = sylvester_resultant(sh, reflect(sh));
  return taylor_order(r, cplx(1), tol.taylor_rel);
}

int point_multiplicity(const BiPoly<GaussRat>& p, std::pair<GaussRat, GaussRat> zeta, const Tolerances& tol) {
  if (norm2(zeta.first) != GaussRat(1) || norm2(zeta.second) != GaussRat(1))
    throw DomainError("point_multiplicity: point is not on the torus");
  if (!is_zero(eval(p, zeta.first, zeta.second)) || !is_zero(eval(reflect(p), zeta.first, zeta.second))) return 0;
  BiPoly<GaussRat> pr = rotate(p, zeta.first, zeta.second);
  int k = separating_shear(to_complex(pr), tol);
  BiPoly<GaussRat> sh = shear(pr, k);
  return exact_root_order(sylvester_resultant(sh, reflect(sh)), GaussRat(1));
}

SaturationCertificate is_saturated(const BiPoly<cplx>& p, const Tolerances& tol) {
  SaturationCertificate c;
  c.required = 2 * p.n1() * p.n2();
  ResultantData rd = resultant_inner(p, tol);
  if (rd.degenerate) {
    c.degenerate = true;
    return c;
  }
  c.circle_roots = rd.circle_roots;
  c.count = rd.total_circle_multiplicity;
  c.saturated = c.count == c.required;
  for (const auto& z : torus_common_zeros(p, tol)) c.per_point.push_back({z, point_multiplicity(p, z, tol)});
  return c;
}

SaturationCertificate is_saturated(const BiPoly<GaussRat>& p, const Tolerances& tol) {
  SaturationCertificate c;
  c.required = 2 * p.n1() * p.n2();
  ResultantData rd = resultant_inner(p, tol);
  if (rd.degenerate) {
    c.degenerate = true;
    return c;
  }
  c.circle_roots = rd.circle_roots;
  c.count = rd.total_circle_multiplicity;
  c.saturated = c.count == c.required;
  BiPoly<cplx> pc = to_complex(p);
  for (const auto& z : torus_common_zeros(pc, tol)) {
    GaussRat a, b;
    int mult = (exact_unit(z.first, a) && exact_unit(z.second, b)) ? point_multiplicity(p, {a, b}, tol)
                                                                    : point_multiplicity(pc, z, tol);
    c.per_point.push_back({z, mult});
  }
  return c;
}

}  // namespace bidisk
