#include "bidisk/stability.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "bidisk/errors.hpp"
#include "bidisk/intersect.hpp"
#include "bidisk/polycore.hpp"
#include "bidisk/roots.hpp"

namespace bidisk {

Eigen::MatrixXcd MatTrigPoly::coeff(int power) const {
  if (power < low || power > high()) return Eigen::MatrixXcd::Zero(size, size);
  return coeffs[power - low];
}

Eigen::MatrixXcd MatTrigPoly::eval(cplx z) const {
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(size, size);
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) acc = acc * z + coeffs[k];
  return acc * std::pow(z, low);
}

double MatTrigPoly::hermitian_defect() const {
  double d = 0;
  for (int k = low; k <= high(); ++k) d = std::max(d, (coeff(k) - coeff(-k).adjoint()).norm());
  return d;
}

double MatTrigPoly::scale() const {
  double s = 0;
  for (const auto& c : coeffs) s += c.norm();
  return s;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::StableClosed: return "STABLE_CLOSED";
    case Verdict::ScatteringStable: return "SCATTERING_STABLE";
    case Verdict::Unstable: return "UNSTABLE";
    case Verdict::Degenerate: return "DEGENERATE";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

BiPoly<cplx> oriented(const BiPoly<cplx>& p, Sweep s) { return s == Sweep::Z ? p : swap_vars(p); }

PQ pq_matrices(const BiPoly<cplx>& p0, Sweep s) {
  BiPoly<cplx> p = oriented(p0, s);
  const int n = p.n1(), m = p.n2();
  PQ out;
  if (m == 0) {
    // No fibre variable: the scalar form |p_0|^2.
    out.P = MatTrigPoly(1, 0, n + 1);
    out.Q = MatTrigPoly(1, 0, n + 1);
    for (int i = 0; i <= n; ++i) out.P.coeffs[i](0, 0) = p.at(i, 0);
    return out;
  }
  out.P = MatTrigPoly(m, 0, n + 1);
  out.Q = MatTrigPoly(m, 0, n + 1);
  for (int r = 0; r < m; ++r)
    for (int c = r; c < m; ++c) {
      UniPoly<cplx> pj = p.w_coeff(c - r);
      UniPoly<cplx> qj = reflect(p.w_coeff(m - (c - r)), n);
      for (int i = 0; i <= n; ++i) {
        out.P.coeffs[i](r, c) = pj.coeff(i);
        out.Q.coeffs[i](r, c) = qj.coeff(i);
      }
    }
  return out;
}

MatTrigPoly schur_cohn_form(const BiPoly<cplx>& p, Sweep s) {
  PQ pq = pq_matrices(p, s);
  const int n = static_cast<int>(pq.P.coeffs.size()) - 1;
  MatTrigPoly T(pq.P.size, -n, 2 * n + 1);
  for (int d = -n; d <= n; ++d) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(T.size, T.size);
    for (int l = 0; l <= n; ++l) {
      if (l + d < 0 || l + d > n) continue;
      acc += pq.P.coeffs[l].adjoint() * pq.P.coeffs[l + d] - pq.Q.coeffs[l].adjoint() * pq.Q.coeffs[l + d];
    }
    T.coeffs[d + n] = acc;
  }
  return T;
}

UnivariateSC univariate_schur_cohn_report(const UniPoly<cplx>& q0, const Tolerances& tol) {
  if (q0.is_zero()) throw DomainError("univariate_schur_cohn: zero polynomial");
  UniPoly<cplx> q = q0.trimmed(tol.coeff_zero);
  const int d = q.degree();
  UnivariateSC out;
  if (d == 0) {
    out.zero_free = true;
    out.margin = 1;
    return out;
  }
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(d, d), Q = Eigen::MatrixXcd::Zero(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = r; c < d; ++c) {
      P(r, c) = q.coeff(c - r);
      Q(r, c) = std::conj(q.coeff(d - (c - r)));
    }
  Eigen::MatrixXcd M = P.adjoint() * P - Q.adjoint() * Q;
  M = (M + M.adjoint()) * 0.5;
  double lmin = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(M, Eigen::EigenvaluesOnly).eigenvalues()(0);
  double scale = q.norm1() * q.norm1();
  out.margin = lmin / scale;
  out.zero_free = out.margin > tol.strict_margin_rel;
  out.conclusive = std::abs(out.margin) > tol.strict_margin_rel;
  return out;
}

bool univariate_schur_cohn(const UniPoly<cplx>& q, const Tolerances& tol) {
  return univariate_schur_cohn_report(q, tol).zero_free;
}

namespace {

double min_eig(const MatTrigPoly& T, double theta) {
  Eigen::MatrixXcd A = T.eval(std::polar(1.0, theta));
  if (T.size == 1) return A(0, 0).real();
  A = (A + A.adjoint()) * 0.5;
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(A, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

// Smallest eigenvalue of T(theta) + h T'(theta), derivative taken in theta.
double tangent_min_eig(const MatTrigPoly& T, double theta, double h) {
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(T.size, T.size);
  for (int k = T.low; k <= T.high(); ++k) A += T.coeff(k) * (std::polar(1.0, k * theta) * cplx(1.0, h * k));
  if (T.size == 1) return A(0, 0).real();
  A = (A + A.adjoint()) * 0.5;
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(A, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

struct Cell {
  double a, b, fa, fb;
};

// Golden-section refinement of the minimum on [a, b].
std::pair<double, double> local_min(const std::function<double(double)>& f, double a, double b) {
  const int samples = 33;
  double best_t = a, best_f = std::numeric_limits<double>::infinity();
  double h = (b - a) / (samples - 1);
  for (int k = 0; k < samples; ++k) {
    double t = a + k * h;
    double v = f(t);
    if (v < best_f) {
      best_f = v;
      best_t = t;
    }
  }
  double lo = best_t - h, hi = best_t + h;
  const double g = (std::sqrt(5.0) - 1) / 2;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = f(x2);
    }
  }
  if (f1 < best_f) {
    best_f = f1;
    best_t = x1;
  }
  if (f2 < best_f) {
    best_f = f2;
    best_t = x2;
  }
  return {best_t, best_f};
}

}  // namespace

SweepResult certified_psd_sweep(const MatTrigPoly& T, SweepMode mode, const Tolerances& tol) {
  SweepResult res;
  const double two_pi = 2 * std::numbers::pi;
  double scale = std::max(T.scale(), std::numeric_limits<double>::min());
  double lip = 0;
  double curv = 0;
  for (int k = T.low; k <= T.high(); ++k) {
    lip += std::abs(k) * T.coeff(k).norm();
    curv += double(k) * k * T.coeff(k).norm();
  }
  const double neg = tol.psd_rel * scale;
  const double zero_th = tol.zero_detect_rel * scale;
  res.scale = scale;

  long evals = 0;
  double global_min = std::numeric_limits<double>::infinity();
  bool violated = false, exhausted = false;
  auto f = [&](double t) {
    ++evals;
    double v = min_eig(T, t);
    global_min = std::min(global_min, v);
    if (v < -neg) violated = true;
    return v;
  };

  const int maxpow = std::max(std::abs(T.low), std::abs(T.high()));
  const int n0 = std::max(tol.sweep_min_density, 16 * (maxpow + 1));
  std::vector<double> grid(n0 + 1);
  for (int k = 0; k < n0; ++k) {
    grid[k] = f(two_pi * k / n0);
    if (violated) break;
  }
  std::vector<Cell> open;
  if (!violated) {
    grid[n0] = grid[0];
    std::vector<Cell> stack;
    for (int k = n0 - 1; k >= 0; --k) stack.push_back({two_pi * k / n0, two_pi * (k + 1) / n0, grid[k], grid[k + 1]});
    while (!stack.empty() && !violated) {
      Cell c = stack.back();
      stack.pop_back();
      double h = c.b - c.a;
      if ((c.fa + c.fb) / 2 - lip * h / 2 > 0) continue;
      // Second-order bound: lambda_min(A + sB) is concave in s.
      if (std::min(c.fa, c.fb) - curv * h * h / 2 > 0) {
        ++evals;
        if (tangent_min_eig(T, c.a, h) - curv * h * h / 2 > 0) continue;
      }
      if (h <= tol.sweep_min_cell) {
        open.push_back(c);
        continue;
      }
      if (evals >= tol.sweep_max_evals) {
        exhausted = true;
        open.push_back(c);
        continue;
      }
      double m = (c.a + c.b) / 2;
      double fm = f(m);
      stack.push_back({m, c.b, fm, c.fb});
      stack.push_back({c.a, m, c.fa, fm});
    }
  }

  if (!violated && !open.empty()) {
    // Merge contiguous uncertified cells (with wrap-around) and refine each group.
    std::sort(open.begin(), open.end(), [](const Cell& x, const Cell& y) { return x.a < y.a; });
    std::vector<std::pair<double, double>> groups;
    for (const auto& c : open) {
      if (!groups.empty() && c.a <= groups.back().second + 1e-15)
        groups.back().second = std::max(groups.back().second, c.b);
      else
        groups.emplace_back(c.a, c.b);
    }
    if (groups.size() > 1 && groups.front().first <= 1e-15 && groups.back().second >= two_pi - 1e-15) {
      groups.front().first = groups.back().first - two_pi;
      groups.pop_back();
    }
    for (const auto& [a, b] : groups) {
      double w = (b - a) + tol.sweep_min_cell;
      auto [t, v] = local_min(f, a - w, b + w);
      if (violated) break;
      if (v < zero_th) {
        cplx z = std::polar(1.0, t);
        bool dup = false;
        for (auto zc : res.zero_candidates)
          if (std::abs(zc - z) < 1e-6) dup = true;
        if (!dup) res.zero_candidates.push_back(z);
      }
    }
  }

  res.evaluations = evals;
  res.margin = global_min;
  if (violated) {
    res.passed = false;
    res.certified = true;
  } else if (mode == SweepMode::Strict) {
    res.passed = open.empty() && !exhausted && global_min > 0;
    res.certified = res.passed;
  } else {
    res.passed = true;
    res.certified = open.empty() && !exhausted;
  }
  return res;
}

namespace {

// Vertical (or horizontal) line of zeros: every coefficient p_j vanishes at z0.
bool has_line(const BiPoly<cplx>& q, cplx z0) {
  double m = 0;
  for (int j = 0; j <= q.n2(); ++j) m = std::max(m, std::abs(q.w_coeff(j)(z0)));
  return m <= 1e-8 * q.norm1();
}

// Open-disk zero freeness of x -> q(x, w0) at a seeded random interior w0.
bool fibre_fallback(const BiPoly<cplx>& q, const Tolerances& tol) {
  std::mt19937_64 rng(tol.seed);
  std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
  cplx w0 = std::polar(0.5, ang(rng));
  std::vector<cplx> c(q.n1() + 1);
  for (int i = 0; i <= q.n1(); ++i) c[i] = q.z_coeff(i)(w0);
  UniPoly<cplx> f(std::move(c));
  if (f.trimmed(tol.coeff_zero).is_zero()) return false;
  for (cplx r : poly_roots(f, tol.coeff_zero))
    if (std::abs(r) < 1 - 1e-9) return false;
  return true;
}

}  // namespace

StabilityReport stable_closed(const BiPoly<cplx>& p, const Tolerances& tol) {
  if (p.is_zero()) throw DomainError("stable_closed: zero polynomial");
  StabilityReport rep;
  UnivariateSC sc = univariate_schur_cohn_report(p.w_coeff(0), tol);
  SweepResult sw = certified_psd_sweep(schur_cohn_form(p, Sweep::Z), SweepMode::Strict, tol);
  rep.min_eig_margin = sw.margin;
  rep.sweep_density = sw.evaluations;
  rep.certified = sw.certified && sc.conclusive;
  if (sc.zero_free && sw.passed) {
    rep.verdict = Verdict::StableClosed;
  } else if (!sc.conclusive && sw.passed) {
    rep.verdict = Verdict::Unknown;
    rep.detail = "slice p(., 0) is within tolerance of the unit circle";
  } else {
    rep.verdict = Verdict::Unstable;
    rep.detail = sc.zero_free ? "Schur-Cohn form is not positive definite on the circle"
                              : "p(., 0) has zeros in the closed disk";
  }
  return rep;
}

StabilityReport scattering_stable(const BiPoly<cplx>& p, const Tolerances& tol, bool locate_zeros) {
  if (p.is_zero()) throw DomainError("scattering_stable: zero polynomial");
  StabilityReport rep;
  rep.certified = true;
  rep.min_eig_margin = std::numeric_limits<double>::infinity();

  for (Sweep s : {Sweep::Z, Sweep::W}) {
    BiPoly<cplx> q = oriented(p, s);
    SweepResult sw = certified_psd_sweep(schur_cohn_form(q, Sweep::Z), SweepMode::Semidefinite, tol);
    rep.sweep_density += sw.evaluations;
    rep.certified = rep.certified && sw.certified;
    rep.min_eig_margin = std::min(rep.min_eig_margin, sw.margin / sw.scale);
    if (!sw.passed) {
      rep.verdict = Verdict::Unstable;
      rep.detail = std::string("Schur-Cohn form is not positive semidefinite (sweep in ") +
                   (s == Sweep::Z ? "z" : "w") + ")";
      return rep;
    }
  }

  for (Sweep s : {Sweep::W, Sweep::Z}) {
    // s = W tests x -> p(x, 0); s = Z tests the swapped slice p(0, x).
    BiPoly<cplx> q = oriented(p, s == Sweep::W ? Sweep::Z : Sweep::W);
    UniPoly<cplx> slice0 = q.w_coeff(0);
    bool ok;
    if (slice0.trimmed(tol.coeff_zero).is_zero()) {
      rep.verdict = Verdict::Unstable;
      rep.detail = "p vanishes at the origin";
      return rep;
    }
    UnivariateSC sc = univariate_schur_cohn_report(slice0, tol);
    ok = sc.conclusive ? sc.zero_free : fibre_fallback(q, tol);
    if (!sc.conclusive) rep.certified = false;
    if (!ok) {
      rep.verdict = Verdict::Unstable;
      rep.detail = "a coordinate slice through the origin has zeros in the disk";
      return rep;
    }
  }

  for (Sweep s : {Sweep::Z, Sweep::W}) {
    BiPoly<cplx> q = oriented(p, s);
    ResultantData rd = resultant_inner(q, tol);
    if (rd.degenerate) {
      rep.verdict = Verdict::Degenerate;
      rep.detail = "resultant of p and its reflection vanishes identically";
      return rep;
    }
    for (const auto& cr : rd.circle_roots)
      if (has_line(q, cr.point)) {
        rep.verdict = Verdict::Degenerate;
        rep.detail = "p vanishes on a line through the torus";
        return rep;
      }
  }

  rep.verdict = Verdict::ScatteringStable;
  if (locate_zeros)
    for (const auto& z : torus_common_zeros(p, tol)) rep.boundary_zero_candidates.push_back(z);
  return rep;
}

}  // namespace bidisk
