#include "bidisk/agler.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "bidisk/errors.hpp"
#include "bidisk/intersect.hpp"
#include "bidisk/polycore.hpp"
#include "bidisk/roots.hpp"

namespace bidisk {

namespace {

using Mat = Eigen::MatrixXcd;

// Laurent coefficients f_d for d = lo .. lo + size - 1 divided by (z - z0).
std::vector<cplx> divide_linear(const std::vector<cplx>& a, cplx z0, double& rem) {
  const int K = static_cast<int>(a.size()) - 1;
  std::vector<cplx> q(K);
  cplx b = a[K];
  for (int k = K; k >= 1; --k) {
    if (k < K) b = a[k] + b * z0;
    q[k - 1] = b;
  }
  rem = std::max(rem, std::abs(a[0] + q[0] * z0));
  return q;
}

// Divides T (powers -n..n) by the factor of det T vanishing at the circle point z0.
MatTrigPoly deflate(const MatTrigPoly& T, cplx z0, Mat& W, double& rem) {
  const int n = -T.low, m = T.size;
  Eigen::SelfAdjointEigenSolver<Mat> es(T.eval(z0));
  Eigen::VectorXcd u = es.eigenvectors().col(0);
  Mat seed(m, m + 1);
  seed.col(0) = u;
  seed.rightCols(m) = Mat::Identity(m, m);
  W = Eigen::HouseholderQR<Mat>(seed).householderQ() * Mat::Identity(m, m);
  cplx ph = W.col(0).dot(u);
  W.col(0) *= ph / std::abs(ph);

  std::vector<Mat> S(2 * n + 1);
  for (int d = -n; d <= n; ++d) S[d + n] = W.adjoint() * T.coeff(d) * W;
  MatTrigPoly out(m, -n, 2 * n + 1);
  auto place = [&](int r, int c, const std::vector<cplx>& q, int lo) {
    for (size_t k = 0; k < q.size(); ++k) {
      int d = lo + static_cast<int>(k);
      if (d < -n || d > n) {
        rem = std::max(rem, std::abs(q[k]));
        continue;
      }
      out.coeffs[d + n](r, c) = q[k];
    }
  };
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < m; ++c) {
      std::vector<cplx> f(2 * n + 1);
      for (int d = -n; d <= n; ++d) f[d + n] = S[d + n](r, c);
      if (r == 0 && c == 0) {
        auto q = divide_linear(divide_linear(f, z0, rem), z0, rem);
        for (auto& x : q) x *= -z0;
        place(r, c, q, -n + 1);
      } else if (r == 0) {
        auto q = divide_linear(f, z0, rem);
        for (auto& x : q) x *= -z0;
        place(r, c, q, -n + 1);
      } else if (c == 0) {
        place(r, c, divide_linear(f, z0, rem), -n);
      } else {
        place(r, c, f, -n);
      }
    }
  MatTrigPoly sym = out;
  for (int d = -n; d <= n; ++d) sym.coeffs[d + n] = (out.coeff(d) + out.coeff(-d).adjoint()) * 0.5;
  return sym;
}

// Block-banded Cholesky of the Toeplitz operator with blocks M_ij = T_{j-i};
// the last block row of the factor converges to the outer factor.
std::vector<Mat> bauer(const MatTrigPoly& T, const Tolerances& tol, int& rows) {
  const int n = -T.low, m = T.size;
  const double scale = std::max(T.scale(), 1e-300);
  std::vector<std::vector<Mat>> C;  // C[i][k] = block (i, i - n + k) for the rows kept
  std::vector<Mat> prev;
  int stable = 0;
  for (int i = 0; i < tol.bauer_max_iter; ++i) {
    std::vector<Mat> row(n + 1, Mat::Zero(m, m));
    for (int j = std::max(0, i - n); j <= i; ++j) {
      Mat S = T.coeff(j - i);
      for (int k = std::max(0, i - n); k < j; ++k) {
        const Mat& Cik = row[k - (i - n)];
        const Mat& Cjk = j == i ? row[k - (i - n)] : C[C.size() - (i - j)][k - (j - n)];
        S -= Cik * Cjk.adjoint();
      }
      if (j < i) {
        const Mat& Cjj = C[C.size() - (i - j)][n];
        row[j - (i - n)] = Cjj.triangularView<Eigen::Lower>().solve(S.adjoint()).adjoint();
      } else {
        Eigen::LLT<Mat> llt((S + S.adjoint()) * 0.5);
        if (llt.info() != Eigen::Success) throw NumericError("fejer_riesz: Toeplitz operator is not positive definite");
        row[n] = llt.matrixL();
      }
    }
    C.push_back(std::move(row));
    if (static_cast<int>(C.size()) > n + 1) C.erase(C.begin());
    rows = i + 1;
    if (i < n) continue;
    std::vector<Mat> E(n + 1);
    for (int k = 0; k <= n; ++k) E[k] = C.back()[n - k].adjoint();
    if (!prev.empty()) {
      double diff = 0;
      for (int k = 0; k <= n; ++k) diff = std::max(diff, (E[k] - prev[k]).norm());
      stable = diff <= tol.bauer_tol * scale ? stable + 1 : 0;
      if (stable >= 3) return E;
    }
    prev = std::move(E);
  }
  return prev;
}

// z^(m n) det T(z) as an ordinary polynomial of degree 2mn.
UniPoly<cplx> det_polynomial(const MatTrigPoly& T) {
  const int n = -T.low, m = T.size, N = 2 * m * n + 1;
  std::vector<cplx> vals(N), c(N);
  for (int k = 0; k < N; ++k) {
    cplx z = std::polar(1.0, 2 * std::numbers::pi * k / N);
    vals[k] = T.eval(z).determinant() * std::pow(z, m * n);
  }
  for (int j = 0; j < N; ++j) {
    cplx s(0);
    for (int k = 0; k < N; ++k) s += vals[k] * std::polar(1.0, -2 * std::numbers::pi * double(j) * k / N);
    c[j] = s / double(N);
  }
  return UniPoly<cplx>(std::move(c));
}

int det_roots_inside(const MatTrigPoly& E) {
  const int m = E.size, n = static_cast<int>(E.coeffs.size()) - 1, N = m * n + 1;
  if (n == 0) return 0;
  std::vector<cplx> vals(N), c(N);
  for (int k = 0; k < N; ++k) vals[k] = E.eval(std::polar(1.0, 2 * std::numbers::pi * k / N)).determinant();
  for (int j = 0; j < N; ++j) {
    cplx s(0);
    for (int k = 0; k < N; ++k) s += vals[k] * std::polar(1.0, -2 * std::numbers::pi * double(j) * k / N);
    c[j] = s / double(N);
  }
  int inside = 0;
  for (cplx r : poly_roots(UniPoly<cplx>(std::move(c)), 1e-12))
    if (std::abs(r) < 1 - 1e-6) ++inside;
  return inside;
}

}  // namespace

FejerRiesz fejer_riesz(const MatTrigPoly& T, const Tolerances& tol, std::optional<std::vector<cplx>> circle_zeros) {
  if (T.low != -T.high()) throw InputError("fejer_riesz: powers must be symmetric about 0");
  const double scale = std::max(T.scale(), 1e-300);
  if (T.hermitian_defect() > 1e-10 * scale) throw InputError("fejer_riesz: T is not Hermitian on the circle");
  const int n = -T.low, m = T.size;
  FejerRiesz fr;
  std::vector<cplx> zeros;
  if (circle_zeros) {
    zeros = *circle_zeros;
  } else if (n > 0) {
    UniPoly<cplx> d = det_polynomial(T);
    if (d.norm1() <= tol.coeff_zero * std::pow(scale, m)) throw InputError("fejer_riesz: det T vanishes identically");
    for (const auto& r : circle_roots(d, tol))
      for (int k = 0; k < r.multiplicity / 2; ++k) zeros.push_back(r.point);
  }

  MatTrigPoly cur = T;
  std::vector<Mat> Ws;
  double rem = 0;
  for (cplx z0 : zeros) {
    Mat W;
    cur = deflate(cur, z0, W, rem);
    Ws.push_back(W);
  }
  std::vector<Mat> E = bauer(cur, tol, fr.bauer_rows);
  for (int k = static_cast<int>(zeros.size()) - 1; k >= 0; --k) {
    const cplx z0 = zeros[k];
    std::vector<Mat> next(E.size() + 1, Mat::Zero(m, m));
    for (size_t j = 0; j < E.size(); ++j) {
      Mat a = E[j];
      a.col(0) *= -z0;
      next[j] += a;
      next[j + 1].col(0) += E[j].col(0);
    }
    for (auto& x : next) x = (x * Ws[k].adjoint()).eval();
    E = std::move(next);
  }
  fr.E = MatTrigPoly(m, 0, n + 1);
  for (int k = 0; k <= n && k < static_cast<int>(E.size()); ++k) fr.E.coeffs[k] = E[k];
  fr.deflated = zeros;

  double res = 0;
  for (int k = 0; k < 512; ++k) {
    cplx z = std::polar(1.0, 2 * std::numbers::pi * (k + 0.5) / 512);
    Mat e = fr.E.eval(z);
    res = std::max(res, (e.adjoint() * e - T.eval(z)).cwiseAbs().maxCoeff());
  }
  fr.residual = res / scale;
  fr.roots_inside = det_roots_inside(fr.E);
  if (fr.residual > tol.fr_residual)
    throw NumericError("fejer_riesz: residual " + std::to_string(fr.residual) + " after " +
                       std::to_string(fr.bauer_rows) + " Toeplitz rows, " + std::to_string(zeros.size()) +
                       " deflations, division remainder " + std::to_string(rem / scale));
  return fr;
}

HermitianGram hermitian_square(const std::vector<BiPoly<cplx>>& v, Bidegree n) {
  HermitianGram h{n, Mat::Zero((n.n1 + 1) * (n.n2 + 1), (n.n1 + 1) * (n.n2 + 1))};
  for (const auto& a : v) {
    Eigen::VectorXcd x = Eigen::VectorXcd::Zero(h.G.rows());
    for (int i = 0; i <= std::min(a.n1(), n.n1); ++i)
      for (int j = 0; j <= std::min(a.n2(), n.n2); ++j) x(h.index(i, j)) = a.at(i, j);
    h.G += x * x.adjoint();
  }
  return h;
}

double pair_norm(const std::vector<BiPoly<cplx>>& A, cplx z, cplx w) {
  double s = 0;
  for (const auto& a : A) s += std::norm(eval(a, z, w));
  return std::sqrt(s);
}

double sos_residual(const BiPoly<cplx>& p, const AglerPair& pair, int grid) {
  const BiPoly<cplx> pt = reflect(p);
  auto radius = [&](int k) { return k % 2 == 0 ? 1.0 : std::sqrt((k + 1.0) / (grid + 1.0)); };
  double res = 0;
  for (int a = 0; a < grid; ++a)
    for (int b = 0; b < grid; ++b) {
      cplx z = std::polar(radius(a), 2 * std::numbers::pi * a / grid);
      cplx w = std::polar(radius(b), 2 * std::numbers::pi * (b + 0.25) / grid);
      double lhs = std::norm(eval(p, z, w)) - std::norm(eval(pt, z, w));
      double a1 = pair_norm(pair.A1, z, w), a2 = pair_norm(pair.A2, z, w);
      double rhs = (1 - std::norm(z)) * a1 * a1 + (1 - std::norm(w)) * a2 * a2;
      res = std::max(res, std::abs(lhs - rhs));
    }
  return res;
}

bool pair_is_symmetric(const AglerPair& pair, Bidegree n, double tol) {
  auto check = [&](const std::vector<BiPoly<cplx>>& A, Bidegree d) {
    for (const auto& a : A)
      if (max_abs_diff(a, reflect(a, d)) > tol * std::max(1.0, a.norm1())) return false;
    return true;
  };
  return check(pair.A1, {n.n1 - 1, n.n2}) && check(pair.A2, {n.n1, n.n2 - 1});
}

AglerPair agler_pair(const BiPoly<cplx>& p, const Tolerances& tol, Sweep orientation) {
  if (orientation == Sweep::W) {
    AglerPair s = agler_pair(swap_vars(p), tol, Sweep::Z);
    AglerPair out;
    for (const auto& a : s.A2) out.A1.push_back(swap_vars(a));
    for (const auto& a : s.A1) out.A2.push_back(swap_vars(a));
    out.residual = s.residual;
    out.symmetric = pair_is_symmetric(out, p.bidegree());
    return out;
  }
  const int n1 = p.n1(), n2 = p.n2();
  const Bidegree n = p.bidegree();
  AglerPair pair;
  if (n2 > 0) {
    ResultantData rd = resultant_inner(p, tol);
    if (rd.degenerate) throw DomainError("agler_pair: p shares a factor with its reflection");
    std::vector<cplx> zeros;
    for (const auto& r : rd.circle_roots)
      for (int k = 0; k < r.multiplicity / 2; ++k) zeros.push_back(r.point);
    FejerRiesz fr = fejer_riesz(schur_cohn_form(p, Sweep::Z), tol, zeros);
    for (int r = 0; r < n2; ++r) {
      BiPoly<cplx> a(Bidegree{n1, n2 - 1});
      for (int k = 0; k <= n1; ++k)
        for (int s = 0; s < n2; ++s) a.at(k, s) = fr.E.coeffs[k](r, s);
      pair.A2.push_back(a);
    }
  }

  HermitianGram R = hermitian_square({p}, n);
  R.G -= hermitian_square({reflect(p)}, n).G;
  HermitianGram HA = hermitian_square(pair.A2, n);
  R.G -= HA.G;
  for (int i = 0; i <= n1; ++i)
    for (int j = 0; j < n2; ++j)
      for (int k = 0; k <= n1; ++k)
        for (int l = 0; l < n2; ++l) R.G(R.index(i, j + 1), R.index(k, l + 1)) += HA.G(HA.index(i, j), HA.index(k, l));

  // Telescoping division by (1 - |z|^2).
  HermitianGram G{n, Mat::Zero(R.G.rows(), R.G.cols())};
  for (int i = 0; i <= n1; ++i)
    for (int k = 0; k <= n1; ++k)
      for (int j = 0; j <= n2; ++j)
        for (int l = 0; l <= n2; ++l) {
          cplx v = R.G(R.index(i, j), R.index(k, l));
          if (i > 0 && k > 0) v += G.G(G.index(i - 1, j), G.index(k - 1, l));
          G.G(G.index(i, j), G.index(k, l)) = v;
        }
  const double pscale = p.norm1() * p.norm1();
  double spill = 0;
  for (int j = 0; j <= n2; ++j)
    for (int r = 0; r < G.G.rows(); ++r) {
      spill = std::max(spill, std::abs(G.G(G.index(n1, j), r)));
      spill = std::max(spill, std::abs(G.G(r, G.index(n1, j))));
    }
  if (spill > 1e-7 * pscale) throw NumericError("agler_pair: quotient by (1 - |z|^2) is inconsistent");

  const int N = n1 * (n2 + 1);
  if (N > 0) {
    Mat G1 = G.G.topLeftCorner(N, N);
    G1 = (G1 + G1.adjoint()).eval() * 0.5;
    double trace = G1.trace().real();
    double lmin = Eigen::SelfAdjointEigenSolver<Mat>(G1, Eigen::EigenvaluesOnly).eigenvalues()(0);
    if (lmin < -1e-8 * std::max(trace, pscale)) throw NumericError("agler_pair: quotient Gram matrix is indefinite");
    Mat work = G1;
    for (int it = 0; it < N; ++it) {
      int piv = 0;
      double best = -1;
      for (int r = 0; r < N; ++r)
        if (work(r, r).real() > best) {
          best = work(r, r).real();
          piv = r;
        }
      if (best <= tol.gram_pivot_rel * trace) break;
      Eigen::VectorXcd col = work.col(piv) / std::sqrt(best);
      work -= col * col.adjoint();
      BiPoly<cplx> a(Bidegree{n1 - 1, n2});
      for (int i = 0; i < n1; ++i)
        for (int j = 0; j <= n2; ++j) a.at(i, j) = col(i * (n2 + 1) + j);
      pair.A1.push_back(a);
    }
  }
  pair.residual = sos_residual(p, pair, 32);
  pair.symmetric = pair_is_symmetric(pair, n);
  return pair;
}

namespace {

// A = rows of coefficient vectors; returns V with V^t V = J where J A = A~, or nothing.
std::optional<std::vector<BiPoly<cplx>>> symmetrize_block(const std::vector<BiPoly<cplx>>& A, Bidegree d) {
  const int N = static_cast<int>(A.size());
  if (N == 0) return A;
  const int M = static_cast<int>(A[0].coeffs().size());
  Mat X(N, M), Xt(N, M);
  for (int r = 0; r < N; ++r) {
    BiPoly<cplx> rr = reflect(A[r], d);
    for (int c = 0; c < M; ++c) {
      X(r, c) = A[r].coeffs()[c];
      Xt(r, c) = rr.coeffs()[c];
    }
  }
  Mat J = X.transpose().completeOrthogonalDecomposition().solve(Xt.transpose()).transpose();
  const double sc = std::max(X.norm(), 1e-300);
  if ((J * X - Xt).norm() > 1e-8 * sc) return std::nullopt;
  if ((J.adjoint() * J - Mat::Identity(N, N)).norm() > 1e-7) return std::nullopt;
  J = (J + J.transpose()).eval() * 0.5;
  for (double gamma : {0.6180339887, 1.4142135623, 0.3183098861}) {
    Eigen::MatrixXd K = J.real() + gamma * J.imag();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
    Eigen::MatrixXd Q = es.eigenvectors();
    Mat Dg = Q.transpose().cast<cplx>() * J * Q.cast<cplx>();
    Mat off = Dg;
    off.diagonal().setZero();
    if (off.norm() > 1e-8) continue;
    Mat V = Q.transpose().cast<cplx>();
    for (int k = 0; k < N; ++k) V.row(k) *= std::polar(1.0, std::arg(Dg(k, k)) / 2);
    Mat E = V * X;
    std::vector<BiPoly<cplx>> out;
    for (int r = 0; r < N; ++r) {
      std::vector<cplx> c(M);
      for (int k = 0; k < M; ++k) c[k] = E(r, k);
      out.emplace_back(d, std::move(c));
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::optional<AglerPair> symmetrize(const AglerPair& pair, const BiPoly<cplx>& p, const Tolerances& tol) {
  (void)tol;
  const Bidegree n = p.bidegree();
  auto a1 = symmetrize_block(pair.A1, {n.n1 - 1, n.n2});
  auto a2 = symmetrize_block(pair.A2, {n.n1, n.n2 - 1});
  if (!a1 || !a2) return std::nullopt;
  AglerPair out{*a1, *a2, 0, false};
  out.residual = sos_residual(p, out, 32);
  out.symmetric = pair_is_symmetric(out, n);
  if (!out.symmetric) return std::nullopt;
  return out;
}

L2Report l2_report(const BiPoly<cplx>& q, const BiPoly<cplx>& p, const Tolerances& tol) {
  L2Report rep;
  const AglerPair pair = agler_pair(p, tol);
  auto ratio = [&](cplx z, cplx w) {
    double den = pair_norm(pair.A1, z, w) + pair_norm(pair.A2, z, w);
    double num = std::abs(eval(q, z, w));
    if (den == 0) return num == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    return num / den;
  };
  const int g = 64;
  for (int a = 0; a < g; ++a)
    for (int b = 0; b < g; ++b)
      rep.base_sup = std::max(rep.base_sup, ratio(std::polar(1.0, 2 * std::numbers::pi * (a + 0.5) / g),
                                                  std::polar(1.0, 2 * std::numbers::pi * (b + 0.5) / g)));
  const auto zeros = torus_common_zeros(p, tol);
  if (zeros.empty()) {
    rep.member = std::isfinite(rep.base_sup) ? Tri::True : Tri::Unknown;
    return rep;
  }
  double delta = tol.l2_delta0;
  for (int lvl = 0; lvl < tol.l2_levels; ++lvl, delta *= tol.l2_ratio) {
    double sup = 0;
    for (const auto& [z0, w0] : zeros)
      for (int k = 0; k < 32; ++k) {
        double phi = 2 * std::numbers::pi * (k + 0.5) / 32;
        sup = std::max(sup, ratio(z0 * std::polar(1.0, delta * std::cos(phi)), w0 * std::polar(1.0, delta * std::sin(phi))));
      }
    rep.level_sup.push_back(sup);
  }
  const auto& s = rep.level_sup;
  const int L = static_cast<int>(s.size());
  auto growth = [&](int k) { return s[k] > 0 ? s[k + 1] / s[k] : (s[k + 1] > 0 ? INFINITY : 1.0); };
  bool diverging = L >= 4;
  for (int k = L - 4; k >= 0 && k < L - 1; ++k) diverging = diverging && growth(k) > tol.l2_growth;
  bool settled = L >= 3;
  for (int k = L - 3; k >= 0 && k < L - 1; ++k) settled = settled && growth(k) <= 1 + (tol.l2_growth - 1) / 5;
  if (!std::isfinite(rep.base_sup) || diverging)
    rep.member = Tri::False;
  else if (settled)
    rep.member = Tri::True;
  return rep;
}

Tri l2_membership(const BiPoly<cplx>& q, const BiPoly<cplx>& p, const Tolerances& tol) {
  return l2_report(q, p, tol).member;
}

int kp_dimension(const BiPoly<cplx>& p, const Tolerances& tol) {
  SaturationCertificate c = is_saturated(p, tol);
  if (c.degenerate) throw DomainError("kp_dimension: p shares a factor with its reflection");
  return p.n1() * p.n2() - c.count / 2;
}

int kp_dimension(const BiPoly<GaussRat>& p, const Tolerances& tol) {
  SaturationCertificate c = is_saturated(p, tol);
  if (c.degenerate) throw DomainError("kp_dimension: p shares a factor with its reflection");
  return p.n1() * p.n2() - c.count / 2;
}

BiPoly<cplx> build_symmetric_v(const BiPoly<cplx>& f0, Bidegree n) {
  if (f0.is_zero()) throw InputError("build_symmetric_v: f = 0");
  if (n.n1 < 1 || n.n2 < 1) throw DegreeError("build_symmetric_v: bidegree must be at least (1,1)");
  const Bidegree fd{n.n1 - 1, n.n2 - 1};
  Bidegree s = f0.support();
  if (s.n1 > fd.n1 || s.n2 > fd.n2) throw DegreeError("build_symmetric_v: f exceeds bidegree (n1-1, n2-1)");
  int shift = 0;
  for (;; ++shift) {
    bool zero_row = true;
    for (int j = 0; j <= f0.n2(); ++j) zero_row = zero_row && is_zero(f0.coeff(shift, j));
    if (!zero_row) break;
  }
  BiPoly<cplx> f(fd);
  for (int i = shift; i <= s.n1; ++i)
    for (int j = 0; j <= s.n2; ++j) f.at(i - shift, j) = f0.coeff(i, j);
  BiPoly<cplx> ft = reflect(f, fd);
  BiPoly<cplx> v(n);
  for (int i = 0; i <= fd.n1; ++i)
    for (int j = 0; j <= fd.n2; ++j) {
      v.at(i, j + 1) += f.at(i, j);
      v.at(i + 1, j) += ft.at(i, j);
    }
  return v;
}

}  // namespace bidisk
