#include "bidisk/realization.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "bidisk/errors.hpp"
#include "bidisk/polycore.hpp"

namespace bidisk {

namespace {

using Mat = Eigen::MatrixXcd;

Eigen::VectorXcd stack(const BiPoly<cplx>& head, const std::vector<BiPoly<cplx>>& A1,
                       const std::vector<BiPoly<cplx>>& A2, cplx z, cplx w, cplx s1, cplx s2) {
  Eigen::VectorXcd x(1 + A1.size() + A2.size());
  x(0) = eval(head, z, w);
  for (size_t k = 0; k < A1.size(); ++k) x(1 + k) = s1 * eval(A1[k], z, w);
  for (size_t k = 0; k < A2.size(); ++k) x(1 + A1.size() + k) = s2 * eval(A2[k], z, w);
  return x;
}

Mat nearest_unitary(const Mat& U) {
  Eigen::JacobiSVD<Mat> svd(U, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

Mat resolvent_matrix(const Mat& D, int N1, cplx z, cplx w) {
  const int n = static_cast<int>(D.rows());
  Mat M = Mat::Identity(n, n);
  for (int c = 0; c < n; ++c) M.col(c) -= D.col(c) * (c < N1 ? z : w);
  return M;
}

std::vector<std::pair<cplx, cplx>> closed_bidisk_samples() {
  std::vector<std::pair<cplx, cplx>> pts;
  for (double r1 : {0.0, 0.5, 0.9, 1.0})
    for (double r2 : {0.0, 0.5, 0.9, 1.0})
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
          pts.emplace_back(std::polar(r1, 2 * std::numbers::pi * (a + 0.1) / 5),
                           std::polar(r2, 2 * std::numbers::pi * (b + 0.35) / 5));
  return pts;
}

}  // namespace

Realization lurking_isometry(const BiPoly<cplx>& p, const AglerPair& pair, const Tolerances& tol) {
  if (p.is_zero()) throw InputError("lurking_isometry: p = 0");
  Realization R;
  R.N1 = static_cast<int>(pair.A1.size());
  R.N2 = static_cast<int>(pair.A2.size());
  const int N = 1 + R.N1 + R.N2;
  const BiPoly<cplx> pt = reflect(p);

  std::vector<std::pair<cplx, cplx>> pts;
  std::mt19937_64 rng(tol.seed);
  std::uniform_real_distribution<double> u(0, 1);
  auto disk = [&] { return std::polar(std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng)); };
  for (int k = 0; k < 4 * N * N; ++k) pts.emplace_back(disk(), disk());
  const int M = N + 1;
  for (int a = 0; a < M; ++a)
    for (int b = 0; b < M; ++b)
      pts.emplace_back(std::polar(0.9, 2 * std::numbers::pi * a / M), std::polar(0.9, 2 * std::numbers::pi * b / M));

  Mat X(N, pts.size()), Y(N, pts.size());
  for (size_t k = 0; k < pts.size(); ++k) {
    auto [z, w] = pts[k];
    X.col(k) = stack(p, pair.A1, pair.A2, z, w, z, w);
    Y.col(k) = stack(pt, pair.A1, pair.A2, z, w, 1, 1);
  }
  Eigen::JacobiSVD<Mat> sx(X, Eigen::ComputeFullU | Eigen::ComputeThinV);
  const auto& sv = sx.singularValues();
  int r = 0;
  while (r < sv.size() && sv(r) > tol.span_rel * sv(0)) ++r;
  R.span_rank = r;
  Mat Ur = sx.matrixU().leftCols(r);
  Mat Vr = sx.matrixV().leftCols(r);
  Mat map = Y * Vr * sv.head(r).cwiseInverse().asDiagonal() * Ur.adjoint();
  R.isometry_residual = (map * X - Y).norm() / std::max(Y.norm(), 1e-300);
  if (R.isometry_residual > tol.realization_tol)
    throw NumericError("lurking_isometry: X(z) -> Y(z) is not isometric (residual " +
                       std::to_string(R.isometry_residual) + "); the pair does not match p");

  Mat S1 = sx.matrixU().rightCols(N - r);
  Mat U = map;
  bool conj_ok = false;
  if (N - r > 0 && pair.symmetric) {
    Mat S2 = S1.conjugate();
    conj_ok = (Y.adjoint() * S2).norm() <= 1e-8 * std::max(Y.norm(), 1.0);
  }
  if (N - r == 0) {
    conj_ok = pair.symmetric;
  } else if (conj_ok) {
    U += S1.conjugate() * S1.adjoint();
  } else {
    Eigen::JacobiSVD<Mat> sy(Y, Eigen::ComputeFullU);
    U += sy.matrixU().rightCols(N - r) * S1.adjoint();
  }
  if (conj_ok) U = (U + U.transpose()).eval() * 0.5;
  U = nearest_unitary(U);
  R.U = U;
  R.unitary_defect = (U.adjoint() * U - Mat::Identity(N, N)).norm();
  R.symmetry_defect = (U - U.transpose()).norm();
  R.symmetric = conj_ok && R.symmetry_defect < 1e-8;
  return R;
}

Realization realize(const BiPoly<cplx>& p, const Tolerances& tol, bool prefer_symmetric) {
  AglerPair pair = agler_pair(p, tol);
  if (prefer_symmetric && !pair.symmetric)
    if (auto s = symmetrize(pair, p, tol)) pair = *s;
  return lurking_isometry(p, pair, tol);
}

cplx transfer_eval(const Realization& R, cplx z, cplx w) {
  const int n = R.N1 + R.N2;
  if (n == 0) return R.A();
  Mat M = resolvent_matrix(R.D(), R.N1, z, w);
  Eigen::PartialPivLU<Mat> lu(M);
  if (std::abs(lu.determinant()) < 1e-13) throw NumericError("transfer_eval: I - D P(z) is singular");
  Eigen::VectorXcd x = lu.solve(R.C());
  for (int k = 0; k < n; ++k) x(k) *= k < R.N1 ? z : w;
  return R.A() + (R.B() * x)(0, 0);
}

double detrep_verify(const Realization& R, const BiPoly<cplx>& p) {
  const cplx p0 = eval(p, cplx(0), cplx(0));
  const double scale = std::max(p.norm1(), 1e-300);
  double err = 0;
  for (auto [z, w] : closed_bidisk_samples()) {
    cplx d = R.N1 + R.N2 == 0 ? cplx(1) : resolvent_matrix(R.D(), R.N1, z, w).determinant();
    err = std::max(err, std::abs(eval(p, z, w) - p0 * d) / scale);
  }
  return err;
}

Mat valpha(const Realization& R, cplx alpha) {
  const cplx den = 1.0 - alpha * R.A();
  if (std::abs(den) < 1e-12) throw DomainError("valpha: alpha A = 1 is a pole");
  return R.D() + (alpha / den) * R.C() * R.B();
}

ValphaCheck valpha_check(const Realization& R, const BiPoly<cplx>& p, cplx alpha) {
  ValphaCheck c;
  const int n = R.N1 + R.N2;
  Mat V = valpha(R, alpha);
  c.unitary_defect = (V.adjoint() * V - Mat::Identity(n, n)).norm();
  if (n > 0) {
    Eigen::ComplexEigenSolver<Mat> es(V, false);
    for (const cplx& ev : es.eigenvalues())
      c.spectrum_defect = std::max(c.spectrum_defect, std::abs(std::abs(ev) - 1));
  }
  const BiPoly<cplx> pt = reflect(p);
  const cplx p0 = eval(p, cplx(0), cplx(0));
  const cplx lead = p0 * (1.0 - alpha * R.A());
  const double scale = std::max(p.norm1(), 1e-300);
  for (auto [z, w] : closed_bidisk_samples()) {
    cplx d = n == 0 ? cplx(1) : resolvent_matrix(V, R.N1, z, w).determinant();
    c.det_residual = std::max(c.det_residual, std::abs(eval(p, z, w) - alpha * eval(pt, z, w) - lead * d) / scale);
  }
  return c;
}

}  // namespace bidisk
