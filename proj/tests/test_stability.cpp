#include <doctest.h>

#include <numbers>
#include <random>

#include "bidisk/intersect.hpp"
#include "bidisk/roots.hpp"
#include "bidisk/stability.hpp"
#include "fixtures.hpp"

using namespace bidisk;

namespace {

// Brute-force grid minimum of the smallest eigenvalue of T on the circle.
double grid_min_eig(const MatTrigPoly& T, int n) {
  double m = 1e300;
  for (int k = 0; k < n; ++k) {
    Eigen::MatrixXcd A = T.eval(std::polar(1.0, 2 * std::numbers::pi * k / n));
    A = (A + A.adjoint()) * 0.5;
    m = std::min(m, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(A).eigenvalues()(0));
  }
  return m;
}

// Companion-root oracle: no roots with |r| <= 1.
bool roots_outside(const UniPoly<cplx>& q) {
  for (cplx r : poly_roots(q)) if (std::abs(r) <= 1) return false;
  return true;
}

}  // namespace

TEST_CASE("P and Q for bidegree (n, 1)") {
  std::mt19937_64 rng(1);
  auto pq = pq_matrices(fx::two_z_w());
  for (int s = 0; s < 5; ++s) {
    cplx z = fx::random_disk(rng, 2);
    CHECK(std::abs(pq.P.eval(z)(0, 0) - (2.0 - z)) < 1e-14);
    CHECK(std::abs(pq.Q.eval(z)(0, 0) + z) < 1e-14);
  }
  auto pq7 = pq_matrices(fx::cubic_p());
  for (int s = 0; s < 5; ++s) {
    cplx z = fx::random_disk(rng, 2);
    CHECK(std::abs(pq7.P.eval(z)(0, 0) - (3.0 - z - z * z)) < 1e-13);
    CHECK(std::abs(pq7.Q.eval(z)(0, 0) + z * z) < 1e-13);
  }
  auto pc = pq_matrices(BiPoly<cplx>::constant(cplx(2, 1)));
  CHECK(schur_cohn_form(BiPoly<cplx>::constant(cplx(2, 1))).eval(1)(0, 0).real() == doctest::Approx(5));
  CHECK(pc.P.size == 1);
}

TEST_CASE("Schur-Cohn form identity") {
  std::mt19937_64 rng(2);
  std::vector<BiPoly<cplx>> polys;
  for (const auto& c : fx::corpus()) polys.push_back(c.p);
  polys.push_back(fx::random_poly(rng, {2, 3}));
  for (const auto& p : polys) {
    auto T = schur_cohn_form(p);
    CHECK(T.hermitian_defect() < 1e-12 * T.scale());
    const int m = p.n2();
    auto pt = reflect(p);
    for (int s = 0; s < 30; ++s) {
      cplx z = fx::random_circle(rng), w = fx::random_disk(rng, 0.95);
      double lhs = (std::norm(eval(p, z, w)) - std::norm(eval(pt, z, w))) / (1 - std::norm(w));
      Eigen::VectorXcd e(m);
      for (int j = 0; j < m; ++j) e(j) = std::pow(w, j);
      double rhs = (e.adjoint() * T.eval(z) * e)(0, 0).real();
      CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
    }
  }
  CHECK(std::abs(schur_cohn_form(fx::two_z_w()).eval(1)(0, 0)) < 1e-14);
}

TEST_CASE("Schur-Cohn form of the cubic example is semidefinite") {
  CHECK(grid_min_eig(schur_cohn_form(fx::cubic_p()), 256) > -1e-12);
}

TEST_CASE("univariate Schur-Cohn") {
  for (double t = -1.75; t <= 0.5; t += 0.125) {
    UniPoly<cplx> q(std::vector<cplx>{3, 1 - t, -(1 + t)});
    CHECK(univariate_schur_cohn(q));
    CHECK(roots_outside(q));
  }
  CHECK_FALSE(univariate_schur_cohn(UniPoly<cplx>(std::vector<cplx>{0, 1})));
  UniPoly<cplx> q(std::vector<cplx>{2, -1});
  CHECK(univariate_schur_cohn(q) == roots_outside(q));
  CHECK_THROWS_AS(univariate_schur_cohn(UniPoly<cplx>()), DomainError);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0, 1);
  for (int t = 0; t < 50; ++t) {
    std::vector<cplx> c(4);
    for (auto& x : c) x = cplx(g(rng), g(rng));
    c[0] *= 3.0;
    UniPoly<cplx> r(c);
    CHECK(univariate_schur_cohn(r) == roots_outside(r));
  }
}

TEST_CASE("certified sweep") {
  auto s1 = certified_psd_sweep(schur_cohn_form(fx::three_z_w()), SweepMode::Strict);
  CHECK(s1.passed);
  CHECK(s1.certified);
  CHECK(s1.margin == doctest::Approx(grid_min_eig(schur_cohn_form(fx::three_z_w()), 4096)).epsilon(1e-6));
  auto s2 = certified_psd_sweep(schur_cohn_form(fx::two_z_w()), SweepMode::Semidefinite);
  CHECK(s2.passed);
  REQUIRE(s2.zero_candidates.size() == 1);
  CHECK(std::abs(s2.zero_candidates[0] - 1.0) < 1e-3);
  MatTrigPoly neg(2, 0, 1);
  neg.coeffs[0] = -Eigen::MatrixXcd::Identity(2, 2);
  auto s3 = certified_psd_sweep(neg, SweepMode::Semidefinite);
  CHECK_FALSE(s3.passed);
  CHECK(s3.margin == doctest::Approx(-1));
}

TEST_CASE("stability verdicts") {
  auto r1 = scattering_stable(fx::two_z_w());
  CHECK(r1.verdict == Verdict::ScatteringStable);
  REQUIRE(r1.boundary_zero_candidates.size() == 1);
  CHECK(std::abs(r1.boundary_zero_candidates[0].first - 1.0) < 1e-9);
  CHECK(std::abs(r1.boundary_zero_candidates[0].second - 1.0) < 1e-9);
  CHECK(scattering_stable(fx::cubic_p()).verdict == Verdict::ScatteringStable);
  BiPoly<cplx> one_minus_zw(Bidegree{1, 1}, {{0, 0, 1}, {1, 1, -1}});
  CHECK(scattering_stable(one_minus_zw).verdict == Verdict::Degenerate);
  CHECK(resultant_inner(fx::exact(one_minus_zw)).degenerate);
  CHECK(scattering_stable(fx::cubic_p() + fx::cubic_v()).verdict == Verdict::Unstable);
  CHECK(stable_closed(fx::three_z_w()).verdict == Verdict::StableClosed);
  CHECK(stable_closed(fx::two_z_w()).verdict != Verdict::StableClosed);
  CHECK(scattering_stable(BiPoly<cplx>(Bidegree{1, 1}, {{0, 0, 1}, {1, 0, -2}})).verdict == Verdict::Unstable);
}

TEST_CASE("scattering stable polynomials dominate their reflections") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 6; ++t) {
    auto p = fx::random_detrep(rng, {2, 1}, t % 2 ? 1.0 : 0.8);
    REQUIRE(scattering_stable(p).verdict == Verdict::ScatteringStable);
    auto pt = reflect(p);
    for (int s = 0; s < 2000; ++s) {
      cplx z = fx::random_disk(rng), w = fx::random_disk(rng);
      CHECK(std::abs(eval(p, z, w)) + 1e-10 >= std::abs(eval(pt, z, w)));
    }
  }
}

TEST_CASE("closed stability implies scattering stability on the corpus") {
  for (const auto& c : fx::corpus()) {
    auto sc = stable_closed(c.p);
    if (sc.verdict == Verdict::StableClosed) CHECK(scattering_stable(c.p).verdict == Verdict::ScatteringStable);
    CHECK(scattering_stable(c.p).verdict == Verdict::ScatteringStable);
  }
}
