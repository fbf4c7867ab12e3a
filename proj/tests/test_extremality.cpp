#include <doctest.h>

#include <random>

#include "bidisk/extremality.hpp"
#include "bidisk/polycore.hpp"
#include "fixtures.hpp"

using namespace bidisk;

namespace {

const cplx I(0, 1);

BiPoly<cplx> poly11(cplx c0, cplx c1, cplx c2, cplx c3 = 0) {
  return BiPoly<cplx>(Bidegree{1, 1}, {{0, 0, c0}, {1, 0, c1}, {0, 1, c2}, {1, 1, c3}});
}

bool parallel(const BiPoly<cplx>& a, const BiPoly<cplx>& b, double tol) {
  size_t k = 0;
  while (k < a.coeffs().size() && std::abs(b.coeffs()[k]) < 1e-12) ++k;
  if (k == a.coeffs().size()) return false;
  cplx s = a.coeffs()[k] / b.coeffs()[k];
  return max_abs_diff(a, b * s) < tol * a.norm1();
}

}  // namespace

TEST_CASE("perturbation basis") {
  auto s11 = perturbation_basis({1, 1});
  CHECK(s11.real_dimension == 2);
  REQUIRE(s11.basis.size() == 2);
  CHECK(s11.basis[0] == poly11(0, 1, 1));
  CHECK(s11.basis[1] == poly11(0, I, -I));
  CHECK(perturbation_basis({2, 1}).real_dimension == 4);
  CHECK_THROWS_AS(perturbation_basis({0, 0}), DegreeError);
  for (Bidegree n : {Bidegree{1, 1}, Bidegree{2, 1}, Bidegree{2, 2}, Bidegree{3, 2}, Bidegree{0, 3}}) {
    auto s = perturbation_basis(n);
    CHECK(s.real_dimension == (n.n1 + 1) * (n.n2 + 1) - 2);
    // Real Gram matrix of the coefficient vectors has full rank.
    const int D = s.real_dimension;
    Eigen::MatrixXd G(D, D);
    for (int a = 0; a < D; ++a) {
      CHECK(is_symmetric(s.basis[a], n));
      CHECK(s.basis[a].at(0, 0) == cplx(0));
      for (int b = 0; b < D; ++b) {
        double g = 0;
        for (size_t k = 0; k < s.basis[a].coeffs().size(); ++k)
          g += std::real(std::conj(s.basis[a].coeffs()[k]) * s.basis[b].coeffs()[k]);
        G(a, b) = g;
      }
    }
    CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(G).rank() == D);
  }
}

TEST_CASE("admissible interval against closed forms") {
  // 3 - (1 - t)(z + w) is zero-free on the bidisk iff 2|1 - t| <= 3.
  auto iv = admissible_interval(fx::three_z_w(), poly11(0, 1, 1));
  CHECK(iv.lo == doctest::Approx(-0.5).epsilon(1e-5));
  CHECK(iv.hi == doctest::Approx(2.5).epsilon(1e-5));
  CHECK_FALSE(iv.lo_clipped);

  auto cub = admissible_interval(fx::cubic_p(), fx::cubic_v());
  CHECK(std::abs(cub.lo + 1.75) < 1e-4);
  CHECK(std::abs(cub.hi - 0.5) < 1e-4);

  auto zero = admissible_interval(fx::two_z_w(), BiPoly<cplx>(Bidegree{1, 1}));
  CHECK(zero.lo_clipped);
  CHECK(zero.hi_clipped);
  CHECK(zero.hi == Tolerances{}.t_max);

  // i(z - w) on 2 - z - w fails on both sides.
  auto bad = admissible_interval(fx::two_z_w(), poly11(0, I, -I));
  CHECK(bad.hi < 1e-4);
  CHECK(bad.lo > -1e-4);
}

TEST_CASE("irreducibility") {
  CHECK(irreducible(poly11(1, 0, 0, -1)).verdict == Tri::True);
  CHECK(irreducible(poly11(1, -1, -1, 1)).verdict == Tri::False);
  // p - p~ for the cubic example is 3 - z + (z - 3z^2) w.
  BiPoly<cplx> q(Bidegree{2, 1}, {{0, 0, 3.0}, {1, 0, -1.0}, {1, 1, 1.0}, {2, 1, -3.0}});
  CHECK(max_abs_diff(q, fx::cubic_p() - reflect(fx::cubic_p())) < 1e-15);
  CHECK(irreducible(q).verdict == Tri::True);
  CHECK(irreducible(fx::exact(q)).verdict == Tri::True);
  // 3 - z + (3z - z^2) w = (3 - z)(1 + zw).
  BiPoly<cplx> printed(Bidegree{2, 1}, {{0, 0, 3.0}, {1, 0, -1.0}, {1, 1, 3.0}, {2, 1, -1.0}});
  CHECK(irreducible(printed).verdict == Tri::False);
  CHECK(irreducible(fx::exact(printed)).verdict == Tri::False);
  CHECK(irreducible(fx::exact(poly11(1, -1, -1, 1))).verdict == Tri::False);
  CHECK(irreducible(fx::cubic_p() - reflect(fx::cubic_p())).verdict == Tri::True);

  // Square of an irreducible, a factor in one variable, monomial factors.
  auto sq = multiply(poly11(1, 0, 0, -1), poly11(1, 0, 0, -1));
  CHECK(irreducible(sq).verdict == Tri::False);
  CHECK(irreducible(fx::exact(sq)).verdict == Tri::False);
  auto wfac = multiply(poly11(2, 1, 1, 0), BiPoly<cplx>(Bidegree{0, 1}, {{0, 0, 1.0}, {0, 1, -2.0}}));
  CHECK(irreducible(wfac).verdict == Tri::False);
  CHECK(irreducible(fx::exact(wfac)).verdict == Tri::False);
  CHECK(irreducible(poly11(0, 1, 0, 1)).verdict == Tri::False);
  CHECK(irreducible(BiPoly<cplx>(Bidegree{2, 0}, {{0, 0, 1.0}, {2, 0, 1.0}})).verdict == Tri::False);
  CHECK(irreducible(BiPoly<cplx>(Bidegree{1, 0}, {{0, 0, 1.0}, {1, 0, 1.0}})).verdict == Tri::True);
  CHECK_THROWS_AS(irreducible(BiPoly<cplx>(Bidegree{1, 1})), DomainError);

  // Products of random factors are reducible; random polynomials are irreducible.
  std::mt19937_64 rng(7);
  for (int k = 0; k < 10; ++k) {
    auto f = fx::random_poly(rng, {1, 1});
    auto g = fx::random_poly(rng, {1, 2});
    CHECK(irreducible(f).verdict == Tri::True);
    CHECK(irreducible(multiply(f, g)).verdict == Tri::False);
    CHECK(irreducible(multiply(f, g)).nullity == 2);
    auto rf = fx::random_rational(rng, {1, 1});
    auto rg = fx::random_rational(rng, {2, 1});
    CHECK(irreducible(multiply(rf, rg)).verdict == Tri::False);
    CHECK(irreducible(rg).verdict == Tri::True);
  }
}

TEST_CASE("vanishing order and bottom term") {
  const std::pair<cplx, cplx> one{1.0, 1.0};
  auto p = fx::two_z_w();
  CHECK(vanishing_order_check(p, poly11(0, 1, -1), one));
  CHECK(vanishing_order_check(p, poly11(0, 1, 1, -2), one));
  CHECK_FALSE(vanishing_order_check(p, poly11(0, 1, 1), one));

  for (double r : {0.5, -2.0}) {
    auto bt = bottom_term_check(p, poly11(0, I * r, -I * r), one);
    CHECK(bt.kind == BottomTerm::Inconsistent);
    CHECK(std::abs(bt.mu_squared + 1.0) < 1e-12);
  }
  auto zero = bottom_term_check(p, BiPoly<cplx>(Bidegree{1, 1}), one);
  CHECK(zero.kind == BottomTerm::Consistent);
  CHECK(zero.r == 0.0);
  CHECK(bottom_term_check(fx::i_two_z_w(), poly11(0, I, -I), one).kind == BottomTerm::Vacuous);

  // The cubic witness vanishes to order 2 at (1,1), so V_1 = 0.
  auto bt = bottom_term_check(fx::cubic_p(), fx::cubic_v(), one);
  CHECK(bt.kind == BottomTerm::Consistent);
  CHECK(bt.r == doctest::Approx(0.0));
  CHECK(homog_expand(fx::cubic_v(), cplx(1), cplx(1)).order == 2);
  // 1 - z w at (1,1): V_1 = eta1 + eta2 = P_1 of 2 - z - w, so r mu = 1 with mu^2 = -1 fails.
  CHECK(bottom_term_check(p, poly11(0, 1, 1, -2), one).kind == BottomTerm::Inconsistent);
}

TEST_CASE("face probe") {
  Tolerances tol;
  CHECK(face_probe(fx::two_z_w(), 4, tol).directions.empty());
  CHECK(feasible_directions(fx::two_z_w(), tol).rows.empty());

  auto g1 = face_probe(fx::three_z_w(), 2, tol);
  CHECK(g1.rank == 2);
  CHECK(g1.feasible_dimension == 2);

  auto cub = face_probe(fx::cubic_p(), 2, tol);
  REQUIRE_FALSE(cub.directions.empty());
  CHECK(parallel(cub.directions.front().v, fx::cubic_v(), 1e-9));
  CHECK(cub.feasible_dimension == 2);

  // Every witness satisfies the necessary conditions at every boundary zero.
  for (const auto& p : {fx::cubic_p(), fx::i_two_z_w(), fx::three_z_w()}) {
    auto probe = face_probe(p, 3, tol);
    for (const auto& d : probe.directions)
      for (const auto& z : torus_common_zeros(p, tol)) {
        CHECK(vanishing_order_check(p, d.v, z, tol));
        CHECK(bottom_term_check(p, d.v, z, tol).kind != BottomTerm::Inconsistent);
      }
  }
}

TEST_CASE("certify_extreme") {
  auto g2 = certify_extreme(fx::two_z_w());
  CHECK(g2.verdict == Extremality::Extreme);
  CHECK(g2.saturation.saturated);
  CHECK(g2.irreducible.verdict == Tri::True);

  auto g1 = certify_extreme(fx::three_z_w());
  CHECK(g1.verdict == Extremality::NotExtreme);
  REQUIRE(g1.witness_v.has_value());
  CHECK(is_symmetric(*g1.witness_v, {1, 1}));

  auto ig = certify_extreme(fx::i_two_z_w());
  CHECK(ig.verdict == Extremality::NotExtreme);
  CHECK(ig.saturation.saturated);

  auto cub = certify_extreme(fx::cubic_p());
  CHECK(cub.verdict == Extremality::NotExtreme);
  REQUIRE(cub.witness_v.has_value());
  CHECK(parallel(*cub.witness_v, fx::cubic_v(), 1e-9));
  REQUIRE(cub.decomposition.has_value());

  CHECK_THROWS_AS(certify_extreme(poly11(2, -1, -1, 0.5)), InputError);
  CHECK_THROWS_AS(certify_extreme(poly11(1, -1, -1)), InputError);
}

TEST_CASE("decomposition of the cubic example") {
  const auto p = fx::cubic_p();
  const double lambda = 2.0 / 9.0;
  std::mt19937_64 rng(11);
  for (int k = 0; k < 100; ++k) {
    cplx z = fx::random_disk(rng, 0.95), w = fx::random_disk(rng, 0.95);
    cplx d = prp_value(p, z, w) - lambda * prp_value(fx::q_minus(), z, w) - (1 - lambda) * prp_value(fx::q_plus(), z, w);
    CHECK(std::abs(d) < 1e-9);
  }
  auto dec = decompose(p, fx::cubic_v(), admissible_interval(p, fx::cubic_v()));
  CHECK(dec.lambda == doctest::Approx(lambda).epsilon(1e-4));
}

TEST_CASE("bidegree (1,1) classification") {
  auto g2 = classify_11(fx::two_z_w());
  CHECK(g2.extreme);
  CHECK(g2.a == doctest::Approx(0.5));
  CHECK(std::abs(g2.nu - I) < 1e-12);

  auto ig = classify_11(fx::i_two_z_w());
  CHECK_FALSE(ig.extreme);
  CHECK(ig.reducible);
  CHECK(ig.mobius_split);
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    cplx z = fx::random_disk(rng, 0.9), w = fx::random_disk(rng, 0.9);
    CHECK(std::abs(prp_value(fx::i_two_z_w(), z, w) - mobius_value(ig, z, w)) < 1e-10);
    CHECK(std::abs(prp_value(fx::i_two_z_w(), z, w) - 0.5 * ((1.0 + z) / (1.0 - z) + (1.0 + w) / (1.0 - w))) < 1e-10);
  }

  auto g4 = classify_11(fx::four_z_w());
  CHECK_FALSE(g4.extreme);
  REQUIRE(g4.decomposition.has_value());
  CHECK(g4.decomposition->t_minus < 0);
  CHECK(g4.decomposition->t_plus > 0);

  // Rotated reducible instances: the split is valid whenever mu_eff^2 = -1.
  for (int k = 0; k < 20; ++k) {
    double a = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    cplx s1 = fx::random_circle(rng), s2 = fx::random_circle(rng);
    cplx mu = I / std::sqrt(s1 * s2);
    auto p = poly11(mu, -mu * a * s1, -mu * (1 - a) * s2);
    auto c = classify_11(p);
    REQUIRE(c.reducible);
    cplx z = fx::random_disk(rng, 0.9), w = fx::random_disk(rng, 0.9);
    CHECK(std::abs(prp_value(p, z, w) - mobius_value(c, z, w)) < 1e-9);
    // Theorem-6.2 style rotation: conj(nu) p is reducible.
    auto rot = classify_11(p * std::conj(c.nu));
    CHECK(rot.reducible);
  }

  // The rotation by nu makes an extreme polynomial reducible.
  auto rot = classify_11(fx::two_z_w() * std::conj(g2.nu));
  CHECK(rot.reducible);
  CHECK_THROWS_AS(classify_11(fx::cubic_p()), InputError);
}
