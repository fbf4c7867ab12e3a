#include <doctest.h>

#include <random>

#include "bidisk/json_io.hpp"
#include "bidisk/polycore.hpp"
#include "fixtures.hpp"

using namespace bidisk;

namespace {
const cplx I(0, 1);

// Naive substitution oracle: evaluates p at (x, y) term by term with std::pow.
cplx brute_eval(const BiPoly<cplx>& p, cplx x, cplx y) {
  cplx s(0);
  for (int i = 0; i <= p.n1(); ++i)
    for (int j = 0; j <= p.n2(); ++j) s += p.at(i, j) * std::pow(x, i) * std::pow(y, j);
  return s;
}
}  // namespace

TEST_CASE("reflect of 3 - z - w") {
  auto r = reflect(fx::three_z_w());
  BiPoly<cplx> expect(Bidegree{1, 1}, {{1, 1, 3}, {1, 0, -1}, {0, 1, -1}});
  CHECK(max_abs_diff(r, expect) == 0.0);
}

TEST_CASE("reflect of a constant and involution") {
  auto one = BiPoly<cplx>::constant(1);
  CHECK(reflect(one) == one);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    auto p = fx::random_poly(rng, {2, 3});
    CHECK(max_abs_diff(reflect(reflect(p)), p) == 0.0);
  }
  auto pe = fx::exact(fx::cubic_p());
  CHECK(reflect(reflect(pe)) == pe);
}

TEST_CASE("reflect rejects a too small bidegree") {
  CHECK_THROWS_AS(reflect(fx::cubic_p(), Bidegree{1, 1}), DegreeError);
}

TEST_CASE("reflection preserves modulus on the torus") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    auto p = fx::random_poly(rng, {3, 2});
    auto pt = reflect(p);
    for (int s = 0; s < 20; ++s) {
      cplx z = fx::random_circle(rng), w = fx::random_circle(rng);
      CHECK(std::abs(std::abs(eval(p, z, w)) - std::abs(eval(pt, z, w))) <= 1e-12 * p.norm1());
    }
  }
}

TEST_CASE("eval at known zeros") {
  CHECK(std::abs(eval(fx::two_z_w(), cplx(1), cplx(1))) == 0.0);
  CHECK(std::abs(eval(fx::cubic_p(), cplx(1), cplx(1))) == 0.0);
  auto p = fx::cubic_p();
  CHECK(eval(p, cplx(0), cplx(0)) == p.at(0, 0));
  auto pe = fx::exact(p);
  CHECK(eval(pe, GaussRat(1), GaussRat(1)).is_zero());
  std::mt19937_64 rng(3);
  auto q = fx::random_poly(rng, {3, 3});
  for (int s = 0; s < 10; ++s) {
    cplx z = fx::random_disk(rng, 2), w = fx::random_disk(rng, 2);
    CHECK(std::abs(eval(q, z, w) - brute_eval(q, z, w)) < 1e-12 * q.norm1() * 64);
  }
}

TEST_CASE("slice") {
  auto s = slice(fx::three_z_w(), cplx(1), cplx(1));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 10; ++k) {
    cplx z = fx::random_disk(rng, 3);
    CHECK(std::abs(s(z) - (3.0 - 2.0 * z)) < 1e-12);
    CHECK(std::abs(s(z) - brute_eval(fx::three_z_w(), z, z)) < 1e-12);
  }
  auto c = slice(BiPoly<cplx>::constant(cplx(2, 1), {2, 2}), cplx(0, 1), cplx(-1));
  CHECK(c.true_degree() == 0);
  CHECK(c.coeff(0) == cplx(2, 1));
  CHECK_THROWS_AS(slice(fx::three_z_w(), cplx(0.5), cplx(1)), DomainError);
}

TEST_CASE("slice and reflection compatibility") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    auto p = fx::random_detrep(rng, {2, 1}, 0.9);
    cplx a = fx::random_circle(rng), b = fx::random_circle(rng);
    auto lhs = slice(reflect(p), a, b);
    // zeta^n reflect(p_zeta) at degree n1 + n2.
    auto rhs = reflect(slice(p, a, b), p.n1() + p.n2()) * (std::pow(a, p.n1()) * std::pow(b, p.n2()));
    for (int k = 0; k <= lhs.degree(); ++k) CHECK(std::abs(lhs.coeff(k) - rhs.coeff(k)) < 1e-12);
  }
}

TEST_CASE("shear") {
  auto p = fx::two_z_w();
  CHECK(shear(p, 0) == p);
  auto s = shear(p, 1);
  CHECK(s.bidegree() == Bidegree{1, 2});
  BiPoly<cplx> expect(Bidegree{1, 2}, {{0, 0, 2}, {1, 1, -1}, {0, 1, -1}});
  CHECK(s == expect);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    auto q = fx::random_poly(rng, {2, 2});
    int k = 1 + t % 3;
    CHECK(max_abs_diff(reflect(shear(q, k)), shear(reflect(q), k)) == 0.0);
    cplx z = fx::random_disk(rng), w = fx::random_disk(rng);
    CHECK(std::abs(eval(shear(q, k), z, w) - brute_eval(q, std::pow(w, k) * z, w)) < 1e-12 * q.norm1());
  }
}

TEST_CASE("shear is multiplicative") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    auto p = fx::random_poly(rng, {1, 2});
    auto q = fx::random_poly(rng, {2, 1});
    for (int k : {1, 2, 3}) {
      auto lhs = shear(multiply(p, q), k);
      auto rhs = multiply(shear(p, k), shear(q, k));
      CHECK(max_abs_diff(lhs, rhs) < 1e-12 * lhs.norm1());
    }
  }
}

TEST_CASE("homogeneous expansion examples") {
  auto h = homog_expand(fx::two_z_w(), cplx(1), cplx(1));
  CHECK(h.order == 1);
  CHECK(h.leading() == BiPoly<cplx>(Bidegree{1, 1}, {{1, 0, 1}, {0, 1, 1}}));
  auto ht = homog_expand(reflect(fx::two_z_w()), cplx(1), cplx(1));
  CHECK(ht.order == 1);
  CHECK(ht.leading() == BiPoly<cplx>(Bidegree{1, 1}, {{1, 0, -1}, {0, 1, -1}}));
  auto h0 = homog_expand(fx::three_z_w(), cplx(1), cplx(1));
  CHECK(h0.order == 0);
  CHECK(h0.leading().at(0, 0) == cplx(1));
  auto he = homog_expand(fx::exact(fx::two_z_w()), GaussRat(1), GaussRat(1));
  CHECK(he.order == 1);
}

TEST_CASE("homogeneous expansion reassembles p") {
  std::mt19937_64 rng(8);
  auto p = fx::random_poly(rng, {3, 2});
  cplx a = fx::random_circle(rng), b = fx::random_circle(rng);
  auto h = homog_expand(p, a, b);
  for (int s = 0; s < 20; ++s) {
    cplx z = fx::random_disk(rng), w = fx::random_disk(rng);
    // z = zeta (1 - eta)  =>  eta = 1 - z / zeta.
    cplx e1 = 1.0 - z / a, e2 = 1.0 - w / b;
    CHECK(std::abs(eval(h, e1, e2) - eval(p, z, w)) < 1e-10 * p.norm1());
  }
}

TEST_CASE("linear combinations and products") {
  auto p = fx::two_z_w();
  auto d = linear_combine<cplx>({{cplx(1), p}, {cplx(-1), reflect(p)}});
  CHECK(d == BiPoly<cplx>(Bidegree{1, 1}, {{0, 0, 2}, {1, 1, -2}}));
  CHECK(linear_combine<cplx>({{cplx(1), p}, {cplx(0), fx::cubic_v()}}) == p);
  BiPoly<cplx> one_minus_z(Bidegree{1, 0}, {{0, 0, 1}, {1, 0, -1}});
  BiPoly<cplx> z_minus_w(Bidegree{1, 1}, {{1, 0, 1}, {0, 1, -1}});
  CHECK(multiply(one_minus_z, z_minus_w) == fx::cubic_v());
  auto pe = fx::exact(p);
  CHECK(pe - reflect(pe) == fx::exact(d));
}

TEST_CASE("symmetry of perturbations") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 5; ++t) {
    cplx a = fx::random_disk(rng, 3);
    BiPoly<cplx> v(Bidegree{1, 1}, {{1, 0, a}, {0, 1, std::conj(a)}});
    CHECK(is_symmetric(v, {1, 1}));
  }
  CHECK_FALSE(is_symmetric(BiPoly<cplx>(Bidegree{1, 1}, {{1, 0, 1}}), {1, 1}));
  CHECK(is_symmetric(fx::cubic_v(), {2, 1}));
  CHECK(is_symmetric(fx::exact(fx::cubic_v()), {2, 1}));
}

TEST_CASE("univariate helpers") {
  UniPoly<GaussRat> q(std::vector<GaussRat>{GaussRat(1), GaussRat(-2), GaussRat(1)});
  CHECK(exact_root_order(q, GaussRat(1)) == 2);
  auto sf = squarefree_decomposition(q * UniPoly<GaussRat>(std::vector<GaussRat>{GaussRat(2), GaussRat(1)}));
  REQUIRE(sf.size() == 2);
  CHECK(sf[0].second == 1);
  CHECK(sf[1].second == 2);
}

TEST_CASE("json round trip and diagnostics") {
  auto p = fx::i_two_z_w();
  auto back = poly_from_json(to_json(p));
  CHECK(back == p);
  auto e = parse_poly_exact(R"({"bidegree":[1,0],"coeffs":[[["3","0"]],[["-7/4","1/2"]]]})");
  CHECK(e.at(1, 0) == GaussRat(mpq_class(-7, 4), mpq_class(1, 2)));
  CHECK_THROWS_AS(parse_poly(R"({"bidegree":[1,1],"coeffs":[[[1,0],[2,0]]]})"), InputError);
  try {
    parse_poly("{\"bidegree\": [1,1],\n \"coeffs\": [[1,}");
    FAIL("expected an error");
  } catch (const InputError& err) {
    CHECK(std::string(err.what()).find("line 2") != std::string::npos);
  }
}
