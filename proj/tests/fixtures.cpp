#include "fixtures.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace fx {

namespace {
const cplx I(0, 1);

BiPoly<cplx> lin(cplx c, cplx a, cplx b) { return BiPoly<cplx>(Bidegree{1, 1}, {{0, 0, c}, {1, 0, a}, {0, 1, b}}); }
}  // namespace

BiPoly<cplx> two_z_w() { return lin(2, -1, -1); }
BiPoly<cplx> three_z_w() { return lin(3, -1, -1); }
BiPoly<cplx> four_z_w() { return lin(4, -1, -1); }
BiPoly<cplx> i_two_z_w() { return lin(2.0 * I, -I, -I); }

BiPoly<cplx> cubic_p() { return BiPoly<cplx>(Bidegree{2, 1}, {{0, 0, 3}, {1, 0, -1}, {2, 0, -1}, {0, 1, -1}}); }
BiPoly<cplx> cubic_v() { return BiPoly<cplx>(Bidegree{2, 1}, {{1, 0, 1}, {0, 1, -1}, {2, 0, -1}, {1, 1, 1}}); }
BiPoly<cplx> q_minus() { return cubic_p() + cubic_v() * cplx(-1.75); }
BiPoly<cplx> q_plus() { return cubic_p() + cubic_v() * cplx(0.5); }
BiPoly<cplx> squared() { return bidisk::multiply(three_z_w(), three_z_w()); }

BiPoly<GaussRat> exact(const BiPoly<cplx>& p) {
  std::vector<GaussRat> c;
  for (cplx x : p.coeffs()) c.emplace_back(mpq_class(x.real()), mpq_class(x.imag()));
  return BiPoly<GaussRat>(p.bidegree(), std::move(c));
}

std::vector<Named> corpus() {
  return {{"2-z-w", two_z_w(), true},      {"3-z-w", three_z_w(), false},  {"i(2-z-w)", i_two_z_w(), true},
          {"3-z-z^2-w", cubic_p(), false}, {"q_minus", q_minus(), true},  {"q_plus", q_plus(), true},
          {"(3-z-w)^2", squared(), false}, {"4-z-w", four_z_w(), false}};
}

cplx random_disk(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0, 1);
  return std::polar(radius * std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng));
}

cplx random_circle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 2 * std::numbers::pi);
  return std::polar(1.0, u(rng));
}

BiPoly<cplx> random_detrep(std::mt19937_64& rng, Bidegree n, double contraction) {
  const int N = n.n1 + n.n2;
  std::normal_distribution<double> g(0, 1);
  Eigen::MatrixXcd A(N + 1, N + 1);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; j <= N; ++j) A(i, j) = cplx(g(rng), g(rng));
  Eigen::MatrixXcd U = Eigen::HouseholderQR<Eigen::MatrixXcd>(A).householderQ();
  // Corner of a unitary: a contraction with one singular value below 1.
  Eigen::MatrixXcd D = U.bottomRightCorner(N, N) * contraction;
  // Interpolate det(I - D Delta) on a grid of roots of unity.
  const int M1 = n.n1 + 1, M2 = n.n2 + 1;
  BiPoly<cplx> p(n);
  std::vector<std::vector<cplx>> vals(M1, std::vector<cplx>(M2));
  for (int a = 0; a < M1; ++a)
    for (int b = 0; b < M2; ++b) {
      cplx z = std::polar(1.0, 2 * std::numbers::pi * a / M1), w = std::polar(1.0, 2 * std::numbers::pi * b / M2);
      Eigen::MatrixXcd Delta = Eigen::MatrixXcd::Zero(N, N);
      for (int k = 0; k < N; ++k) Delta(k, k) = k < n.n1 ? z : w;
      vals[a][b] = (Eigen::MatrixXcd::Identity(N, N) - D * Delta).determinant();
    }
  for (int i = 0; i < M1; ++i)
    for (int j = 0; j < M2; ++j) {
      cplx s(0);
      for (int a = 0; a < M1; ++a)
        for (int b = 0; b < M2; ++b)
          s += vals[a][b] * std::polar(1.0, -2 * std::numbers::pi * (double(i) * a / M1 + double(j) * b / M2));
      p.at(i, j) = s / double(M1 * M2);
    }
  return p;
}

BiPoly<cplx> random_poly(std::mt19937_64& rng, Bidegree n) {
  std::normal_distribution<double> g(0, 1);
  BiPoly<cplx> p(n);
  for (int i = 0; i <= n.n1; ++i)
    for (int j = 0; j <= n.n2; ++j) p.at(i, j) = cplx(g(rng), g(rng));
  return p;
}

BiPoly<GaussRat> random_rational(std::mt19937_64& rng, Bidegree n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  BiPoly<GaussRat> p(n);
  for (int i = 0; i <= n.n1; ++i)
    for (int j = 0; j <= n.n2; ++j)
      p.at(i, j) = GaussRat(mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
  return p;
}

}  // namespace fx
