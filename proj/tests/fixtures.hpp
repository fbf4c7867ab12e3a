#pragma once

#include <random>
#include <string>
#include <vector>

#include "bidisk/bipoly.hpp"
#include "bidisk/polycore.hpp"

namespace fx {

using bidisk::BiPoly;
using bidisk::Bidegree;
using bidisk::cplx;
using bidisk::GaussRat;

BiPoly<cplx> two_z_w();        // 2 - z - w
BiPoly<cplx> three_z_w();      // 3 - z - w
BiPoly<cplx> four_z_w();       // 4 - z - w
BiPoly<cplx> i_two_z_w();      // i (2 - z - w)
BiPoly<cplx> cubic_p();        // 3 - z - z^2 - w
BiPoly<cplx> cubic_v();        // (1 - z)(z - w)
BiPoly<cplx> q_minus();        // p - 7v/4
BiPoly<cplx> q_plus();         // p + v/2
BiPoly<cplx> squared();        // (3 - z - w)^2

BiPoly<GaussRat> exact(const BiPoly<cplx>& p);  // coefficients must be dyadic

struct Named {
  std::string name;
  BiPoly<cplx> p;
  bool saturated;
};
std::vector<Named> corpus();

// det(I - D Delta(z, w)) with D = contraction * (corner of a random unitary);
// Delta = diag(z I_n1, w I_n2). contraction = 1 gives boundary zeros.
BiPoly<cplx> random_detrep(std::mt19937_64& rng, Bidegree n, double contraction);
BiPoly<cplx> random_poly(std::mt19937_64& rng, Bidegree n);
BiPoly<GaussRat> random_rational(std::mt19937_64& rng, Bidegree n);
cplx random_disk(std::mt19937_64& rng, double radius = 1.0);
cplx random_circle(std::mt19937_64& rng);

}  // namespace fx
