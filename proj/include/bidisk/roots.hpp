#pragma once

#include <vector>

#include "bidisk/config.hpp"
#include "bidisk/scalar.hpp"
#include "bidisk/unipoly.hpp"

namespace bidisk {

struct CircleRoot {
  cplx point;
  int multiplicity = 0;
};

struct RootCluster {
  cplx center;
  int multiplicity = 0;
};

// Companion-matrix roots of the trimmed polynomial (leading coefficients below
// rel * norm1 are dropped).
std::vector<cplx> poly_roots(const UniPoly<cplx>& q, double rel = 1e-14);

// Taylor coefficients of q at z0: q(z0 + h) = sum c_j h^j.
std::vector<cplx> taylor_shift(const UniPoly<cplx>& q, cplx z0);

// Smallest j with |c_j| > rel * norm1(q) in the Taylor expansion at z0.
int taylor_order(const UniPoly<cplx>& q, cplx z0, double rel);

// Roots on the unit circle with multiplicities.
std::vector<CircleRoot> circle_roots(const UniPoly<cplx>& q, const Tolerances& tol);
std::vector<CircleRoot> circle_roots(const UniPoly<GaussRat>& q, const Tolerances& tol);

// All roots grouped into clusters whose multiplicity agrees with the local Taylor order.
std::vector<RootCluster> root_clusters(const UniPoly<cplx>& q, const Tolerances& tol);

int total_multiplicity(const std::vector<CircleRoot>& roots);

}  // namespace bidisk
