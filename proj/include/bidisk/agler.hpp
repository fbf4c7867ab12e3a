#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bidisk/bipoly.hpp"
#include "bidisk/config.hpp"
#include "bidisk/extremality.hpp"
#include "bidisk/stability.hpp"

namespace bidisk {

struct FejerRiesz {
  MatTrigPoly E;  // coefficients E_0..E_n, T(z) = E(z)^* E(z) on the circle
  std::vector<cplx> deflated;  // circle points divided out, with repetition
  double residual = 0;         // max |E^*E - T| over circle samples, relative to the scale of T
  int bauer_rows = 0;
  int roots_inside = 0;        // zeros of det E in the open disk
};

// Outer factor of a Hermitian matrix trigonometric polynomial that is
// positive semidefinite on the circle. Circle zeros of det T are taken from
// `circle_zeros` when given (each listed once per double zero), otherwise found numerically.
FejerRiesz fejer_riesz(const MatTrigPoly& T, const Tolerances& tol = {},
                       std::optional<std::vector<cplx>> circle_zeros = std::nullopt);

// Coefficient of z^i w^j zbar^k wbar^l, stored on a fixed (n1+1, n2+1) index grid.
struct HermitianGram {
  Bidegree n;
  Eigen::MatrixXcd G;
  int index(int i, int j) const { return i * (n.n2 + 1) + j; }
};

HermitianGram hermitian_square(const std::vector<BiPoly<cplx>>& v, Bidegree n);

struct AglerPair {
  std::vector<BiPoly<cplx>> A1;  // bidegree (n1-1, n2)
  std::vector<BiPoly<cplx>> A2;  // bidegree (n1, n2-1)
  double residual = 0;
  bool symmetric = false;
};

AglerPair agler_pair(const BiPoly<cplx>& p, const Tolerances& tol = {}, Sweep orientation = Sweep::Z);

// Pair with A_j equal to its own reflection, obtained by a unitary change of
// components; empty when the reflected pair is not a unitary image of the pair.
std::optional<AglerPair> symmetrize(const AglerPair& pair, const BiPoly<cplx>& p, const Tolerances& tol = {});

bool pair_is_symmetric(const AglerPair& pair, Bidegree n, double tol = 1e-9);

// |p|^2 - |p~|^2 - (1-|z|^2)|A1|^2 - (1-|w|^2)|A2|^2, maximum absolute value over grid x grid samples.
double sos_residual(const BiPoly<cplx>& p, const AglerPair& pair, int grid);

double pair_norm(const std::vector<BiPoly<cplx>>& A, cplx z, cplx w);

struct L2Report {
  Tri member = Tri::Unknown;
  std::vector<double> level_sup;  // sup of |q| / (|A1| + |A2|) per refinement level
  double base_sup = 0;            // sup over a uniform torus grid
};

L2Report l2_report(const BiPoly<cplx>& q, const BiPoly<cplx>& p, const Tolerances& tol = {});
Tri l2_membership(const BiPoly<cplx>& q, const BiPoly<cplx>& p, const Tolerances& tol = {});

int kp_dimension(const BiPoly<cplx>& p, const Tolerances& tol = {});
int kp_dimension(const BiPoly<GaussRat>& p, const Tolerances& tol = {});

// v = w f + z f~ with f~ the reflection at (n1-1, n2-1); powers of z are divided out of f first.
BiPoly<cplx> build_symmetric_v(const BiPoly<cplx>& f, Bidegree n);

}  // namespace bidisk
