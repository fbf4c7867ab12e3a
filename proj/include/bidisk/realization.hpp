#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bidisk/agler.hpp"
#include "bidisk/bipoly.hpp"
#include "bidisk/config.hpp"

namespace bidisk {

// Unitary U = [[A, B], [C, D]] with A of size 1x1 and D acting on C^N1 (+) C^N2.
struct Realization {
  Eigen::MatrixXcd U;
  int N1 = 0;
  int N2 = 0;
  bool symmetric = false;
  double unitary_defect = 0;     // ||U^*U - I||_F
  double symmetry_defect = 0;    // ||U - U^t||_F
  double isometry_residual = 0;  // relative misfit of U X(z) = Y(z) on the samples
  int span_rank = 0;             // dimension of the span of X(z)

  cplx A() const { return U(0, 0); }
  Eigen::MatrixXcd B() const { return U.block(0, 1, 1, N1 + N2); }
  Eigen::MatrixXcd C() const { return U.block(1, 0, N1 + N2, 1); }
  Eigen::MatrixXcd D() const { return U.bottomRightCorner(N1 + N2, N1 + N2); }
};

// Unitary with U (p, z A1, w A2) = (p~, A1, A2). A symmetric pair gives U = U^t.
Realization lurking_isometry(const BiPoly<cplx>& p, const AglerPair& pair, const Tolerances& tol = {});

// Agler pair, symmetrized when possible, then the lurking isometry.
Realization realize(const BiPoly<cplx>& p, const Tolerances& tol = {}, bool prefer_symmetric = true);

// A + B P (I - D P)^{-1} C with P = diag(z I_N1, w I_N2).
cplx transfer_eval(const Realization& R, cplx z, cplx w);

// max |p - p(0) det(I - D P)| / ||p||_1 over samples of the closed bidisk.
double detrep_verify(const Realization& R, const BiPoly<cplx>& p);

// D + alpha / (1 - alpha A) C B.
Eigen::MatrixXcd valpha(const Realization& R, cplx alpha);

struct ValphaCheck {
  double unitary_defect = 0;  // ||V^*V - I||_F
  double det_residual = 0;    // max |p - alpha p~ - p(0)(1 - alpha A) det(I - V P)| / ||p||_1
  double spectrum_defect = 0; // max | |lambda| - 1 | over eigenvalues of V
};

ValphaCheck valpha_check(const Realization& R, const BiPoly<cplx>& p, cplx alpha);

}  // namespace bidisk
