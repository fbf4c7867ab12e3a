#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bidisk/bipoly.hpp"
#include "bidisk/config.hpp"
#include "bidisk/scalar.hpp"

namespace bidisk {

// Matrix Laurent polynomial sum_k coeffs[k] z^(low + k).
struct MatTrigPoly {
  int size = 0;
  int low = 0;
  std::vector<Eigen::MatrixXcd> coeffs;

  MatTrigPoly() = default;
  MatTrigPoly(int m, int low_power, int count)
      : size(m), low(low_power), coeffs(count, Eigen::MatrixXcd::Zero(m, m)) {}

  int high() const { return low + static_cast<int>(coeffs.size()) - 1; }
  Eigen::MatrixXcd coeff(int power) const;
  Eigen::MatrixXcd eval(cplx z) const;
  // max_k |T_k - T_{-k}^*|.
  double hermitian_defect() const;
  double scale() const;  // sum of Frobenius norms
};

// Which variable is swept on the circle; the other is the inner (fibre) variable.
enum class Sweep { Z, W };

// p written as sum_j p_j(x) y^j with x the sweep variable.
BiPoly<cplx> oriented(const BiPoly<cplx>& p, Sweep s);

struct PQ {
  MatTrigPoly P;
  MatTrigPoly Q;
};

PQ pq_matrices(const BiPoly<cplx>& p, Sweep s = Sweep::Z);
MatTrigPoly schur_cohn_form(const BiPoly<cplx>& p, Sweep s = Sweep::Z);

struct UnivariateSC {
  bool zero_free = false;  // no zeros in the closed disk
  double margin = 0;       // smallest eigenvalue / scale
  bool conclusive = true;
};

UnivariateSC univariate_schur_cohn_report(const UniPoly<cplx>& q, const Tolerances& tol = {});
bool univariate_schur_cohn(const UniPoly<cplx>& q, const Tolerances& tol = {});

enum class SweepMode { Strict, Semidefinite };

struct SweepResult {
  bool passed = false;
  double margin = 0;  // smallest eigenvalue found (absolute)
  double scale = 0;
  std::vector<cplx> zero_candidates;
  long evaluations = 0;
  bool certified = false;
};

SweepResult certified_psd_sweep(const MatTrigPoly& T, SweepMode mode, const Tolerances& tol = {});

enum class Verdict { StableClosed, ScatteringStable, Unstable, Degenerate, Unknown };
std::string to_string(Verdict v);

struct StabilityReport {
  Verdict verdict = Verdict::Unknown;
  double min_eig_margin = 0;
  std::vector<std::pair<cplx, cplx>> boundary_zero_candidates;
  long sweep_density = 0;
  bool certified = false;
  std::string detail;
};

StabilityReport stable_closed(const BiPoly<cplx>& p, const Tolerances& tol = {});
// Zero-free on the open bidisk, no common factor with the reflection. The
// verdict DEGENERATE is reported only after the zero-freeness tests passed.
StabilityReport scattering_stable(const BiPoly<cplx>& p, const Tolerances& tol = {}, bool locate_zeros = true);

}  // namespace bidisk
