#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bidisk/bipoly.hpp"
#include "bidisk/config.hpp"
#include "bidisk/intersect.hpp"
#include "bidisk/stability.hpp"

namespace bidisk {

enum class Tri { True, False, Unknown };
std::string to_string(Tri t);

struct PerturbationSpace {
  Bidegree n;
  std::vector<BiPoly<cplx>> basis;
  int real_dimension = 0;
};

// Real basis of {v : v = v~ at bidegree n, v(0) = 0}.
PerturbationSpace perturbation_basis(Bidegree n);

struct Interval {
  double lo = 0;
  double hi = 0;
  bool lo_clipped = false;
  bool hi_clipped = false;
};

// p + t v passes the zero-freeness tests (verdict other than UNSTABLE).
bool admissible(const BiPoly<cplx>& p, const BiPoly<cplx>& v, double t, const Tolerances& tol = {});
Interval admissible_interval(const BiPoly<cplx>& p, const BiPoly<cplx>& v, const Tolerances& tol = {});

struct IrreducibilityResult {
  Tri verdict = Tri::Unknown;
  int nullity = -1;  // dimension of the Ruppert solution space (number of distinct factors)
  double gap = 0;    // ratio of the last live to the first null singular value
  std::string reason;
};

IrreducibilityResult irreducible(const BiPoly<cplx>& q, const Tolerances& tol = {});
IrreducibilityResult irreducible(const BiPoly<GaussRat>& q, const Tolerances& tol = {});

bool vanishing_order_check(const BiPoly<cplx>& p, const BiPoly<cplx>& v, std::pair<cplx, cplx> zeta,
                           const Tolerances& tol = {});

struct BottomTerm {
  enum Kind { Consistent, Inconsistent, Vacuous } kind = Vacuous;
  double r = 0;
  cplx mu_squared;
};
std::string to_string(BottomTerm::Kind k);

BottomTerm bottom_term_check(const BiPoly<cplx>& p, const BiPoly<cplx>& v, std::pair<cplx, cplx> zeta,
                             const Tolerances& tol = {});

// Real-linear subspace of perturbation coordinates passing the vanishing-order
// and bottom-term conditions at every boundary zero; rows in reduced echelon form.
struct FeasibleSpace {
  PerturbationSpace space;
  std::vector<std::pair<cplx, cplx>> boundary_zeros;
  std::vector<std::vector<double>> rows;
};
FeasibleSpace feasible_directions(const BiPoly<cplx>& p, const Tolerances& tol = {});

BiPoly<cplx> combine(const PerturbationSpace& s, const std::vector<double>& coords);

struct FaceDirection {
  BiPoly<cplx> v;
  std::vector<double> coords;
  Interval interval;
};

struct FaceProbeResult {
  std::vector<FaceDirection> directions;
  int feasible_dimension = 0;
  int rank = 0;
};

// max_directions > 0 stops after that many admissible directions.
FaceProbeResult face_probe(const BiPoly<cplx>& p, int samples, const Tolerances& tol = {}, int max_directions = 0);

// f = lambda f_- + (1 - lambda) f_+ with f_t built from q_t = p + t v.
struct Decomposition {
  double lambda = 0;
  double t_minus = 0;
  double t_plus = 0;
  BiPoly<cplx> q_minus;
  BiPoly<cplx> q_plus;
};
Decomposition decompose(const BiPoly<cplx>& p, const BiPoly<cplx>& v, const Interval& iv);

enum class Extremality { Extreme, NotExtreme, Unknown };
std::string to_string(Extremality e);

struct ExtremalityCertificate {
  Extremality verdict = Extremality::Unknown;
  SaturationCertificate saturation;
  IrreducibilityResult irreducible;
  std::optional<BiPoly<cplx>> witness_v;
  std::optional<Interval> witness_interval;
  std::optional<Decomposition> decomposition;
  std::string detail;
};

ExtremalityCertificate certify_extreme(const BiPoly<cplx>& p, const Tolerances& tol = {});

// Herglotz-type value f_t(z, w) = (q + q~)/(q - q~) for q = p + t v.
cplx prp_value(const BiPoly<cplx>& q, cplx z, cplx w);

struct Classification11 {
  bool extreme = false;
  bool saturated = false;
  bool reducible = false;
  cplx mu;          // p(0) / |p(0)|
  double a = 0;     // |coefficient of z| / |p(0)|
  double b = 0;     // |coefficient of w| / |p(0)|
  cplx sigma1 = 1;  // p / |p(0)| = mu (1 - a sigma1 z - b sigma2 w)
  cplx sigma2 = 1;
  cplx mu_effective;  // constant in front of 1 - a z - b w after rotating the variables
  // Reducible case: f = b (1 + sigma1 z)/(1 - sigma1 z) + a (1 + sigma2 w)/(1 - sigma2 w).
  bool mobius_split = false;
  std::optional<Decomposition> decomposition;  // unsaturated case
  cplx nu;  // f_nu = (conj(nu) p + nu p~)/(conj(nu) p - nu p~) is not extreme
};

Classification11 classify_11(const BiPoly<cplx>& p, const Tolerances& tol = {});
cplx mobius_value(const Classification11& c, cplx z, cplx w);

}  // namespace bidisk
