#pragma once

#include <cstdint>

namespace bidisk {

// Every tolerance used by the library. One record, echoed into reports.
struct Tolerances {
  double torus = 1e-10;            // | |zeta| - 1 | allowed for torus inputs
  double coeff_zero = 1e-12;       // relative threshold for "coefficient is zero"
  double psd_rel = 1e-11;          // negativity allowed in semidefinite sweeps (times scale)
  double zero_detect_rel = 1e-8;   // eigenvalue flagged as a boundary zero (times scale)
  double strict_margin_rel = 1e-9; // minimal margin for strict certification (times scale)
  int sweep_min_density = 512;     // initial grid points on the circle
  double sweep_min_cell = 1e-6;    // smallest bisected cell (radians)
  long sweep_max_evals = 400000;
  double circle_snap = 1e-7;       // | |lambda| - 1 | for snapping roots to the circle
  double cluster_radius = 0.05;    // initial single-linkage radius for root clusters
  double taylor_rel = 1e-8;        // vanishing threshold for Taylor coefficients
  double common_zero_rel = 1e-5;   // |p~| threshold when pairing resultant roots with fibres
  double interval_resolution = 1e-6;
  double t_max = 1e3;
  double witness_min_t = 1e-4;
  double rank_null_rel = 1e-10;    // singular values below are null
  double rank_live_rel = 1e-6;     // singular values above are live; between => UNKNOWN
  double homog_rel = 1e-9;         // homogeneous part treated as zero
  double bottom_fit = 1e-8;
  double gram_pivot_rel = 1e-10;
  double fr_residual = 1e-8;
  int bauer_max_iter = 20000;
  double bauer_tol = 1e-14;
  double span_rel = 1e-10;
  double realization_tol = 1e-8;
  int l2_levels = 6;
  double l2_growth = 1.5;
  double l2_delta0 = 1e-1;
  double l2_ratio = 0.25;
  int shear_extra = 4;             // K_max = 2 n1 n2 + shear_extra
  int probe_samples = 8;
  std::uint64_t seed = 12345;
};

// Overrides every relative tolerance that scales with a user-facing --tol value.
Tolerances with_tol(Tolerances base, double tol);

}  // namespace bidisk
