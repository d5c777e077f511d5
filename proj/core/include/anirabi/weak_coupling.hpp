#pragma once

#include <vector>

#include "anirabi/analytic.hpp"
#include "anirabi/model.hpp"

namespace anirabi {

// First-order-in-lambda reduction: a Jaynes-Cummings model with shifted
// frequencies plus a constant energy offset,
//   H ≈ (omega + d_omega sigma_z) a+a + (Omega + d_Omega) sigma_z
//       + (g + d_g)(sigma+ a + sigma- a+) + d_E.
struct ModifiedJCParams {
  double lam = 0.0;      // gprime / (omega + 2 Omega)
  double d_omega = 0.0;  // 4 g2 lam   (spin-dependent photon frequency pull)
  double d_Omega = 0.0;  // 2 g2 lam
  double d_g = 0.0;      // gprime (2 Omega - omega) / (omega + 2 Omega)
  double d_E = 0.0;      // -2 g1 lam
};

// Closed-form small-gprime displacement seed.
double lambda_weak(const ModelParams& p);

ModifiedJCParams modified_jc(const ModelParams& p);

// Spectrum of the modified JC model: ground -(Omega + d_Omega) + d_E and the
// 2x2 blocks over {|+z, n-1>, |-z, n>}.  Same parity labels as the full
// analytic spectrum; sorted by (parity, index).
std::vector<AnalyticLevel> modified_jc_spectrum(const ModelParams& p, int n_doublets);

}  // namespace anirabi
