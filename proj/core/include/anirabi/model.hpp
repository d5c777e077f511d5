#pragma once

namespace anirabi {

// Anisotropic Rabi Hamiltonian
//   H = omega a+a + Omega sigma_z + g (sigma+ a + sigma- a+) + gprime (sigma- a + sigma+ a+),
// hbar = 1.  Omega is half the two-level splitting; g couples the rotating
// terms, gprime the counter-rotating ones.  The symmetric/antisymmetric
// combinations g1 = (g+gprime)/2, g2 = (gprime-g)/2 drive the displaced frame.
struct ModelParams {
  double omega;   // cavity frequency, > 0
  double Omega;   // half the qubit splitting, >= 0
  double g;       // rotating coupling, >= 0
  double gprime;  // counter-rotating coupling, >= 0

  ModelParams(double omega_, double Omega_, double g_, double gprime_);

  double g1() const { return 0.5 * (g + gprime); }
  double g2() const { return 0.5 * (gprime - g); }
};

// Displacement amplitude defusing the counter-rotating terms of doublet n,
// i.e. the root of (g1 - lam*omega) sqrt(n) - R_n(lam) = 0 on [0, 1).
struct LambdaSolution {
  int n = 0;
  double lam = 0.0;
  double residual = 0.0;  // equation value at the returned root
};

// Off-diagonal doublet coupling R_n(lam), n >= 1 (Laguerre closed form).
double coeff_R(const ModelParams& p, double lam, int n);

// Diagonal dressing G_n(lam), n >= 0 (Laguerre closed form).
double coeff_G(const ModelParams& p, double lam, int n);

// |residual| bound honored by solve_lambda: 1e-12 * max(1, |g1|).
double lambda_tolerance(const ModelParams& p);

// Root of the displacement equation for doublet n >= 1.  Brackets by scanning
// [0, 1) in steps of 1/256, bisects, and of several roots returns the one
// closest to the weak-coupling seed gprime/(omega + 2 Omega).  For gprime = 0
// the root is exactly 0.  Throws NoRootInUnitInterval when no sign change
// exists (coupling regime beyond the single-displacement ansatz).
LambdaSolution solve_lambda(const ModelParams& p, int n);

}  // namespace anirabi
