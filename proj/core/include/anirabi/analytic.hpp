#pragma once

#include <utility>
#include <vector>

#include "anirabi/model.hpp"

namespace anirabi {

enum class LevelKind { ground, doublet_minus, doublet_plus };

// Conserved-parity label: parity ±1 and 0-based ascending index within that
// parity's subspace.  Ground is (-1, 0); doublet n maps to parity -1 for even
// n, +1 for odd n, with index n-1 (minus branch) or n (plus branch).
struct LevelLabel {
  int parity = 0;
  int index = 0;
};
LevelLabel level_label(LevelKind kind, int n);

struct AnalyticLevel {
  LevelKind kind = LevelKind::ground;
  int n = 0;          // doublet number; 0 for the ground level
  double energy = 0.0;
  double lam = 0.0;   // displacement used for this level
  double theta = 0.0; // doublet mixing angle; 0 for the ground level
  bool degenerate = false;
  LevelLabel label;
};

// Mixing angle of a symmetric 2x2 block [[h11, off], [off, h22]], defined by
// the lower-eigenvalue eigenvector (cos t, sin t) with t in (-pi/2, pi/2].
// An exactly degenerate block (h11 == h22, off == 0) reports t = pi/4 with
// the degenerate flag set.
struct MixingAngle {
  double theta = 0.0;
  bool degenerate = false;
};
MixingAngle two_level_mixing(double h11, double h22, double off);

// Ground level: E = omega lam1^2 - 2 g1 lam1 - Omega e^{-2 lam1^2} - 2 g2 lam1 e^{-2 lam1^2}
// at the doublet-1 displacement lam1.
AnalyticLevel ground_energy(const ModelParams& p);

// Doublet n energies from the dressed 2x2 block at lam_n (minus, plus).
std::pair<AnalyticLevel, AnalyticLevel> doublet_energies(const ModelParams& p, int n);

// Mixing angle of doublet n at lam_n.
MixingAngle mixing_angle(const ModelParams& p, int n);

// Bare spin ⊗ Fock expansion of an analytic eigenstate: amplitudes of
// |+z, m> (up) and |-z, m> (down) for m = 0..cutoff.
struct WavefunctionExpansion {
  int cutoff = 0;
  std::vector<double> up, down;

  double amplitude(int spin, int m) const { return spin > 0 ? up[m] : down[m]; }
  double norm_squared() const;
};

// Undisplaces the dressed-frame eigenstate back to the bare basis.  The spin
// rotation to the sigma_x eigenbasis turns exp[-lam sigma_x (a+ - a)] into two
// scalar displacements ∓lam, each expanded with displaced_fock_element.
// Throws CutoffTooSmall if more than 1e-8 of the norm falls beyond cutoff.
// Requires cutoff >= n + 20.
WavefunctionExpansion wavefunction(const ModelParams& p, const AnalyticLevel& level, int cutoff);

// Ground level plus doublets 1..n_doublets, sorted by (parity, index).
std::vector<AnalyticLevel> spectrum(const ModelParams& p, int n_doublets);

// Exact gprime = 0 (Jaynes-Cummings) reference energies.
double jc_ground_energy(const ModelParams& p);
std::pair<double, double> jc_doublet_energies(const ModelParams& p, int n);

}  // namespace anirabi
