#pragma once

#include <span>
#include <vector>

#include "anirabi/linalg.hpp"
#include "anirabi/model.hpp"

namespace anirabi {

// Spin ⊗ Fock product space truncated at n_max photons.  Basis index 2n is
// |+z, n>, index 2n+1 is |-z, n>, so dim = 2 (n_max + 1).
struct TruncatedSpace {
  int n_max = 120;

  int dim() const { return 2 * (n_max + 1); }
  static int fock_of(int index) { return index / 2; }
  static int spin_of(int index) { return (index % 2 == 0) ? +1 : -1; }
  static int index_of(int spin, int n) { return 2 * n + (spin > 0 ? 0 : 1); }
  // Eigenvalue of sigma_z exp(i pi a+a) on basis state `index`.
  static int parity_of(int index) {
    const int sgn = (fock_of(index) % 2 == 0) ? 1 : -1;
    return spin_of(index) * sgn;
  }
};

// Full anisotropic Rabi Hamiltonian on the truncated space (real symmetric).
DenseSymmetricMatrix build_hamiltonian(const ModelParams& p, const TruncatedSpace& space);

// Displaced-frame Hamiltonian with the Laguerre-dressed coefficients: diagonal
// omega n ± G_n + omega lam^2 - 2 g1 lam, rotating off-diagonal
// (g1 - lam omega) sqrt(n) + R_n and counter-rotating (g1 - lam omega) sqrt(n) - R_n.
DenseSymmetricMatrix build_effective_hamiltonian(const ModelParams& p, double lam, const TruncatedSpace& space);

// Parity operator sigma_z exp(i pi a+a): diagonal, entries ±1.
DenseSymmetricMatrix parity_matrix(const TruncatedSpace& space);

// Energy labeled by conserved parity and by ascending position within that
// parity's block.
struct LabeledEnergy {
  int parity = 0;  // ±1
  int index = 0;   // 0-based ascending within the parity block
  double energy = 0.0;
};

// Eigenvalues of each parity block, ascending.  The blocks decouple exactly
// (the cross-parity entries of the Hamiltonian are identically zero).
struct ParityEigenvalues {
  std::vector<double> plus;
  std::vector<double> minus;
};
ParityEigenvalues parity_eigenvalues(const ModelParams& p, const TruncatedSpace& space);

// The n_levels lowest eigenvalues of the full Hamiltonian, each tagged with
// its parity label.  Ties across blocks resolve minus-parity first.
std::vector<LabeledEnergy> labeled_spectrum(const ModelParams& p, const TruncatedSpace& space, int n_levels);

// Lowest eigenstate over both parity blocks, as full-space amplitudes.
struct GroundState {
  double energy = 0.0;
  int parity = 0;
  std::vector<double> amplitudes;  // size = space.dim()
};
GroundState oracle_ground_state(const ModelParams& p, const TruncatedSpace& space);

enum class DiagonalObservable {
  photon_number,              // a+a
  sigma_z,                    // sigma_z
  polariton_number,           // N = a+a + sigma_z/2 + 1/2
  polariton_number_squared,   // N^2
};

// Expectation of a diagonal observable on a unit state vector in this basis.
// Throws UnnormalizedState if | ||v|| - 1 | > 1e-10.
double expectation(std::span<const double> state, DiagonalObservable which);

}  // namespace anirabi
