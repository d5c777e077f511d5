#include "anirabi/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "anirabi/errors.hpp"

namespace anirabi {

DenseSymmetricMatrix build_hamiltonian(const ModelParams& p, const TruncatedSpace& space) {
  DenseSymmetricMatrix h(space.dim());
  for (int n = 0; n <= space.n_max; ++n) {
    h.set(2 * n, 2 * n, n * p.omega + p.Omega);
    h.set(2 * n + 1, 2 * n + 1, n * p.omega - p.Omega);
  }
  for (int n = 1; n <= space.n_max; ++n) {
    const double rn = std::sqrt(double(n));
    h.set(2 * (n - 1), 2 * n + 1, p.g * rn);       // <+z, n-1 | H | -z, n>
    h.set(2 * (n - 1) + 1, 2 * n, p.gprime * rn);  // <-z, n-1 | H | +z, n>
  }
  return h;
}

DenseSymmetricMatrix build_effective_hamiltonian(const ModelParams& p, double lam, const TruncatedSpace& space) {
  DenseSymmetricMatrix h(space.dim());
  const double shift = p.omega * lam * lam - 2.0 * p.g1() * lam;
  for (int n = 0; n <= space.n_max; ++n) {
    const double gn = coeff_G(p, lam, n);
    h.set(2 * n, 2 * n, n * p.omega + gn + shift);
    h.set(2 * n + 1, 2 * n + 1, n * p.omega - gn + shift);
  }
  for (int n = 1; n <= space.n_max; ++n) {
    const double rn = std::sqrt(double(n));
    const double base = (p.g1() - lam * p.omega) * rn;
    const double r = coeff_R(p, lam, n);
    h.set(2 * (n - 1), 2 * n + 1, base + r);
    h.set(2 * (n - 1) + 1, 2 * n, base - r);
  }
  return h;
}

DenseSymmetricMatrix parity_matrix(const TruncatedSpace& space) {
  DenseSymmetricMatrix m(space.dim());
  for (int i = 0; i < space.dim(); ++i) m.set(i, i, double(TruncatedSpace::parity_of(i)));
  return m;
}

namespace {

std::vector<int> parity_indices(const TruncatedSpace& space, int parity) {
  std::vector<int> idx;
  idx.reserve(space.dim() / 2);
  for (int i = 0; i < space.dim(); ++i) {
    if (TruncatedSpace::parity_of(i) == parity) idx.push_back(i);
  }
  return idx;
}

DenseSymmetricMatrix submatrix(const DenseSymmetricMatrix& a, const std::vector<int>& idx) {
  DenseSymmetricMatrix s(int(idx.size()));
  for (int r = 0; r < int(idx.size()); ++r) {
    for (int c = r; c < int(idx.size()); ++c) s.set(r, c, a(idx[r], idx[c]));
  }
  return s;
}

}  // namespace

ParityEigenvalues parity_eigenvalues(const ModelParams& p, const TruncatedSpace& space) {
  const DenseSymmetricMatrix h = build_hamiltonian(p, space);
  ParityEigenvalues out;
  out.plus = eigenvalues(submatrix(h, parity_indices(space, +1)));
  out.minus = eigenvalues(submatrix(h, parity_indices(space, -1)));
  return out;
}

std::vector<LabeledEnergy> labeled_spectrum(const ModelParams& p, const TruncatedSpace& space, int n_levels) {
  if (n_levels < 1 || n_levels > space.dim()) throw std::invalid_argument("labeled_spectrum: bad n_levels");
  const ParityEigenvalues ev = parity_eigenvalues(p, space);
  std::vector<LabeledEnergy> out;
  out.reserve(n_levels);
  std::size_t ip = 0, im = 0;
  while (int(out.size()) < n_levels) {
    const bool plus_left = ip < ev.plus.size();
    const bool minus_left = im < ev.minus.size();
    if (minus_left && (!plus_left || ev.minus[im] <= ev.plus[ip])) {
      out.push_back({-1, int(im), ev.minus[im]});
      ++im;
    } else {
      out.push_back({+1, int(ip), ev.plus[ip]});
      ++ip;
    }
  }
  return out;
}

GroundState oracle_ground_state(const ModelParams& p, const TruncatedSpace& space) {
  const DenseSymmetricMatrix h = build_hamiltonian(p, space);
  GroundState best;
  bool first = true;
  for (int parity : {-1, +1}) {
    const std::vector<int> idx = parity_indices(space, parity);
    const EigenDecomposition eig = eigensolve(submatrix(h, idx));
    if (first || eig.values[0] < best.energy) {
      best.energy = eig.values[0];
      best.parity = parity;
      best.amplitudes.assign(space.dim(), 0.0);
      for (int r = 0; r < int(idx.size()); ++r) best.amplitudes[idx[r]] = eig.vector(r, 0);
      first = false;
    }
  }
  return best;
}

double expectation(std::span<const double> state, DiagonalObservable which) {
  if (state.size() % 2 != 0 || state.empty()) throw std::invalid_argument("expectation: bad state size");
  double norm2 = 0.0;
  for (double v : state) norm2 += v * v;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10) {
    throw UnnormalizedState("expectation: state vector is not unit-normalized");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const int n = TruncatedSpace::fock_of(int(i));
    const int s = TruncatedSpace::spin_of(int(i));
    double o = 0.0;
    switch (which) {
      case DiagonalObservable::photon_number: o = double(n); break;
      case DiagonalObservable::sigma_z: o = double(s); break;
      case DiagonalObservable::polariton_number: o = n + 0.5 * s + 0.5; break;
      case DiagonalObservable::polariton_number_squared: {
        const double nn = n + 0.5 * s + 0.5;
        o = nn * nn;
        break;
      }
    }
    acc += state[i] * state[i] * o;
  }
  return acc;
}

}  // namespace anirabi
