#pragma once

#include <cstddef>
#include <vector>

namespace anirabi {

// Dense real symmetric matrix, row-major.  set() writes both triangles, so
// entries (i,j) and (j,i) are bitwise equal by construction.
class DenseSymmetricMatrix {
 public:
  explicit DenseSymmetricMatrix(int dim);

  int dim() const { return dim_; }
  double operator()(int i, int j) const { return a_[std::size_t(i) * dim_ + j]; }
  void set(int i, int j, double v) {
    a_[std::size_t(i) * dim_ + j] = v;
    a_[std::size_t(j) * dim_ + i] = v;
  }
  void add(int i, int j, double v) { set(i, j, (*this)(i, j) + v); }

  double frobenius_norm() const;

  // y = A x
  std::vector<double> apply(const std::vector<double>& x) const;

  const std::vector<double>& data() const { return a_; }

 private:
  int dim_;
  std::vector<double> a_;
};

// Full spectral decomposition.  values are ascending; column k of vectors
// (entry [i*dim + k]) is the unit eigenvector of values[k].  max_residual is
// the self-certification max_k ||A v_k - values[k] v_k||_2 measured after the
// solve.
struct EigenDecomposition {
  int dim = 0;
  std::vector<double> values;
  std::vector<double> vectors;
  double max_residual = 0.0;

  double vector(int i, int k) const { return vectors[std::size_t(i) * dim + k]; }
};

// Householder tridiagonalization + implicit-shift QL, written in-house so the
// oracle has no numerical dependency.  dim <= 1024.  Throws NoConvergence if
// any eigenvalue fails to settle within the sweep budget.
EigenDecomposition eigensolve(const DenseSymmetricMatrix& A);

// Eigenvalues only (no accumulation, no residual) — same reduction and QL
// core, used by sweeps that never touch the vectors.  Ascending.
std::vector<double> eigenvalues(const DenseSymmetricMatrix& A);

}  // namespace anirabi
