#include "anirabi/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "anirabi/errors.hpp"

namespace anirabi {

DenseSymmetricMatrix::DenseSymmetricMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("DenseSymmetricMatrix: dim must be >= 1");
  a_.assign(std::size_t(dim) * dim, 0.0);
}

double DenseSymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

std::vector<double> DenseSymmetricMatrix::apply(const std::vector<double>& x) const {
  if (int(x.size()) != dim_) throw std::invalid_argument("apply: size mismatch");
  std::vector<double> y(dim_, 0.0);
  for (int i = 0; i < dim_; ++i) {
    double s = 0.0;
    const double* row = a_.data() + std::size_t(i) * dim_;
    for (int j = 0; j < dim_; ++j) s += row[j] * x[j];
    y[i] = s;
  }
  return y;
}

namespace {

// Householder reduction of the symmetric matrix held in z (row-major, n x n)
// to tridiagonal form d (diagonal) / e (subdiagonal, e[0] unused).  When
// accumulate is set, z is replaced by the orthogonal similarity Q so that
// Q^T A Q = T; otherwise z is scratch.
void tridiagonalize(std::vector<double>& z, int n, std::vector<double>& d, std::vector<double>& e, bool accumulate) {
  auto at = [&](int i, int j) -> double& { return z[std::size_t(i) * n + j]; };

  for (int i = n - 1; i >= 1; --i) {
    const int l = i - 1;
    double h = 0.0;
    double scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::abs(at(i, k));
      if (scale == 0.0) {
        e[i] = at(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          if (accumulate) at(j, i) = at(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (int k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          e[j] = g / h;
          f += e[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) e[j] -= hh * at(i, j);
        for (int j = 0; j <= l; ++j) {
          f = at(i, j);
          g = e[j];
          for (int k = 0; k <= j; ++k) at(j, k) -= f * e[k] + g * at(i, k);
        }
      }
    } else {
      e[i] = at(i, l);
    }
    d[i] = h;
  }

  d[0] = 0.0;
  e[0] = 0.0;
  if (accumulate) {
    // Build Q by applying the stored Householder vectors to the identity.
    for (int i = 0; i < n; ++i) {
      const int l = i - 1;
      if (d[i] != 0.0) {
        for (int j = 0; j <= l; ++j) {
          double g = 0.0;
          for (int k = 0; k <= l; ++k) g += at(i, k) * at(k, j);
          for (int k = 0; k <= l; ++k) at(k, j) -= g * at(k, i);
        }
      }
      d[i] = at(i, i);
      at(i, i) = 1.0;
      for (int j = 0; j <= l; ++j) {
        at(j, i) = 0.0;
        at(i, j) = 0.0;
      }
    }
  } else {
    for (int i = 0; i < n; ++i) d[i] = at(i, i);
    // The loop above overwrote nothing on the diagonal for skipped rows; for
    // transformed rows the diagonal entry is still the reduced one.
  }
}

// Implicit-shift QL on the tridiagonal (d, e).  If z is non-null the
// rotations are accumulated into it (columns become eigenvectors).  Budget of
// 50 shifts per eigenvalue; blowing it raises NoConvergence with the
// off-diagonal norm still outstanding.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n, std::vector<double>* z) {
  constexpr int kMaxIter = 50;
  const double eps = std::numeric_limits<double>::epsilon();

  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  double f = 0.0;
  double tst1 = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    int m = l;
    while (true) {
      m = l;
      while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;
      if (m == l) break;
      if (iter++ == kMaxIter) {
        double rem = 0.0;
        for (int i = 0; i + 1 < n; ++i) rem += e[i] * e[i];
        throw NoConvergence("eigensolve: QL sweep budget exhausted", std::sqrt(rem));
      }

      double g = d[l];
      double p = (d[l + 1] - g) / (2.0 * e[l]);
      double r = std::hypot(p, 1.0);
      const double shift = e[l] / (p + (p >= 0.0 ? r : -r));
      d[l] = shift;
      d[l + 1] = e[l] * (p + (p >= 0.0 ? r : -r));
      const double dl1 = d[l + 1];
      double h = g - d[l];
      for (int i = l + 2; i < n; ++i) d[i] -= h;
      f += h;

      p = d[m];
      double c = 1.0, c2 = 1.0, c3 = 1.0;
      const double el1 = e[l + 1];
      double s = 0.0, s2 = 0.0;
      for (int i = m - 1; i >= l; --i) {
        c3 = c2;
        c2 = c;
        s2 = s;
        g = c * e[i];
        h = c * p;
        r = std::hypot(p, e[i]);
        e[i + 1] = s * r;
        s = e[i] / r;
        c = p / r;
        p = c * d[i] - s * g;
        d[i + 1] = h + s * (c * g + s * d[i]);
        if (z) {
          for (int k = 0; k < n; ++k) {
            const double zk = (*z)[std::size_t(k) * n + i + 1];
            (*z)[std::size_t(k) * n + i + 1] = s * (*z)[std::size_t(k) * n + i] + c * zk;
            (*z)[std::size_t(k) * n + i] = c * (*z)[std::size_t(k) * n + i] - s * zk;
          }
        }
      }
      p = -s * s2 * c3 * el1 * e[l] / dl1;
      e[l] = s * p;
      d[l] = c * p;
      if (std::abs(e[l]) <= eps * tst1) break;
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

void sort_ascending(std::vector<double>& d, int n, std::vector<double>* z) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
  std::vector<double> dn(n);
  for (int k = 0; k < n; ++k) dn[k] = d[order[k]];
  d = std::move(dn);
  if (z) {
    std::vector<double> zn(z->size());
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) zn[std::size_t(i) * n + k] = (*z)[std::size_t(i) * n + order[k]];
    }
    *z = std::move(zn);
  }
}

void check_dim(const DenseSymmetricMatrix& A) {
  if (A.dim() > 1024) throw std::invalid_argument("eigensolve: dense path limited to dim <= 1024");
}

}  // namespace

EigenDecomposition eigensolve(const DenseSymmetricMatrix& A) {
  check_dim(A);
  const int n = A.dim();
  EigenDecomposition out;
  out.dim = n;
  out.vectors = A.data();
  out.values.assign(n, 0.0);
  std::vector<double> e(n, 0.0);

  if (n == 1) {
    out.values[0] = A(0, 0);
    out.vectors[0] = 1.0;
    out.max_residual = 0.0;
    return out;
  }

  tridiagonalize(out.vectors, n, out.values, e, /*accumulate=*/true);
  ql_implicit(out.values, e, n, &out.vectors);
  sort_ascending(out.values, n, &out.vectors);

  // Residual self-certification: max_k ||A v_k - lambda_k v_k||_2.
  double worst = 0.0;
  std::vector<double> v(n), av(n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) v[i] = out.vector(i, k);
    av = A.apply(v);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r = av[i] - out.values[k] * v[i];
      r2 += r * r;
    }
    worst = std::max(worst, std::sqrt(r2));
  }
  out.max_residual = worst;
  return out;
}

std::vector<double> eigenvalues(const DenseSymmetricMatrix& A) {
  check_dim(A);
  const int n = A.dim();
  if (n == 1) return {A(0, 0)};
  std::vector<double> z = A.data();
  std::vector<double> d(n, 0.0), e(n, 0.0);
  tridiagonalize(z, n, d, e, /*accumulate=*/false);
  ql_implicit(d, e, n, nullptr);
  sort_ascending(d, n, nullptr);
  return d;
}

}  // namespace anirabi
