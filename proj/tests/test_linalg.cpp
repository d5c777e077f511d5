#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "anirabi/linalg.hpp"
#include "doctest.h"

using anirabi::DenseSymmetricMatrix;
using anirabi::EigenDecomposition;

namespace {

DenseSymmetricMatrix random_symmetric(int dim, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DenseSymmetricMatrix a(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) a.set(i, j, dist(rng));
  }
  return a;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("storage writes both triangles") {
    DenseSymmetricMatrix a(3);
    a.set(0, 2, 1.5);
    CHECK(a(0, 2) == 1.5);
    CHECK(a(2, 0) == 1.5);
    a.add(2, 0, 0.25);
    CHECK(a(0, 2) == 1.75);
    const std::vector<double> y = a.apply({1.0, 0.0, 2.0});
    CHECK(y[0] == 3.5);
    CHECK(y[1] == 0.0);
    CHECK(y[2] == 1.75);
    CHECK(a.frobenius_norm() == doctest::Approx(std::sqrt(2.0 * 1.75 * 1.75)).epsilon(1e-15));
  }

  TEST_CASE("identity and diagonal matrices") {
    DenseSymmetricMatrix eye(4);
    for (int i = 0; i < 4; ++i) eye.set(i, i, 1.0);
    const EigenDecomposition d = anirabi::eigensolve(eye);
    for (int k = 0; k < 4; ++k) CHECK(d.values[k] == doctest::Approx(1.0).epsilon(1e-14));

    DenseSymmetricMatrix diag(3);
    diag.set(0, 0, 3.0);
    diag.set(1, 1, -1.0);
    diag.set(2, 2, 0.5);
    const EigenDecomposition e = anirabi::eigensolve(diag);
    CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(e.values[2] == doctest::Approx(3.0).epsilon(1e-14));
  }

  TEST_CASE("2x2 closed form") {
    // [[2,1],[1,2]] has eigenvalues 1 and 3 with (1,-1)/sqrt2, (1,1)/sqrt2.
    DenseSymmetricMatrix a(2);
    a.set(0, 0, 2.0);
    a.set(1, 1, 2.0);
    a.set(0, 1, 1.0);
    const EigenDecomposition d = anirabi::eigensolve(a);
    CHECK(d.values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(d.values[1] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(std::abs(d.vector(0, 0)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-13));
    CHECK(d.vector(0, 0) * d.vector(1, 0) < 0.0);  // antisymmetric combination
    CHECK(d.vector(0, 1) * d.vector(1, 1) > 0.0);  // symmetric combination

    // [[2,1],[1,3]]: eigenvalues (5 -+ sqrt5)/2.
    DenseSymmetricMatrix b(2);
    b.set(0, 0, 2.0);
    b.set(1, 1, 3.0);
    b.set(0, 1, 1.0);
    const EigenDecomposition e = anirabi::eigensolve(b);
    CHECK(e.values[0] == doctest::Approx(0.5 * (5.0 - std::sqrt(5.0))).epsilon(1e-14));
    CHECK(e.values[1] == doctest::Approx(0.5 * (5.0 + std::sqrt(5.0))).epsilon(1e-14));
  }

  TEST_CASE("random matrix: residual, orthonormality, trace") {
    const int dim = 50;
    DenseSymmetricMatrix a = random_symmetric(dim, 20260817u);
    const EigenDecomposition d = anirabi::eigensolve(a);

    CHECK(d.max_residual <= 1e-10 * a.frobenius_norm());
    CHECK(std::is_sorted(d.values.begin(), d.values.end()));

    // Orthonormal columns.
    for (int k = 0; k < dim; ++k) {
      for (int l = k; l < dim; ++l) {
        double dot = 0.0;
        for (int i = 0; i < dim; ++i) dot += d.vector(i, k) * d.vector(i, l);
        CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) <= 1e-10);
      }
    }

    // Eigenvalue sum equals the trace.
    double trace = 0.0, sum = 0.0;
    for (int i = 0; i < dim; ++i) trace += a(i, i);
    for (double v : d.values) sum += v;
    CHECK(std::abs(sum - trace) <= 1e-10 * std::max(1.0, std::abs(trace)));

    // Explicit residual recomputation (not trusting the self-certification).
    for (int k = 0; k < dim; ++k) {
      std::vector<double> v(dim);
      for (int i = 0; i < dim; ++i) v[i] = d.vector(i, k);
      const std::vector<double> av = a.apply(v);
      double r2 = 0.0;
      for (int i = 0; i < dim; ++i) {
        const double r = av[i] - d.values[k] * v[i];
        r2 += r * r;
      }
      CHECK(std::sqrt(r2) <= 1e-10 * a.frobenius_norm());
    }
  }

  TEST_CASE("values-only path agrees with the full solve") {
    DenseSymmetricMatrix a = random_symmetric(80, 7u);
    const EigenDecomposition d = anirabi::eigensolve(a);
    const std::vector<double> v = anirabi::eigenvalues(a);
    REQUIRE(v.size() == d.values.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
      CHECK(std::abs(v[k] - d.values[k]) <= 1e-11 * a.frobenius_norm());
    }
  }

  TEST_CASE("spectrum is invariant under off-diagonal sign flips") {
    // Conjugation by diag(+-1) flips off-diagonal signs but not eigenvalues.
    const int dim = 12;
    DenseSymmetricMatrix a = random_symmetric(dim, 99u);
    DenseSymmetricMatrix b(dim);
    std::mt19937 rng(5u);
    std::vector<double> s(dim);
    for (double& x : s) x = (rng() & 1u) ? 1.0 : -1.0;
    for (int i = 0; i < dim; ++i) {
      for (int j = i; j < dim; ++j) b.set(i, j, s[i] * s[j] * a(i, j));
    }
    const std::vector<double> va = anirabi::eigenvalues(a);
    const std::vector<double> vb = anirabi::eigenvalues(b);
    for (int k = 0; k < dim; ++k) CHECK(std::abs(va[k] - vb[k]) <= 1e-12);
  }

  TEST_CASE("dimension guard") {
    CHECK_THROWS_AS(anirabi::eigensolve(DenseSymmetricMatrix(1025)), std::invalid_argument);
    CHECK_THROWS_AS(DenseSymmetricMatrix(0), std::invalid_argument);
  }
}
