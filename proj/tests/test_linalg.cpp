#include "doctest.h"

#include "ukb/linalg.hpp"

using namespace ukb;

namespace {

Matrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST_CASE("hermitian_eig on diagonal matrices") {
  const EigResult r = hermitian_eig(diag2(1.0, 2.0));
  CHECK(r.eigenvalues(0) == doctest::Approx(2.0));
  CHECK(r.eigenvalues(1) == doctest::Approx(1.0));
  // eigenvectors form a permutation of the identity
  CHECK(std::abs(r.eigenvectors(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(r.eigenvectors(0, 1)) == doctest::Approx(1.0));
}

TEST_CASE("hermitian_eig on the zero matrix") {
  const EigResult r = hermitian_eig(Matrix::Zero(3, 3));
  for (int i = 0; i < 3; ++i) {
    CHECK(r.eigenvalues(i) == 0.0);
  }
  CHECK((r.eigenvectors - Matrix::Identity(3, 3)).norm() ==
        doctest::Approx(0.0));
}

TEST_CASE("hermitian_eig reconstruction residual on random Hermitian") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix h = random_hermitian(6, rng);
    const EigResult r = hermitian_eig(h);
    const Matrix recon = r.eigenvectors *
                         r.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
                         r.eigenvectors.adjoint();
    CHECK((recon - h).norm() <= 1e-10 * std::max(1.0, h.norm()));
    CHECK((r.eigenvectors.adjoint() * r.eigenvectors - Matrix::Identity(6, 6))
              .norm() < 1e-10);
    // top |eigenvalue| equals the operator norm
    const double top =
        std::max(std::abs(r.eigenvalues(0)), std::abs(r.eigenvalues(5)));
    CHECK(top == doctest::Approx(operator_norm(h)).epsilon(1e-9));
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eig(m), NotHermitian);
}

TEST_CASE("hermitian_eig is deterministic bit-for-bit") {
  Rng rng(11);
  const Matrix h = random_hermitian(5, rng);
  const EigResult a = hermitian_eig(h);
  const EigResult b = hermitian_eig(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(a.eigenvectors == b.eigenvectors);
}

TEST_CASE("orthonormalize collapses dependent vectors") {
  Vector v1(2), v2(2);
  v1 << 1.0, 0.0;
  v2 << 2.0, 0.0;
  const Subspace s = orthonormalize(std::vector<Vector>{v1, v2});
  CHECK(s.dim() == 1);
  CHECK(std::abs(s.basis(0, 0)) == doctest::Approx(1.0));
}

TEST_CASE("orthonormalize keeps independent vectors") {
  Vector v1(2), v2(2);
  v1 << 1.0, 0.0;
  v2 << 0.0, 1.0;
  CHECK(orthonormalize(std::vector<Vector>{v1, v2}).dim() == 2);
}

TEST_CASE("orthonormalize drops directions below the rank cutoff") {
  // {v, v + 1e-15 w}: the second singular value sits far below the cutoff.
  Rng rng(3);
  const Vector v = random_unit_vector(4, rng);
  const Vector w = random_unit_vector(4, rng);
  const Subspace s = orthonormalize(std::vector<Vector>{v, v + 1e-15 * w});
  CHECK(s.dim() == 1);
}

TEST_CASE("orthonormalize of empty input is the zero subspace") {
  const Subspace s = orthonormalize(std::vector<Vector>{});
  CHECK(s.dim() == 0);
}

TEST_CASE("orthonormalize is idempotent on spans") {
  Rng rng(5);
  std::vector<Vector> vecs;
  for (int i = 0; i < 3; ++i) {
    vecs.push_back(random_unit_vector(5, rng));
  }
  const Subspace s1 = orthonormalize(vecs);
  std::vector<Vector> again;
  for (Eigen::Index k = 0; k < s1.dim(); ++k) {
    again.push_back(s1.basis.col(k));
  }
  const Subspace s2 = orthonormalize(again);
  CHECK(same_span(s1, s2, 1e-10));
}

TEST_CASE("projector of span{e1} in C^2 is E11") {
  Vector e1(2);
  e1 << 1.0, 0.0;
  const Matrix p = projector(orthonormalize(std::vector<Vector>{e1}));
  Matrix expected = Matrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  CHECK((p - expected).norm() == doctest::Approx(0.0));
}

TEST_CASE("null_space of the identity is the zero subspace") {
  CHECK(null_space(Matrix::Identity(3, 3)).dim() == 0);
}

TEST_CASE("projector is Hermitian idempotent with trace = dim") {
  Rng rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vector> vecs;
    for (int i = 0; i < 3; ++i) {
      vecs.push_back(random_unit_vector(6, rng));
    }
    const Subspace s = orthonormalize(vecs);
    const Matrix p = projector(s);
    CHECK((p * p - p).norm() < 1e-10);
    CHECK((p - p.adjoint()).norm() < 1e-10);
    CHECK(p.trace().real() ==
          doctest::Approx(static_cast<double>(s.dim())).epsilon(1e-8));
  }
}

TEST_CASE("trace_inner and multiply contracts") {
  Matrix a = Matrix::Identity(2, 2);
  CHECK(trace_inner(a, a).real() == doctest::Approx(2.0));
  CHECK_THROWS_AS(multiply(Matrix::Zero(2, 3), Matrix::Zero(2, 3)),
                  DimensionMismatch);
  CHECK_THROWS_AS(trace_inner(Matrix::Zero(2, 2), Matrix::Zero(3, 3)),
                  DimensionMismatch);
}

TEST_CASE("intersect and complement behave on coordinate subspaces") {
  Vector e1(3), e2(3), e3(3);
  e1 << 1, 0, 0;
  e2 << 0, 1, 0;
  e3 << 0, 0, 1;
  const Subspace s12 = orthonormalize(std::vector<Vector>{e1, e2});
  const Subspace s23 = orthonormalize(std::vector<Vector>{e2, e3});
  const Subspace inter = intersect(s12, s23);
  CHECK(inter.dim() == 1);
  CHECK(contains(inter, e2, 1e-10));
  const Subspace comp = complement(s12);
  CHECK(comp.dim() == 1);
  CHECK(contains(comp, e3, 1e-10));
}

TEST_CASE("gauge_fix rotates the leading component positive real") {
  Vector v(2);
  v << Complex(0.0, 1.0), Complex(1.0, 0.0);
  const Vector g = gauge_fix(v);
  CHECK(g(0).real() == doctest::Approx(1.0));
  CHECK(std::abs(g(0).imag()) < 1e-14);
}
