#include "doctest.h"

#include "ukb/states.hpp"

using namespace ukb;

namespace {

Matrix unit_matrix(Eigen::Index n, Eigen::Index r, Eigen::Index c) {
  Matrix m = Matrix::Zero(n, n);
  m(r, c) = 1.0;
  return m;
}

AlgebraPtr full_algebra(Eigen::Index n) {
  std::vector<Matrix> gens;
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      gens.push_back(unit_matrix(n, r, c));
    }
  }
  return generate_algebra(n, gens);
}

AlgebraPtr diagonal_c2() {
  return generate_algebra(2, {unit_matrix(2, 0, 0), unit_matrix(2, 1, 1)});
}

AlgebraPtr m2_plus_m3() {
  std::vector<Matrix> gens;
  for (Eigen::Index r = 0; r < 2; ++r) {
    for (Eigen::Index c = 0; c < 2; ++c) {
      gens.push_back(unit_matrix(5, r, c));
    }
  }
  for (Eigen::Index r = 2; r < 5; ++r) {
    for (Eigen::Index c = 2; c < 5; ++c) {
      gens.push_back(unit_matrix(5, r, c));
    }
  }
  return generate_algebra(5, gens);
}

// Functional values of a vector state at an ambient unit vector.
Vector vector_state_values(const AlgebraPtr& a, const Vector& x) {
  Vector values(a->dim());
  for (Eigen::Index j = 0; j < a->dim(); ++j) {
    values(j) = (x.adjoint() * a->basis[j] * x).value();
  }
  return values;
}

Vector density_state_values(const AlgebraPtr& a, const Matrix& density) {
  Vector values(a->dim());
  for (Eigen::Index j = 0; j < a->dim(); ++j) {
    values(j) = (density * a->basis[j]).trace();
  }
  return values;
}

}  // namespace

TEST_CASE("pure and mixed states on the diagonal algebra C^2") {
  const AlgebraPtr a = diagonal_c2();
  Vector e1(2);
  e1 << 1.0, 0.0;
  const State pure = make_state(a, vector_state_values(a, e1));
  CHECK(pure.is_pure);

  Matrix half = Matrix::Identity(2, 2) * 0.5;
  const State mixed = make_state(a, density_state_values(a, half));
  CHECK_FALSE(mixed.is_pure);
}

TEST_CASE("mixed state on M_2 from diag(0.7, 0.3)") {
  const AlgebraPtr a = full_algebra(2);
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.7;
  d(1, 1) = 0.3;
  const State s = make_state(a, density_state_values(a, d));
  CHECK_FALSE(s.is_pure);
  const EigResult eig = hermitian_eig(s.density_per_block[0]);
  CHECK(eig.eigenvalues(0) == doctest::Approx(0.7));
  CHECK(eig.eigenvalues(1) == doctest::Approx(0.3));
}

TEST_CASE("make_state rejects non-states") {
  const AlgebraPtr a = full_algebra(2);
  Matrix not_positive = Matrix::Zero(2, 2);
  not_positive(0, 0) = 1.5;
  not_positive(1, 1) = -0.5;
  CHECK_THROWS_AS(make_state(a, density_state_values(a, not_positive)),
                  NotPositive);
  Matrix unnormalized = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(make_state(a, density_state_values(a, unnormalized)),
                  NotNormalized);
}

TEST_CASE("GNS of a vector state on M_2") {
  const AlgebraPtr a = full_algebra(2);
  Vector e1(2);
  e1 << 1.0, 0.0;
  const State s = make_state(a, vector_state_values(a, e1));
  const GnsTriple g = gns(s);
  CHECK(g.hilbert_dim == 2);
  CHECK(g.cyclic_vector.norm() == doctest::Approx(1.0));
}

TEST_CASE("GNS dimensions on C^2 states") {
  const AlgebraPtr a = diagonal_c2();
  Vector e1(2), both(2);
  e1 << 1.0, 0.0;
  const State pure = make_state(a, vector_state_values(a, e1));
  CHECK(gns(pure).hilbert_dim == 1);

  Matrix half = Matrix::Identity(2, 2) * 0.5;
  const State mixed = make_state(a, density_state_values(a, half));
  const GnsTriple g = gns(mixed);
  CHECK(g.hilbert_dim == 2);  // N_omega = 0
}

TEST_CASE("GNS reconstruction and homomorphism properties") {
  Rng rng(17);
  for (const AlgebraPtr& a : {full_algebra(2), diagonal_c2(), m2_plus_m3()}) {
    for (int trial = 0; trial < 4; ++trial) {
      const State s = trial % 2 == 0 ? random_pure_state(a, rng)
                                     : random_mixed_state(a, rng);
      const GnsTriple g = gns(s);
      // omega(a) = <x | rep(a) x>
      for (Eigen::Index j = 0; j < a->dim(); ++j) {
        const Complex via_gns =
            (g.cyclic_vector.adjoint() *
             g.rep[static_cast<std::size_t>(j)] * g.cyclic_vector)
                .value();
        CHECK(std::abs(via_gns - s.values(j)) < 1e-9);
      }
      // rep is multiplicative on basis pairs
      for (Eigen::Index j = 0; j < std::min<Eigen::Index>(a->dim(), 4); ++j) {
        for (Eigen::Index k = 0; k < std::min<Eigen::Index>(a->dim(), 4);
             ++k) {
          const Matrix lhs = g.rep[static_cast<std::size_t>(j)] *
                             g.rep[static_cast<std::size_t>(k)];
          const Matrix rhs =
              g.represent(s, a->basis[j] * a->basis[k]);
          CHECK((lhs - rhs).norm() < 1e-8);
        }
      }
      // rep respects the involution
      for (Eigen::Index j = 0; j < std::min<Eigen::Index>(a->dim(), 4); ++j) {
        const Matrix lhs =
            g.rep[static_cast<std::size_t>(j)].adjoint();
        const Matrix rhs = g.represent(s, a->basis[j].adjoint());
        CHECK((lhs - rhs).norm() < 1e-8);
      }
      // cyclicity: Lambda(A) spans the GNS space
      Matrix spanm(g.hilbert_dim, a->dim());
      for (Eigen::Index j = 0; j < a->dim(); ++j) {
        spanm.col(j) = g.lambda(s, a->basis[j]);
      }
      CHECK(orthonormalize(spanm).dim() == g.hilbert_dim);
    }
  }
}

TEST_CASE("purity via GNS irreducibility agrees with the density rank") {
  const AlgebraPtr a = full_algebra(2);
  Rng rng(23);
  const State pure = random_pure_state(a, rng);
  CHECK(is_pure_via_gns(pure));
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = 0.6;
  d(1, 1) = 0.4;
  CHECK_FALSE(is_pure_via_gns(make_state(a, density_state_values(a, d))));
}

TEST_CASE("cross-block mixture has commutant dimension two") {
  const AlgebraPtr a = m2_plus_m3();
  Rng rng(29);
  const State s1 = random_pure_state_on_fiber(a, 0, rng);
  const State s2 = random_pure_state_on_fiber(a, 1, rng);
  const State mix = make_state(
      a, (s1.values / 3.0 + 2.0 * s2.values / 3.0).eval());
  CHECK_FALSE(mix.is_pure);
  CHECK_FALSE(is_pure_via_gns(mix));
}

TEST_CASE("purity equivalence over a randomized battery") {
  Rng rng(31);
  for (const AlgebraPtr& a : {full_algebra(3), m2_plus_m3()}) {
    for (int trial = 0; trial < 8; ++trial) {
      const State s = trial % 2 == 0 ? random_pure_state(a, rng)
                                     : random_mixed_state(a, rng);
      CHECK(is_pure_via_gns(s) == s.is_pure);
    }
  }
}

TEST_CASE("pure GNS dimension equals the fiber dimension") {
  const AlgebraPtr a = m2_plus_m3();
  Rng rng(37);
  for (int fiber = 0; fiber < 2; ++fiber) {
    const State s = random_pure_state_on_fiber(a, fiber, rng);
    CHECK(gns(s).hilbert_dim == a->blocks[static_cast<std::size_t>(fiber)].n);
  }
}

TEST_CASE("fiber and canonical ray of pure states") {
  const AlgebraPtr a = m2_plus_m3();
  Vector v(3);
  v << 1.0, 2.0, Complex(0.0, 1.0);
  v.normalize();
  ProjectivePoint p;
  p.fiber = 1;
  p.ray = gauge_fix(v);
  const State s = state_from_ray(a, p);
  CHECK(fiber_of(s) == 1);
  const ProjectivePoint q = canonical_ray(s);
  CHECK(q.fiber == 1);
  CHECK((q.ray - p.ray).norm() < 1e-9);
}

TEST_CASE("phase gauge on the canonical ray") {
  const AlgebraPtr a = full_algebra(2);
  Vector u(2);
  u << Complex(1.0, 0.0), Complex(0.0, 1.0);
  u /= std::sqrt(2.0);
  ProjectivePoint p;
  p.fiber = 0;
  // feed an arbitrary-phase representative
  p.ray = gauge_fix((Complex(0.3, -0.8) * u).normalized());
  const State s = state_from_ray(a, p);
  const ProjectivePoint q = canonical_ray(s);
  CHECK(q.ray(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
  CHECK(std::abs(q.ray(0).imag()) < 1e-10);
  CHECK(q.ray(1).real() == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(q.ray(1).imag() == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("fiber_of rejects mixed states") {
  const AlgebraPtr a = diagonal_c2();
  Matrix half = Matrix::Identity(2, 2) * 0.5;
  const State mixed = make_state(a, density_state_values(a, half));
  CHECK_THROWS_AS(fiber_of(mixed), NotPure);
}

TEST_CASE("state_from_ray on C^2 basis rays") {
  const AlgebraPtr a = diagonal_c2();
  ProjectivePoint p;
  p.fiber = 1;
  p.ray = Vector::Ones(1);
  const State s = state_from_ray(a, p);
  CHECK(fiber_of(s) == 1);
  CHECK(std::abs(s(unit_matrix(2, 1, 1)) - Complex(1.0, 0.0)) < 1e-10);
  CHECK(std::abs(s(unit_matrix(2, 0, 0))) < 1e-10);
}

TEST_CASE("state_from_ray reproduces direct inner products on M_2") {
  const AlgebraPtr a = full_algebra(2);
  Vector v(2);
  v << 1.0, 1.0;
  v /= std::sqrt(2.0);
  ProjectivePoint p{0, v};
  const State s = state_from_ray(a, p);
  CHECK(std::abs(s(unit_matrix(2, 0, 1)) - Complex(0.5, 0.0)) < 1e-10);
  CHECK(std::abs(s(unit_matrix(2, 0, 0)) - Complex(0.5, 0.0)) < 1e-10);
}

TEST_CASE("round trip ray -> state -> ray on random rays") {
  const AlgebraPtr a = m2_plus_m3();
  Rng rng(41);
  std::uniform_int_distribution<int> pick(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const int fiber = pick(rng);
    ProjectivePoint p;
    p.fiber = fiber;
    p.ray = gauge_fix(
        random_unit_vector(a->blocks[static_cast<std::size_t>(fiber)].n, rng),
        a->tol.tol_eq);
    const ProjectivePoint q = canonical_ray(state_from_ray(a, p));
    CHECK(q.fiber == p.fiber);
    CHECK((q.ray - p.ray).norm() < 1e-9);
  }
}
