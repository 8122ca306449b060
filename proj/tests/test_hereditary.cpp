#include "doctest.h"

#include <cmath>

#include "ukb/hereditary.hpp"

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

// rank-one corner C E11 of M_2
HereditaryContext rank_one_corner() {
  return make_hereditary_context(full_algebra(2), unit_matrix(2, 0, 0));
}

// upper-left M_2 corner of M_3
HereditaryContext m2_corner_of_m3() {
  Matrix p = Matrix::Zero(3, 3);
  p(0, 0) = p(1, 1) = 1.0;
  return make_hereditary_context(full_algebra(3), p);
}

Matrix vectorized_span(const std::vector<Matrix>& mats) {
  Matrix cols(mats[0].size(), static_cast<Eigen::Index>(mats.size()));
  for (std::size_t k = 0; k < mats.size(); ++k) {
    cols.col(static_cast<Eigen::Index>(k)) = vectorize(mats[k]);
  }
  return cols;
}

}  // namespace

TEST_CASE("context of a rank-one corner") {
  const HereditaryContext ctx = rank_one_corner();
  CHECK(ctx.spectrum_b == std::set<int>{0});
  CHECK(ctx.corner_subspace.at(0).dim() == 1);
  CHECK(ctx.b.as_algebra->dim() == 1);
  CHECK(kKappa == doctest::Approx(std::sqrt(2.0) * M_PI / 2.0).epsilon(1e-15));
}

TEST_CASE("extension for the full algebra is the identity") {
  const AlgebraPtr a = full_algebra(2);
  const HereditaryContext ctx =
      make_hereditary_context(a, Matrix::Identity(2, 2));
  Rng rng(3);
  const State tau = random_pure_state(ctx.b.as_algebra, rng);
  const State rho = xi_extend(ctx, tau);
  for (Eigen::Index j = 0; j < a->dim(); ++j) {
    CHECK(std::abs(rho(a->basis[j]) - tau(a->basis[j])) < 1e-10);
  }
}

TEST_CASE("rank-one corner: the unique state extends to the e1 vector state") {
  const HereditaryContext ctx = rank_one_corner();
  const State tau =
      state_from_ray(ctx.b.as_algebra, ProjectivePoint{0, Vector::Ones(1)});
  const State rho = xi_extend(ctx, tau);
  CHECK(rho.is_pure);
  const ProjectivePoint pt = canonical_ray(rho);
  CHECK(std::abs(pt.ray(0) - Complex(1.0, 0.0)) < 1e-9);
  CHECK(std::abs(pt.ray(1)) < 1e-9);
}

TEST_CASE("M_2 corner of M_3: extension of the balanced ray") {
  const HereditaryContext ctx = m2_corner_of_m3();
  Vector mid(2);
  mid << 1.0, 1.0;
  mid /= std::sqrt(2.0);
  const int j = ctx.b_block_of_parent.at(0);
  const State tau =
      state_from_ray(ctx.b.as_algebra, ProjectivePoint{j, mid});
  const State rho = xi_extend(ctx, tau);
  CHECK(rho.is_pure);
  const ProjectivePoint pt = canonical_ray(rho);
  Vector expected = Vector::Zero(3);
  expected(0) = expected(1) = 1.0 / std::sqrt(2.0);
  CHECK((pt.ray - expected).norm() < 1e-9);
  // the restriction comes back unchanged: theta gives t = 1
  const ThetaResult th = theta(ctx, rho);
  CHECK(th.t == doctest::Approx(1.0));
  CHECK((th.rho_prime.values - tau.values).norm() < 1e-9);
}

TEST_CASE("theta weight on a tilted vector state") {
  const HereditaryContext ctx = rank_one_corner();
  Vector x(2);
  x << std::sqrt(0.25), std::sqrt(0.75);
  const State rho = state_from_ray(ctx.parent, ProjectivePoint{0, x});
  const ThetaResult th = theta(ctx, rho);
  CHECK(th.t == doctest::Approx(0.25));
  CHECK(th.rho_prime.is_pure);
}

TEST_CASE("theta throws when the state vanishes on B") {
  const AlgebraPtr a = m2_plus_m3();
  const Matrix p = a->blocks[0].central_projection;
  const HereditaryContext ctx = make_hereditary_context(a, p);
  Rng rng(5);
  const State rho = random_pure_state_on_fiber(a, 1, rng);
  CHECK_THROWS_AS(theta(ctx, rho), VanishesOnB);
}

TEST_CASE("theta_preimage arithmetic on the rank-one corner") {
  const HereditaryContext ctx = rank_one_corner();
  const State tau =
      state_from_ray(ctx.b.as_algebra, ProjectivePoint{0, Vector::Ones(1)});
  const State rho = theta_preimage(ctx, 0.25, tau);
  const ProjectivePoint pt = canonical_ray(rho);
  CHECK(std::abs(pt.ray(0) - Complex(0.5, 0.0)) < 1e-9);
  CHECK(std::abs(pt.ray(1) - Complex(std::sqrt(0.75), 0.0)) < 1e-9);
}

TEST_CASE("theta and theta_preimage round trip on 100 random pairs") {
  const HereditaryContext ctx = m2_corner_of_m3();
  Rng rng(7);
  std::uniform_real_distribution<double> uni(0.05, 0.95);
  for (int trial = 0; trial < 100; ++trial) {
    const double t = uni(rng);
    const State tau = random_pure_state(ctx.b.as_algebra, rng);
    const State rho = theta_preimage(ctx, t, tau);
    const ThetaResult th = theta(ctx, rho);
    CHECK(std::abs(th.t - t) < 1e-9);
    CHECK((th.rho_prime.values - tau.values).norm() < 1e-8);
  }
}

TEST_CASE("t to 1 limit of the preimage approaches the extension") {
  const HereditaryContext ctx = m2_corner_of_m3();
  Rng rng(11);
  const State tau = random_pure_state(ctx.b.as_algebra, rng);
  const State limit = theta_preimage(ctx, 1.0 - 1e-12, tau);
  CHECK(kahler_distance(limit, xi_extend(ctx, tau)) < 1e-5);
}

TEST_CASE("preimage guards: full corner, bad direction, bad weight") {
  const HereditaryContext full =
      make_hereditary_context(full_algebra(2), Matrix::Identity(2, 2));
  Rng rng(13);
  const State tau = random_pure_state(full.b.as_algebra, rng);
  CHECK_THROWS_AS(theta_preimage(full, 0.5, tau), FullCorner);

  const HereditaryContext ctx = rank_one_corner();
  const State one =
      state_from_ray(ctx.b.as_algebra, ProjectivePoint{0, Vector::Ones(1)});
  Vector inside(2);
  inside << 1.0, 0.0;  // lies in H_B, not orthogonal to it
  CHECK_THROWS_AS(theta_preimage(ctx, 0.5, one, inside), BadDirection);
  CHECK_THROWS_AS(theta_preimage(ctx, 1.5, one), InputError);
}

TEST_CASE("distance formula against the closed form and the sampler") {
  const HereditaryContext ctx = rank_one_corner();
  const State tau =
      state_from_ray(ctx.b.as_algebra, ProjectivePoint{0, Vector::Ones(1)});
  CHECK(distance_to_xi_image(ctx, xi_extend(ctx, tau)) ==
        doctest::Approx(0.0));
  const State quarter = theta_preimage(ctx, 0.25, tau);
  // sqrt2 arccos(1/2) = sqrt2 pi / 3
  CHECK(distance_to_xi_image(ctx, quarter) ==
        doctest::Approx(std::sqrt(2.0) * M_PI / 3.0).epsilon(1e-12));
  Vector e2 = Vector::Zero(2);
  e2(1) = 1.0;
  const State boundary =
      state_from_ray(ctx.parent, ProjectivePoint{0, e2});
  CHECK(distance_to_xi_image(ctx, boundary) == doctest::Approx(kKappa));

  Rng rng(17);
  for (const State& rho : {quarter, xi_extend(ctx, tau)}) {
    const double direct = distance_to_xi_image_sampled(ctx, rho, 1000, rng);
    CHECK(std::abs(direct - distance_to_xi_image(ctx, rho)) < 1e-6);
  }
}

TEST_CASE("states off the spectrum subset sit at distance 3") {
  const AlgebraPtr a = m2_plus_m3();
  const HereditaryContext ctx = make_hereditary_context(
      a, a->embed_irrep(0, unit_matrix(2, 0, 0)));
  Rng rng(19);
  const State rho = random_pure_state_on_fiber(a, 1, rng);
  CHECK(distance_to_xi_image(ctx, rho) == kCrossFiberDistance);
  CHECK(classify_state(ctx, rho) == Region::OutsideSpectrum);
}

TEST_CASE("the four region tags partition sampled pure states") {
  const AlgebraPtr a = m2_plus_m3();
  const HereditaryContext ctx = make_hereditary_context(
      a, a->embed_irrep(0, unit_matrix(2, 0, 0)));
  const State on_image = xi_extend(
      ctx, state_from_ray(ctx.b.as_algebra, ProjectivePoint{0, Vector::Ones(1)}));
  CHECK(classify_state(ctx, on_image) == Region::OnImage);

  Vector tilted(2);
  tilted << std::sqrt(0.3), std::sqrt(0.7);
  CHECK(classify_state(
            ctx, state_from_ray(a, ProjectivePoint{0, tilted})) ==
        Region::InsideDisk);

  Vector e2 = Vector::Zero(2);
  e2(1) = 1.0;
  const State boundary = state_from_ray(a, ProjectivePoint{0, e2});
  CHECK(classify_state(ctx, boundary) == Region::BoundarySphere);
  CHECK(distance_to_xi_image(ctx, boundary) == doctest::Approx(kKappa));

  // tag consistency with the distance on a random batch
  Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const State rho = random_pure_state(a, rng);
    const double d = distance_to_xi_image(ctx, rho);
    switch (classify_state(ctx, rho)) {
      case Region::OutsideSpectrum:
        CHECK(d == kCrossFiberDistance);
        break;
      case Region::OnImage:
        CHECK(d < 1e-6);
        break;
      case Region::InsideDisk:
        CHECK(d > 0.0);
        CHECK(d < kKappa);
        break;
      case Region::BoundarySphere:
        CHECK(d == doctest::Approx(kKappa));
        break;
    }
  }
}

TEST_CASE("sphere coordinates: single T-orbit for the rank-one corner") {
  const HereditaryContext ctx = rank_one_corner();
  const State mu =
      state_from_ray(ctx.b.as_algebra, ProjectivePoint{0, Vector::Ones(1)});
  const double t = 0.9;
  Vector x(2);
  x << std::cos(t / std::sqrt(2.0)),
      Complex(0.0, 1.0) * std::sin(t / std::sqrt(2.0));
  const State rho = state_from_ray(ctx.parent, ProjectivePoint{0, gauge_fix(x)});
  const SphereParam param = upsilon(ctx, mu, t, rho);
  // the complement of H_B is the e2 line
  CHECK(std::abs(param.orthogonal_point.ray(0)) < 1e-9);
  CHECK(std::abs(std::abs(param.orthogonal_point.ray(1)) - 1.0) < 1e-9);
  CHECK(std::abs(std::abs(param.phase) - 1.0) < 1e-12);
  const State back = upsilon_inverse(ctx, mu, t, param);
  CHECK((back.values - rho.values).norm() < 1e-10);
}

TEST_CASE("sphere bijection round trip on 200 random points") {
  // rank-one corner of M_3: the sphere is T x CP^1
  const HereditaryContext ctx =
      make_hereditary_context(full_algebra(3), unit_matrix(3, 0, 0));
  const State mu =
      state_from_ray(ctx.b.as_algebra, ProjectivePoint{0, Vector::Ones(1)});
  const ProjectivePoint x_mu = canonical_ray(xi_extend(ctx, mu));
  Rng rng(29);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> radius(0.1, kKappa - 0.1);
  for (int trial = 0; trial < 200; ++trial) {
    const double t = radius(rng);
    // random point of S(Xi(mu); t): random phases and a random complement ray
    Vector w = Vector::Zero(3);
    w.tail(2) = random_unit_vector(2, rng);
    const Complex alpha = std::polar(1.0, angle(rng));
    const Vector x = alpha * (std::cos(t / std::sqrt(2.0)) * x_mu.ray +
                              std::sin(t / std::sqrt(2.0)) * w);
    const State rho =
        state_from_ray(ctx.parent, ProjectivePoint{0, gauge_fix(x)});
    CHECK(std::abs(kahler_distance(rho, xi_extend(ctx, mu)) - t) < 1e-9);
    const SphereParam param = upsilon(ctx, mu, t, rho);
    const State back = upsilon_inverse(ctx, mu, t, param);
    CHECK((back.values - rho.values).norm() < 1e-10);
  }
}

TEST_CASE("upsilon rejects points off the sphere") {
  const HereditaryContext ctx = rank_one_corner();
  const State mu =
      state_from_ray(ctx.b.as_algebra, ProjectivePoint{0, Vector::Ones(1)});
  const State center = xi_extend(ctx, mu);
  CHECK_THROWS_AS(upsilon(ctx, mu, 1.0, center), NotOnSphere);
}

TEST_CASE("left ideal and Hilbert fiber: full algebra") {
  const AlgebraPtr a = full_algebra(2);
  const HereditaryContext ctx =
      make_hereditary_context(a, Matrix::Identity(2, 2));
  Rng rng(31);
  const State rho = random_pure_state(a, rng);
  const HilbertFiber hf = left_ideal_and_hilbert_fiber(ctx, rho);
  CHECK(hf.left_ideal_basis.size() == 4);
  CHECK(hf.fiber.dim() == gns(rho).hilbert_dim);
}

TEST_CASE("left ideal facts: L is a left ideal and L cap L* = B") {
  const HereditaryContext ctx = m2_corner_of_m3();
  const AlgebraPtr a = ctx.parent;
  Rng rng(37);
  const State rho = random_pure_state(a, rng);
  const HilbertFiber hf = left_ideal_and_hilbert_fiber(ctx, rho);

  const Subspace l = orthonormalize(vectorized_span(hf.left_ideal_basis));
  for (const Matrix& x : {a->basis[0], a->basis[3], a->basis[7]}) {
    for (const Matrix& m : hf.left_ideal_basis) {
      CHECK(contains(l, vectorize(x * m), 1e-8));
    }
  }
  std::vector<Matrix> starred;
  for (const Matrix& m : hf.left_ideal_basis) {
    starred.push_back(m.adjoint());
  }
  const Subspace lstar = orthonormalize(vectorized_span(starred));
  const Subspace both = intersect(l, lstar);
  const Subspace bspan =
      orthonormalize(vectorized_span(ctx.b.as_algebra->basis));
  CHECK(same_span(both, bspan, 1e-8));
}

TEST_CASE("Hilbert fiber vanishes when the state kills the ideal of B") {
  const AlgebraPtr a = m2_plus_m3();
  const HereditaryContext ctx = make_hereditary_context(
      a, a->embed_irrep(0, unit_matrix(2, 0, 0)));
  Rng rng(41);
  const State rho = random_pure_state_on_fiber(a, 1, rng);
  CHECK(left_ideal_and_hilbert_fiber(ctx, rho).fiber.dim() == 0);
}

TEST_CASE("rank-one corner, state at e1: Hilbert fiber has dimension one") {
  const HereditaryContext ctx = rank_one_corner();
  Vector e1 = Vector::Zero(2);
  e1(0) = 1.0;
  const State rho = state_from_ray(ctx.parent, ProjectivePoint{0, e1});
  CHECK(left_ideal_and_hilbert_fiber(ctx, rho).fiber.dim() == 1);
}

TEST_CASE("subbundle report: ideal case, proper corner, full algebra") {
  Rng rng(43);
  const AlgebraPtr a = m2_plus_m3();

  // B = the M_2 block: an ideal, full corners on its spectrum
  const HereditaryContext ideal_ctx =
      make_hereditary_context(a, a->blocks[0].central_projection);
  CHECK(subbundle_check(ideal_ctx, 30, rng).pass);

  // B = proper M_2 corner of M_3: subbundle CP^1 inside the CP^2 fiber
  const HereditaryContext corner_ctx = m2_corner_of_m3();
  const CheckReport corner_report = subbundle_check(corner_ctx, 30, rng);
  CHECK(corner_report.pass);
  CHECK(corner_ctx.corner_subspace.at(0).dim() <
        corner_ctx.corner_subspace.at(0).ambient_dim);

  // B = A
  const HereditaryContext full_ctx =
      make_hereditary_context(a, Matrix(a->unit));
  CHECK(subbundle_check(full_ctx, 30, rng).pass);
}
