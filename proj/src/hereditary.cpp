#include "ukb/hereditary.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ukb {

namespace {

Vector evaluate_on_basis(const State& outer, const AlgebraPtr& inner) {
  Vector values(inner->dim());
  for (Eigen::Index k = 0; k < inner->dim(); ++k) {
    values(k) = outer(inner->basis[k]);
  }
  return values;
}

const Subspace& corner_of(const HereditaryContext& ctx, int parent_fiber) {
  const auto it = ctx.corner_subspace.find(parent_fiber);
  if (it == ctx.corner_subspace.end()) {
    throw UnknownBaseIndex("fiber outside the hereditary spectrum subset");
  }
  return it->second;
}

}  // namespace

HereditaryContext make_hereditary_context(const AlgebraPtr& a,
                                          const Matrix& p) {
  HereditaryContext ctx;
  ctx.parent = a;
  ctx.b = hereditary_from_projection(a, p);
  ctx.spectrum_b = ctx.b.spectrum;
  for (int i : ctx.spectrum_b) {
    ctx.corner_subspace[i] =
        range_space(a->irrep(i, ctx.b.unit_p), a->tol);
  }
  // B's minimal central projections are q_i p, which pins the fiber pairing
  for (const auto& bblk : ctx.b.as_algebra->blocks) {
    int best = -1;
    double best_dist = 1e9;
    for (int i : ctx.spectrum_b) {
      const Matrix target =
          a->blocks.at(static_cast<std::size_t>(i)).central_projection *
          ctx.b.unit_p;
      const double dist = (bblk.central_projection - target).norm();
      if (dist < best_dist) {
        best_dist = dist;
        best = i;
      }
    }
    if (best < 0 || best_dist > 1e-6) {
      throw UkbError("could not pair a block of B with a parent block");
    }
    ctx.parent_block_of_b[bblk.index] = best;
    ctx.b_block_of_parent[best] = bblk.index;
  }
  return ctx;
}

State xi_extend(const HereditaryContext& ctx, const State& tau) {
  if (!tau.is_pure) {
    throw NotPure("xi_extend: tau is not pure");
  }
  const Matrix& p = ctx.b.unit_p;
  Vector values(ctx.parent->dim());
  for (Eigen::Index j = 0; j < ctx.parent->dim(); ++j) {
    values(j) = tau(p * ctx.parent->basis[j] * p);
  }
  const State rho = make_state(ctx.parent, values);
  if (!rho.is_pure) {
    throw NotPure("xi_extend: the corner extension failed to be pure");
  }
  return rho;
}

ThetaResult theta(const HereditaryContext& ctx, const State& rho) {
  const double t = rho(ctx.b.unit_p).real();
  if (t <= ctx.parent->tol.tol_eq) {
    throw VanishesOnB("theta: rho vanishes on B");
  }
  ThetaResult result;
  result.t = t;
  result.rho_prime = make_state(
      ctx.b.as_algebra,
      (evaluate_on_basis(rho, ctx.b.as_algebra) / t).eval());
  if (!result.rho_prime.is_pure) {
    throw NotPure("theta: the normalized restriction is not pure");
  }
  return result;
}

State theta_preimage(const HereditaryContext& ctx, double t,
                     const State& rho_prime, const std::optional<Vector>& w) {
  if (!(t > 0.0 && t < 1.0)) {
    throw InputError("theta_preimage: t must lie in (0, 1)");
  }
  const State extension = xi_extend(ctx, rho_prime);
  const ProjectivePoint base = canonical_ray(extension);
  const Subspace& corner = corner_of(ctx, base.fiber);
  const Eigen::Index n = corner.ambient_dim;
  if (corner.dim() == n) {
    throw FullCorner("theta_preimage: the corner fills the fiber");
  }
  Vector direction;
  if (w.has_value()) {
    direction = *w;
    if (direction.size() != n ||
        std::abs(direction.norm() - 1.0) > 1e-8 ||
        (projector(corner) * direction).norm() > 1e-8) {
      throw BadDirection(
          "theta_preimage: w must be a unit vector orthogonal to H_B,i");
    }
  } else {
    direction = complement(corner, ctx.parent->tol).basis.col(0);
  }
  const Vector h =
      (std::sqrt(t) * base.ray + std::sqrt(1.0 - t) * direction).normalized();
  return state_from_ray(ctx.parent,
                        ProjectivePoint{base.fiber, gauge_fix(h)});
}

double distance_to_xi_image(const HereditaryContext& ctx, const State& rho) {
  if (!rho.is_pure) {
    throw NotPure("distance_to_xi_image: rho is not pure");
  }
  const int fiber = fiber_of(rho);
  if (!ctx.spectrum_b.count(fiber)) {
    return kCrossFiberDistance;
  }
  const double t = rho(ctx.b.unit_p).real();
  if (t <= ctx.parent->tol.tol_eq) {
    return kKappa;
  }
  return std::sqrt(2.0) * std::acos(std::min(1.0, std::sqrt(t)));
}

double distance_to_xi_image_sampled(const HereditaryContext& ctx,
                                    const State& rho, int samples, Rng& rng) {
  double best = kCrossFiberDistance;
  ProjectivePoint best_point;
  bool found = false;
  for (const auto& bblk : ctx.b.as_algebra->blocks) {
    for (int k = 0; k < samples / 2; ++k) {
      ProjectivePoint pt;
      pt.fiber = bblk.index;
      pt.ray = gauge_fix(random_unit_vector(bblk.n, rng));
      const double d = kahler_distance(
          rho, xi_extend(ctx, state_from_ray(ctx.b.as_algebra, pt)));
      if (d < best) {
        best = d;
        best_point = pt;
        found = true;
      }
    }
  }
  if (!found) {
    return best;
  }
  // local refinement around the best sampled extension
  double step = 0.5;
  for (int k = 0; k < samples / 2; ++k) {
    ProjectivePoint pt = best_point;
    pt.ray = gauge_fix(
        (pt.ray + step * random_unit_vector(pt.ray.size(), rng)).normalized());
    const double d = kahler_distance(
        rho, xi_extend(ctx, state_from_ray(ctx.b.as_algebra, pt)));
    if (d < best) {
      best = d;
      best_point = pt;
    } else {
      step = std::max(1e-6, step * 0.97);
    }
  }
  return best;
}

Region classify_state(const HereditaryContext& ctx, const State& rho) {
  if (!rho.is_pure) {
    throw NotPure("classify_state: rho is not pure");
  }
  if (!ctx.spectrum_b.count(fiber_of(rho))) {
    return Region::OutsideSpectrum;
  }
  const double t = rho(ctx.b.unit_p).real();
  const double tol = ctx.parent->tol.tol_eq;
  if (std::abs(t) <= tol) {
    return Region::BoundarySphere;
  }
  if (std::abs(t - 1.0) <= tol) {
    return Region::OnImage;
  }
  return Region::InsideDisk;
}

SphereParam upsilon(const HereditaryContext& ctx, const State& mu, double t,
                    const State& rho) {
  if (!(t > 0.0 && t < kKappa)) {
    throw InputError("upsilon: t must lie in (0, kappa)");
  }
  const State center = xi_extend(ctx, mu);
  const ProjectivePoint x_mu = canonical_ray(center);
  const Subspace& corner = corner_of(ctx, x_mu.fiber);
  if (corner.dim() == corner.ambient_dim) {
    throw FullCorner("upsilon: the corner fills the fiber");
  }
  const double tol = ctx.parent->tol.tol_eq;
  if (std::abs(kahler_distance(rho, center) - t) > 100 * tol) {
    throw NotOnSphere("upsilon: rho is not on the sphere S(Xi(mu); t)");
  }
  const ProjectivePoint x_rho = canonical_ray(rho);

  const double c = std::cos(t / std::sqrt(2.0));
  const Complex overlap = (x_mu.ray.adjoint() * x_rho.ray).value();
  // rotate the x_mu component positive real, removing the global phase
  const Complex alpha_phase =
      std::abs(overlap) > 1e-14 ? overlap / std::abs(overlap)
                                : Complex(1.0, 0.0);
  const Vector rotated = x_rho.ray / alpha_phase;
  const Vector v = rotated - c * x_mu.ray;
  if ((projector(corner) * v).norm() > 100 * tol) {
    throw NotOnSphere("upsilon: rho restricted to B is not proportional to mu");
  }
  const double s = v.norm();
  if (std::abs(s - std::sin(t / std::sqrt(2.0))) > 100 * tol) {
    throw NotOnSphere("upsilon: radial component mismatch");
  }
  SphereParam param;
  const Vector v_hat = v / s;
  param.orthogonal_point.fiber = x_mu.fiber;
  param.orthogonal_point.ray = gauge_fix(v_hat);
  param.phase =
      (param.orthogonal_point.ray.adjoint() * v_hat).value();
  param.phase /= std::abs(param.phase);
  return param;
}

State upsilon_inverse(const HereditaryContext& ctx, const State& mu, double t,
                      const SphereParam& param) {
  if (!(t > 0.0 && t < kKappa)) {
    throw InputError("upsilon_inverse: t must lie in (0, kappa)");
  }
  const ProjectivePoint x_mu = canonical_ray(xi_extend(ctx, mu));
  const Subspace& corner = corner_of(ctx, x_mu.fiber);
  if (corner.dim() == corner.ambient_dim) {
    throw FullCorner("upsilon_inverse: the corner fills the fiber");
  }
  const Vector& w = param.orthogonal_point.ray;
  if (w.size() != corner.ambient_dim ||
      (projector(corner) * w).norm() > 1e-8) {
    throw BadDirection("upsilon_inverse: [w] must lie off the corner");
  }
  const Vector x = std::cos(t / std::sqrt(2.0)) * x_mu.ray +
                   std::sin(t / std::sqrt(2.0)) * param.phase * w;
  return state_from_ray(ctx.parent,
                        ProjectivePoint{x_mu.fiber, gauge_fix(x.normalized())});
}

HilbertFiber left_ideal_and_hilbert_fiber(const HereditaryContext& ctx,
                                          const State& rho) {
  const AlgebraPtr& a = ctx.parent;
  const Matrix& p = ctx.b.unit_p;
  const Eigen::Index nn = a->ambient_dim * a->ambient_dim;

  Matrix stacked(nn, a->dim());
  for (Eigen::Index j = 0; j < a->dim(); ++j) {
    stacked.col(j) = vectorize(a->basis[j] * p);
  }
  const Subspace span = orthonormalize(stacked, a->tol);

  HilbertFiber result;
  for (Eigen::Index k = 0; k < span.dim(); ++k) {
    result.left_ideal_basis.push_back(
        unvectorize(span.basis.col(k), a->ambient_dim, a->ambient_dim));
  }

  const GnsTriple g = gns(rho);
  if (span.dim() == 0) {
    result.fiber = Subspace{g.hilbert_dim, Matrix::Zero(g.hilbert_dim, 0)};
    return result;
  }
  Matrix images(g.hilbert_dim, span.dim());
  for (Eigen::Index k = 0; k < span.dim(); ++k) {
    images.col(k) =
        g.lambda(rho, result.left_ideal_basis[static_cast<std::size_t>(k)]
                          .adjoint());
  }
  result.fiber = orthonormalize(images, a->tol);
  return result;
}

CheckReport subbundle_check(const HereditaryContext& ctx, int samples,
                            Rng& rng) {
  CheckReport report;
  const AlgebraPtr& a = ctx.parent;
  const AlgebraPtr& balg = ctx.b.as_algebra;

  // (i) Xi respects the base: each B fiber lands on its paired parent fiber
  CheckClause fibering{"Xi fibers over the spectrum subset", true, 0.0, ""};
  for (const auto& bblk : balg->blocks) {
    const int expected = ctx.parent_block_of_b.at(bblk.index);
    for (int k = 0; k < std::max(1, samples / 5); ++k) {
      const State tau = random_pure_state_on_fiber(balg, bblk.index, rng);
      if (fiber_of(xi_extend(ctx, tau)) != expected) {
        fibering.pass = false;
        fibering.witness = "extension landed on the wrong fiber";
      }
    }
  }
  report.add(fibering);

  // (ii) fiber images are exactly P_{H_B,i} and those are closed
  CheckClause image{"fiber images equal the corner submanifolds", true, 0.0,
                    ""};
  CheckClause closed{"corner submanifolds are closed", true, 0.0, ""};
  for (const auto& [i, corner] : ctx.corner_subspace) {
    const int j = ctx.b_block_of_parent.at(i);
    if (balg->blocks.at(static_cast<std::size_t>(j)).n != corner.dim()) {
      image.pass = false;
      image.witness = "corner rank differs from the B fiber dimension";
    }
    for (int k = 0; k < std::max(1, samples / 5); ++k) {
      const State tau = random_pure_state_on_fiber(balg, j, rng);
      const ProjectivePoint pt = canonical_ray(xi_extend(ctx, tau));
      const double res = (pt.ray - projector(corner) * pt.ray).norm();
      image.max_residual = std::max(image.max_residual, res);
      if (res > 1e-8) {
        image.pass = false;
      }
    }
    if (!submanifold_closedness_check(ProjectiveSubmanifold{i, corner},
                                      std::max(1, samples / 5), rng,
                                      a->tol)) {
      closed.pass = false;
    }
  }
  report.add(image);
  report.add(closed);

  // (iii) P(B) -> subbundle is a fiberwise Kahler isometry (embedding)
  std::vector<FiberIsoCandidate> candidates;
  for (const auto& bblk : balg->blocks) {
    const int i = ctx.parent_block_of_b.at(bblk.index);
    FiberIsoCandidate cand;
    cand.src_fiber = bblk.index;
    cand.dst_fiber = i;
    cand.src_dim = bblk.n;
    cand.dst_dim = a->blocks.at(static_cast<std::size_t>(i)).n;
    cand.embedding = true;
    const HereditaryContext* ctx_ptr = &ctx;
    const int j = bblk.index;
    cand.map = [ctx_ptr, balg, j](const Vector& y) -> Vector {
      const State tau = state_from_ray(
          balg, ProjectivePoint{j, gauge_fix(y.normalized())});
      return canonical_ray(xi_extend(*ctx_ptr, tau)).ray;
    };
    candidates.push_back(std::move(cand));
  }
  const CheckReport iso =
      check_uniform_kahler_iso(candidates, std::max(1, samples / 2), rng,
                               a->tol);
  for (const auto& clause : iso.clauses) {
    report.add(clause);
  }

  // (iv) the subbundle is the whole restriction iff B is an ideal
  CheckClause ideal_clause{"subbundle equals the restriction iff B is an ideal",
                           true, 0.0, ""};
  bool full = true;
  for (const auto& [i, corner] : ctx.corner_subspace) {
    full = full && corner.dim() == corner.ambient_dim;
  }
  const bool is_ideal = is_ideal_subalgebra(a, balg);
  ideal_clause.pass = full == is_ideal;
  if (!ideal_clause.pass) {
    ideal_clause.witness = full ? "full corners but not an ideal"
                                : "ideal with a proper corner fiber";
  }
  report.add(ideal_clause);
  return report;
}

}  // namespace ukb
