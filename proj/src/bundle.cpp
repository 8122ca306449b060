#include "ukb/bundle.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace ukb {

namespace {

// Matches blocks of a derived algebra (ideal or quotient, living on the same
// ambient space) to parent blocks by their central projections.
int matching_block(const AlgebraPtr& derived, const Matrix& parent_q) {
  int best = -1;
  double best_dist = 1e9;
  for (const auto& blk : derived->blocks) {
    const double dist = (blk.central_projection - parent_q).norm();
    if (dist < best_dist) {
      best_dist = dist;
      best = blk.index;
    }
  }
  if (best < 0 || best_dist > 1e-6) {
    throw UkbError("no matching block in the derived algebra");
  }
  return best;
}

State restrict_state(const State& rho, const AlgebraPtr& sub) {
  Vector values(sub->dim());
  for (Eigen::Index k = 0; k < sub->dim(); ++k) {
    values(k) = rho(sub->basis[k]);
  }
  return make_state(sub, values);
}

}  // namespace

UniformKahlerBundle bundle_of(const AlgebraPtr& algebra) {
  UniformKahlerBundle b;
  b.algebra = algebra;
  for (const auto& blk : algebra->blocks) {
    b.base.push_back(blk.index);
  }
  return b;
}

RestrictedBundle restrict_bundle(const UniformKahlerBundle& bundle,
                                 const std::vector<int>& subset,
                                 RestrictionKind kind) {
  for (int i : subset) {
    if (std::find(bundle.base.begin(), bundle.base.end(), i) ==
        bundle.base.end()) {
      throw UnknownBaseIndex("restrict_bundle: index outside the base");
    }
  }
  return RestrictedBundle{bundle, subset, kind};
}

double kahler_distance_rays(const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DimensionMismatch("kahler_distance_rays: different fiber dimensions");
  }
  double overlap = std::min(1.0, std::abs((x.adjoint() * y).value()));
  // fidelities within rounding distance of 1 denote equal rays; snapping
  // keeps d(x, x) = 0 despite the square-root sensitivity of arccos there
  if (overlap > 1.0 - 1e-14) {
    overlap = 1.0;
  }
  return std::sqrt(2.0) * std::acos(overlap);
}

double kahler_distance(const State& w1, const State& w2) {
  if (w1.algebra != w2.algebra) {
    throw DimensionMismatch("kahler_distance: states on different algebras");
  }
  const ProjectivePoint p1 = canonical_ray(w1);
  const ProjectivePoint p2 = canonical_ray(w2);
  if (p1.fiber != p2.fiber) {
    return kCrossFiberDistance;
  }
  return kahler_distance_rays(p1.ray, p2.ray);
}

Matrix reconstruct_isometry(const RayMap& map, Eigen::Index src_dim,
                            Eigen::Index dst_dim) {
  Matrix u(dst_dim, src_dim);
  std::vector<Vector> images;
  for (Eigen::Index r = 0; r < src_dim; ++r) {
    Vector e = Vector::Zero(src_dim);
    e(r) = 1.0;
    Vector y = map(e);
    if (y.size() != dst_dim) {
      throw DimensionMismatch("reconstruct_isometry: wrong image dimension");
    }
    images.push_back(y.normalized());
  }
  u.col(0) = images[0];
  // superposition rays (e_0 + e_r)/sqrt(2) pin the relative phases
  for (Eigen::Index r = 1; r < src_dim; ++r) {
    Vector e = Vector::Zero(src_dim);
    e(0) = 1.0 / std::sqrt(2.0);
    e(r) = 1.0 / std::sqrt(2.0);
    const Vector z = map(e);
    const Complex a = (images[0].adjoint() * z).value();
    const Complex b = (images[static_cast<std::size_t>(r)].adjoint() * z).value();
    Complex phase(1.0, 0.0);
    if (std::abs(a) > 1e-12 && std::abs(b) > 1e-12) {
      phase = (b / a) / std::abs(b / a);
    }
    u.col(r) = phase * images[static_cast<std::size_t>(r)];
  }
  return u;
}

CheckReport check_uniform_kahler_iso(
    const std::vector<FiberIsoCandidate>& fibers, int samples, Rng& rng,
    const ToleranceConfig& tol) {
  CheckReport report;
  for (const auto& f : fibers) {
    std::ostringstream tag;
    tag << "fiber " << f.src_fiber << " -> " << f.dst_fiber;

    CheckClause dims{tag.str() + ": fiber dimensions", true, 0.0, ""};
    dims.pass = f.embedding ? f.src_dim <= f.dst_dim : f.src_dim == f.dst_dim;
    if (!dims.pass) {
      std::ostringstream w;
      w << "src dim " << f.src_dim << " vs dst dim " << f.dst_dim;
      dims.witness = w.str();
    }
    report.add(dims);
    if (!dims.pass) {
      continue;
    }

    Matrix u;
    CheckClause unitary{tag.str() + ": unitary implementability", true, 0.0, ""};
    try {
      u = reconstruct_isometry(f.map, f.src_dim, f.dst_dim);
      unitary.max_residual =
          (u.adjoint() * u - Matrix::Identity(f.src_dim, f.src_dim)).norm();
      unitary.pass = unitary.max_residual <=
                     tol.tol_ortho * 100 * static_cast<double>(f.src_dim);
    } catch (const UkbError& e) {
      unitary.pass = false;
      unitary.witness = e.what();
    }
    report.add(unitary);

    // the reconstructed matrix must actually induce the candidate map
    CheckClause induced{tag.str() + ": map induced by the unitary", true, 0.0,
                        ""};
    CheckClause dist{tag.str() + ": distance preservation", true, 0.0, ""};
    if (unitary.pass) {
      for (int k = 0; k < samples; ++k) {
        const Vector x = random_unit_vector(f.src_dim, rng);
        const Vector y = random_unit_vector(f.src_dim, rng);
        const Vector fx = f.map(x).normalized();
        const Vector fy = f.map(y).normalized();
        const double induced_res = kahler_distance_rays((u * x).normalized(), fx);
        induced.max_residual = std::max(induced.max_residual, induced_res);
        // compared through fidelities: arccos near 1 amplifies rounding noise
        const double dist_res =
            std::abs(std::abs((fx.adjoint() * fy).value()) -
                     std::abs((x.adjoint() * y).value()));
        dist.max_residual = std::max(dist.max_residual, dist_res);
        if (induced_res > 1e-6) {
          induced.pass = false;
        }
        if (dist_res > tol.tol_eq) {
          dist.pass = false;
        }
      }
    } else {
      induced.pass = false;
      induced.witness = "no implementing unitary";
      dist.pass = false;
    }
    report.add(induced);
    report.add(dist);
  }
  return report;
}

CheckReport restriction_iso_ideal(const AlgebraPtr& a, const Ideal& ideal,
                                  int samples) {
  if (ideal.block_set.empty()) {
    throw UkbError("restriction_iso_ideal: the zero ideal has no bundle");
  }
  Rng rng(a->tol.rng_seed);
  const AlgebraPtr sub = ideal.as_algebra;

  std::vector<FiberIsoCandidate> fibers;
  for (int i : ideal.block_set) {
    const auto& blk = a->blocks.at(static_cast<std::size_t>(i));
    const int j = matching_block(sub, blk.central_projection);
    FiberIsoCandidate cand;
    cand.src_fiber = i;
    cand.dst_fiber = j;
    cand.src_dim = blk.n;
    cand.dst_dim = sub->blocks.at(static_cast<std::size_t>(j)).n;
    cand.map = [a, sub, i](const Vector& x) -> Vector {
      const State rho = state_from_ray(a, ProjectivePoint{i, x.normalized()});
      return canonical_ray(restrict_state(rho, sub)).ray;
    };
    fibers.push_back(std::move(cand));
  }
  CheckReport report =
      check_uniform_kahler_iso(fibers, samples, rng, a->tol);

  // p_I o f = g o p_A on sampled pure states
  CheckClause comm{"base commutation p' o psi = phi o p", true, 0.0, ""};
  for (int i : ideal.block_set) {
    const int expected =
        matching_block(sub, a->blocks.at(static_cast<std::size_t>(i))
                                .central_projection);
    for (int k = 0; k < std::max(1, samples / 5); ++k) {
      const State rho = random_pure_state_on_fiber(a, i, rng);
      const State tau = restrict_state(rho, sub);
      if (fiber_of(tau) != expected) {
        comm.pass = false;
        comm.witness = "projection mismatch after restriction";
      }
    }
  }
  report.add(comm);
  return report;
}

CheckReport restriction_iso_quotient(const AlgebraPtr& a, const Ideal& ideal,
                                     int samples) {
  std::set<int> complement_set;
  for (const auto& blk : a->blocks) {
    if (!ideal.block_set.count(blk.index)) {
      complement_set.insert(blk.index);
    }
  }
  if (complement_set.empty()) {
    throw UkbError("restriction_iso_quotient: quotient by A is the zero algebra");
  }
  Rng rng(a->tol.rng_seed);
  const Quotient q = quotient(a, ideal);

  std::vector<FiberIsoCandidate> fibers;
  for (int i : complement_set) {
    const auto& blk = a->blocks.at(static_cast<std::size_t>(i));
    const int j = matching_block(q.algebra, blk.central_projection);
    FiberIsoCandidate cand;
    cand.src_fiber = j;
    cand.dst_fiber = i;
    cand.src_dim = q.algebra->blocks.at(static_cast<std::size_t>(j)).n;
    cand.dst_dim = blk.n;
    const AlgebraPtr qa = q.algebra;
    const Matrix qc = q.quotient_projection;
    cand.map = [a, qa, qc, j](const Vector& y) -> Vector {
      const State tau = state_from_ray(qa, ProjectivePoint{j, y.normalized()});
      // rho = tau o h, evaluated on A's basis through the compression
      Vector values(a->dim());
      for (Eigen::Index k = 0; k < a->dim(); ++k) {
        values(k) = tau(qc * a->basis[k] * qc);
      }
      return canonical_ray(make_state(a, values)).ray;
    };
    fibers.push_back(std::move(cand));
  }
  CheckReport report = check_uniform_kahler_iso(fibers, samples, rng, a->tol);

  CheckClause comm{"base commutation for the quotient map", true, 0.0, ""};
  for (const auto& cand : fibers) {
    for (int k = 0; k < std::max(1, samples / 5); ++k) {
      const State tau =
          random_pure_state_on_fiber(q.algebra, cand.src_fiber, rng);
      Vector values(a->dim());
      for (Eigen::Index j2 = 0; j2 < a->dim(); ++j2) {
        values(j2) = tau(q.apply(a->basis[j2]));
      }
      if (fiber_of(make_state(a, values)) != cand.dst_fiber) {
        comm.pass = false;
        comm.witness = "projection mismatch after composing with h";
      }
    }
  }
  report.add(comm);
  return report;
}

Subspace tangent_space(const ProjectivePoint& pt,
                       const ProjectiveSubmanifold& sub) {
  if (pt.ray.size() != sub.subspace.ambient_dim) {
    throw DimensionMismatch("tangent_space: ambient dimensions differ");
  }
  if (!contains(sub.subspace, pt.ray, 1e-8)) {
    throw PointNotOnSubmanifold("tangent_space: ray not on the submanifold");
  }
  const Subspace ray_line =
      orthonormalize(std::vector<Vector>{pt.ray});
  return complement_in(ray_line, sub.subspace);
}

TangentSpanResult tangent_span_condition(Eigen::Index fiber_dim,
                                         const std::vector<Subspace>& candidate,
                                         const ToleranceConfig& tol) {
  if (candidate.empty()) {
    throw EmptyCandidate("tangent_span_condition: empty candidate union");
  }
  Eigen::Index total_cols = 0;
  for (const auto& m : candidate) {
    if (m.ambient_dim != fiber_dim) {
      throw DimensionMismatch("tangent_span_condition: wrong ambient dimension");
    }
    if (m.dim() == 0) {
      throw EmptyCandidate("tangent_span_condition: zero subspace in union");
    }
    total_cols += m.dim();
  }
  Matrix all(fiber_dim, total_cols);
  Eigen::Index col = 0;
  for (const auto& m : candidate) {
    all.middleCols(col, m.dim()) = m.basis;
    col += m.dim();
  }
  const Subspace span = orthonormalize(all, tol);

  TangentSpanResult result;
  // For a finite union, P_span subset of the union iff some M_j equals span.
  for (const auto& m : candidate) {
    if (m.dim() == span.dim()) {
      result.holds = true;
      result.recovered = span;
      return result;
    }
  }
  // witness: a ray in P_span outside every P_{M_j}
  Rng rng(tol.rng_seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Vector x;
    if (attempt == 0 && candidate.size() >= 2 && candidate[0].dim() > 0 &&
        candidate[1].dim() > 0) {
      x = (candidate[0].basis.col(0) + candidate[1].basis.col(0));
      if (x.norm() < 1e-8) {
        continue;
      }
      x.normalize();
    } else {
      x = span.basis * random_unit_vector(span.dim(), rng);
    }
    bool inside_some = false;
    for (const auto& m : candidate) {
      if (contains(m, x, 1e-8)) {
        inside_some = true;
        break;
      }
    }
    if (!inside_some) {
      result.witness = x;
      break;
    }
  }
  return result;
}

bool submanifold_closedness_check(const ProjectiveSubmanifold& sub,
                                  int samples, Rng& rng,
                                  const ToleranceConfig& tol) {
  const Subspace& m = sub.subspace;
  if (m.dim() == 0) {
    return false;
  }
  const double limit = 1e-9;
  for (int k = 0; k < samples; ++k) {
    // chart center on P_M
    const Vector xi = m.basis * random_unit_vector(m.dim(), rng);
    const Subspace tangent =
        complement_in(orthonormalize(std::vector<Vector>{xi}), m);

    // forward: a nearby P_M point lands in M cap {xi}-perp under the chart
    Vector y = xi;
    if (m.dim() > 1) {
      std::uniform_real_distribution<double> radius(0.0, 1.0);
      y = (xi + radius(rng) * (m.basis * random_unit_vector(m.dim(), rng)))
              .normalized();
    }
    const Complex overlap = (xi.adjoint() * y).value();
    if (std::abs(overlap) < 1e-3) {
      continue;  // outside the chart domain
    }
    const Vector chart_image = y / overlap - xi;
    Vector residual = chart_image;
    if (tangent.dim() > 0) {
      residual -= projector(tangent) * chart_image;
    }
    if (residual.norm() > limit * std::max(1.0, chart_image.norm())) {
      return false;
    }

    // inverse: chart points of M cap {xi}-perp map back into P_M
    if (tangent.dim() > 0) {
      const Vector v = tangent.basis * random_unit_vector(tangent.dim(), rng);
      const Vector back = (xi + v).normalized();
      if (!contains(m, back, limit * 10)) {
        return false;
      }
    }

    // metric closedness: limits of in-M sequences stay on P_M
    const Vector direction = m.basis * random_unit_vector(m.dim(), rng);
    for (int step = 1; step <= 3; ++step) {
      const Vector seq =
          (xi + direction / std::pow(10.0, step)).normalized();
      if (!contains(m, seq, limit * 10)) {
        return false;
      }
    }
    if (!contains(m, xi, limit * 10)) {
      return false;
    }
  }
  return true;
}

}  // namespace ukb
