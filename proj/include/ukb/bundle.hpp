#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ukb/states.hpp"

namespace ukb {

// The uniform Kahler bundle of an algebra: pure states fibered over the
// spectrum, each fiber the projective space CP^{n_i - 1}.
struct UniformKahlerBundle {
  AlgebraPtr algebra;
  std::vector<int> base;  // spectrum indices

  Eigen::Index fiber_dim(int i) const {
    return algebra->blocks.at(static_cast<std::size_t>(i)).n;
  }
};

enum class RestrictionKind { Open, Closed };

struct RestrictedBundle {
  UniformKahlerBundle parent;
  std::vector<int> base_subset;
  RestrictionKind kind = RestrictionKind::Open;
};

// P_M inside the fiber CP^{n_i - 1}, for a nonzero subspace M of C^{n_i}.
struct ProjectiveSubmanifold {
  int fiber = 0;
  Subspace subspace;
};

UniformKahlerBundle bundle_of(const AlgebraPtr& algebra);

RestrictedBundle restrict_bundle(const UniformKahlerBundle& bundle,
                                 const std::vector<int>& subset,
                                 RestrictionKind kind);

// d = sqrt(2) arccos|<x|y>| within a fiber, exactly 3 across fibers.
double kahler_distance(const State& w1, const State& w2);
double kahler_distance_rays(const Vector& x, const Vector& y);

using RayMap = std::function<Vector(const Vector&)>;

struct CheckClause {
  std::string name;
  bool pass = true;
  double max_residual = 0.0;
  std::string witness;
};

struct CheckReport {
  bool pass = true;
  std::vector<CheckClause> clauses;

  void add(CheckClause clause) {
    pass = pass && clause.pass;
    clauses.push_back(std::move(clause));
  }
};

// A fiberwise candidate for a uniform Kahler isomorphism: the ray map over
// one base point, with the base bijection recorded through the index pair.
struct FiberIsoCandidate {
  int src_fiber = 0;
  int dst_fiber = 0;
  Eigen::Index src_dim = 0;
  Eigen::Index dst_dim = 0;
  RayMap map;
  // isometric embedding into a larger fiber instead of an onto isomorphism
  bool embedding = false;
};

// Reconstructs the implementing matrix of a ray map from the images of the
// basis rays plus superposition rays pinning the relative phases. A
// holomorphic Kahler isometry of projective spaces is exactly a map of this
// shape with a unitary (or isometric, for submanifold targets) matrix.
Matrix reconstruct_isometry(const RayMap& map, Eigen::Index src_dim,
                            Eigen::Index dst_dim);

CheckReport check_uniform_kahler_iso(
    const std::vector<FiberIsoCandidate>& fibers, int samples, Rng& rng,
    const ToleranceConfig& tol);

// Prop-style verification that P(I) is uniformly Kahler isomorphic to the
// restriction of A's bundle to the blocks where I lives, via rho -> rho|_I,
// and that P(A/I) matches the complementary restriction via rho -> rho o h.
CheckReport restriction_iso_ideal(const AlgebraPtr& a, const Ideal& ideal,
                                  int samples = 50);
CheckReport restriction_iso_quotient(const AlgebraPtr& a, const Ideal& ideal,
                                     int samples = 50);

Subspace tangent_space(const ProjectivePoint& pt,
                       const ProjectiveSubmanifold& sub);

struct TangentSpanResult {
  bool holds = false;
  std::optional<Subspace> recovered;
  std::optional<Vector> witness;  // ray in P_M outside the candidate union
};

TangentSpanResult tangent_span_condition(
    Eigen::Index fiber_dim, const std::vector<Subspace>& candidate,
    const ToleranceConfig& tol = {});

bool submanifold_closedness_check(const ProjectiveSubmanifold& sub,
                                  int samples, Rng& rng,
                                  const ToleranceConfig& tol = {});

}  // namespace ukb
