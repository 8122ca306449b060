#pragma once

#include <vector>

#include "ukb/algebra.hpp"

namespace ukb {

// A ray [x] in the fiber over a spectrum point, stored with the phase gauge
// (first component of magnitude > tol rotated positive real).
struct ProjectivePoint {
  int fiber = 0;
  Vector ray;
};

// A positive normalized linear functional on an FdCStarAlgebra, stored by its
// values on the algebra basis together with the per-block densities D_i
// satisfying omega(x) = sum_i Tr(D_i pi_i(x)).
class State {
 public:
  AlgebraPtr algebra;
  Vector values;                 // omega(b_j) per basis element
  std::vector<Matrix> density_per_block;
  bool is_pure = false;

  Complex operator()(const Matrix& x) const;
  Complex eval_coefficients(const Vector& coeffs) const;
};

struct GnsTriple {
  Eigen::Index hilbert_dim = 0;
  std::vector<Matrix> rep;  // rep[j] = image of algebra basis element j
  Vector cyclic_vector;     // x_omega = Lambda(e)
  // Lambda maps algebra-basis coefficient vectors to GNS coordinates.
  Matrix quotient_map;      // hilbert_dim x dim(A)

  Matrix represent(const State& s, const Matrix& x) const;
  Vector lambda(const State& s, const Matrix& x) const;
};

State make_state(const AlgebraPtr& algebra, const Vector& values);

// Vector state omega(x) = <ray| pi_i(x) ray> for a ray in fiber i.
State state_from_ray(const AlgebraPtr& algebra, const ProjectivePoint& point);

GnsTriple gns(const State& s);

// Irreducibility of the GNS representation: commutant dimension 1.
bool is_pure_via_gns(const State& s);

int fiber_of(const State& s);
ProjectivePoint canonical_ray(const State& s);

State random_pure_state(const AlgebraPtr& algebra, Rng& rng);
State random_pure_state_on_fiber(const AlgebraPtr& algebra, int fiber,
                                 Rng& rng);
State random_mixed_state(const AlgebraPtr& algebra, Rng& rng);

}  // namespace ukb
