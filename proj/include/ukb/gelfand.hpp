#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "ukb/states.hpp"

namespace ukb {

// f_a with f_a(omega) = omega(a); the element is kept when known so the
// evaluator can be cross-checked and inversion short-circuited in tests.
struct TransformFunction {
  AlgebraPtr algebra;
  std::optional<Matrix> element;
  std::function<Complex(const State&)> evaluator;

  Complex operator()(const State& w) const { return evaluator(w); }
};

// Per-block polarization rays {e_r, (e_r+e_s)/sqrt2, (e_r+i e_s)/sqrt2}
// as pure states; n_i^2 per block, so the design matrix is square.
struct TomographyFrame {
  AlgebraPtr algebra;
  std::vector<State> states;
  Matrix design;  // states x basis, design(k, j) = omega_k(b_j)
  double condition = 0.0;
};

TransformFunction gelfand(const AlgebraPtr& algebra, const Matrix& a);

TomographyFrame build_frame(const AlgebraPtr& algebra);

// Unique algebra element with omega_k(a) = values(k) at every frame state.
// Throws InconsistentSamples when the linear solve leaves a residual.
Matrix invert(const TomographyFrame& frame, const Vector& values);

// Inversion of a function; with validate set, the result is re-checked at
// extra random pure states, catching functions outside the transform range.
Matrix invert(const TomographyFrame& frame, const TransformFunction& f,
              bool validate = true, int validation_states = 8);

TransformFunction star(const TomographyFrame& frame,
                       const TransformFunction& f, const TransformFunction& g);

struct NormResult {
  double exact = 0.0;    // sqrt of max block eigenvalue of pi_i(a* a)
  double sampled = 0.0;  // sup over random pure states of sqrt(omega(a* a))
};

NormResult cstar_norm(const TomographyFrame& frame, const TransformFunction& f,
                      int samples, Rng& rng);

}  // namespace ukb
