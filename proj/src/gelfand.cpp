#include "ukb/gelfand.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/SVD>

namespace ukb {

TransformFunction gelfand(const AlgebraPtr& algebra, const Matrix& a) {
  if (!algebra->member(a)) {
    throw NotInAlgebra("gelfand: element outside the algebra");
  }
  TransformFunction f;
  f.algebra = algebra;
  f.element = a;
  const Vector coeffs = algebra->coefficients(a);
  f.evaluator = [coeffs](const State& w) {
    return w.eval_coefficients(coeffs);
  };
  return f;
}

TomographyFrame build_frame(const AlgebraPtr& algebra) {
  TomographyFrame frame;
  frame.algebra = algebra;
  for (const auto& blk : algebra->blocks) {
    const Eigen::Index n = blk.n;
    std::vector<Vector> rays;
    for (Eigen::Index r = 0; r < n; ++r) {
      Vector e = Vector::Zero(n);
      e(r) = 1.0;
      rays.push_back(e);
    }
    for (Eigen::Index r = 0; r < n; ++r) {
      for (Eigen::Index s = r + 1; s < n; ++s) {
        Vector plus = Vector::Zero(n), phase = Vector::Zero(n);
        plus(r) = plus(s) = 1.0 / std::sqrt(2.0);
        phase(r) = 1.0 / std::sqrt(2.0);
        phase(s) = Complex(0.0, 1.0 / std::sqrt(2.0));
        rays.push_back(plus);
        rays.push_back(phase);
      }
    }
    for (const Vector& ray : rays) {
      frame.states.push_back(
          state_from_ray(algebra, ProjectivePoint{blk.index, ray}));
    }
  }

  const Eigen::Index k = static_cast<Eigen::Index>(frame.states.size());
  frame.design.resize(k, algebra->dim());
  for (Eigen::Index row = 0; row < k; ++row) {
    frame.design.row(row) =
        frame.states[static_cast<std::size_t>(row)].values.transpose();
  }
  Eigen::JacobiSVD<Matrix> svd(frame.design);
  const double smin = svd.singularValues()(svd.singularValues().size() - 1);
  frame.condition = smin > 0.0 ? svd.singularValues()(0) / smin
                               : std::numeric_limits<double>::infinity();
  if (frame.condition > 100.0) {
    std::ostringstream msg;
    msg << "build_frame: design condition number " << frame.condition;
    throw UkbError(msg.str());
  }
  return frame;
}

Matrix invert(const TomographyFrame& frame, const Vector& values) {
  if (values.size() != static_cast<Eigen::Index>(frame.states.size())) {
    throw DimensionMismatch("invert: one value per frame state required");
  }
  const Vector coeffs =
      frame.design.colPivHouseholderQr().solve(values);
  const double residual = (frame.design * coeffs - values).norm();
  if (residual > frame.algebra->tol.tol_eq *
                     std::max(1.0, values.norm())) {
    std::ostringstream msg;
    msg << "invert: least-squares residual " << residual;
    throw InconsistentSamples(msg.str());
  }
  Matrix a = Matrix::Zero(frame.algebra->ambient_dim,
                          frame.algebra->ambient_dim);
  for (Eigen::Index j = 0; j < frame.algebra->dim(); ++j) {
    a += coeffs(j) * frame.algebra->basis[j];
  }
  return a;
}

Matrix invert(const TomographyFrame& frame, const TransformFunction& f,
              bool validate, int validation_states) {
  Vector values(static_cast<Eigen::Index>(frame.states.size()));
  for (std::size_t k = 0; k < frame.states.size(); ++k) {
    values(static_cast<Eigen::Index>(k)) = f(frame.states[k]);
  }
  const Matrix a = invert(frame, values);
  if (validate) {
    Rng rng(frame.algebra->tol.rng_seed);
    const Vector coeffs = frame.algebra->coefficients(a);
    for (int k = 0; k < validation_states; ++k) {
      const State w = random_pure_state(frame.algebra, rng);
      const Complex expected = w.eval_coefficients(coeffs);
      if (std::abs(f(w) - expected) >
          frame.algebra->tol.tol_eq * std::max(1.0, std::abs(expected))) {
        throw InconsistentSamples(
            "invert: function disagrees with its inversion at a "
            "validation state");
      }
    }
  }
  return a;
}

TransformFunction star(const TomographyFrame& frame,
                       const TransformFunction& f, const TransformFunction& g) {
  const Matrix a = invert(frame, f, false);
  const Matrix b = invert(frame, g, false);
  return gelfand(frame.algebra, a * b);
}

NormResult cstar_norm(const TomographyFrame& frame, const TransformFunction& f,
                      int samples, Rng& rng) {
  const AlgebraPtr& alg = frame.algebra;
  const Matrix a = invert(frame, f, false);
  const Matrix positive = a.adjoint() * a;
  NormResult result;
  for (const auto& blk : alg->blocks) {
    const EigResult eig =
        hermitian_eig(alg->irrep(blk.index, positive), alg->tol);
    result.exact =
        std::max(result.exact, std::sqrt(std::max(0.0, eig.eigenvalues(0))));
  }
  const Vector coeffs = alg->coefficients(positive);
  for (int k = 0; k < samples; ++k) {
    const State w = random_pure_state(alg, rng);
    result.sampled = std::max(
        result.sampled,
        std::sqrt(std::max(0.0, w.eval_coefficients(coeffs).real())));
  }
  if (result.sampled > result.exact + 1e-12) {
    throw UkbError("cstar_norm: sampled sup exceeded the exact sup");
  }
  return result;
}

}  // namespace ukb
