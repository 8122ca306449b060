#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ukb {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances and the seed for every randomized procedure. Rank decisions are
// always relative to the largest singular value so they are scale-free.
struct ToleranceConfig {
  double tol_rank = 1e-9;
  double tol_eq = 1e-8;
  double tol_ortho = 1e-10;
  std::uint64_t rng_seed = 42;
};

struct UkbError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : UkbError {
  using UkbError::UkbError;
};
struct NotHermitian : UkbError {
  using UkbError::UkbError;
};
struct NotFinite : UkbError {
  using UkbError::UkbError;
};
struct NotProjection : UkbError {
  using UkbError::UkbError;
};
struct NotInAlgebra : UkbError {
  using UkbError::UkbError;
};
struct NotSubalgebra : UkbError {
  using UkbError::UkbError;
};
struct AmbientTooLarge : UkbError {
  using UkbError::UkbError;
};
struct DegenerateSample : UkbError {
  using UkbError::UkbError;
};
struct NotPositive : UkbError {
  using UkbError::UkbError;
};
struct NotNormalized : UkbError {
  using UkbError::UkbError;
};
struct NotPure : UkbError {
  using UkbError::UkbError;
};
struct UnknownBaseIndex : UkbError {
  using UkbError::UkbError;
};
struct PointNotOnSubmanifold : UkbError {
  using UkbError::UkbError;
};
struct EmptyCandidate : UkbError {
  using UkbError::UkbError;
};
struct InconsistentSamples : UkbError {
  using UkbError::UkbError;
};
struct VanishesOnB : UkbError {
  using UkbError::UkbError;
};
struct FullCorner : UkbError {
  using UkbError::UkbError;
};
struct BadDirection : UkbError {
  using UkbError::UkbError;
};
struct NotOnSphere : UkbError {
  using UkbError::UkbError;
};
struct InputError : UkbError {
  using UkbError::UkbError;
};

using Rng = std::mt19937_64;

// Fiber diameter of a projective-space fiber under d = sqrt(2)*arccos|<x|y>|.
inline constexpr double kKappa = 2.2214414690791831;  // sqrt(2)*pi/2

// Distance between pure states living over different base points; stored
// exactly, compared exactly.
inline constexpr double kCrossFiberDistance = 3.0;

}  // namespace ukb
