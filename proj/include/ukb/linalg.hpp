#pragma once

#include <utility>
#include <vector>

#include "ukb/types.hpp"

namespace ukb {

// An orthonormally spanned linear subspace of C^ambient_dim. An empty basis
// is the zero subspace.
struct Subspace {
  Eigen::Index ambient_dim = 0;
  Matrix basis;  // ambient_dim x dim, orthonormal columns

  Eigen::Index dim() const { return basis.cols(); }
};

struct EigResult {
  RealVector eigenvalues;  // descending
  Matrix eigenvectors;     // unitary, column k pairs with eigenvalues[k]
};

void check_finite(const Matrix& m);

// Deterministic Hermitian eigendecomposition. Eigenvalues descending; each
// eigenvector's first component of magnitude > 1e-12 is rotated to the
// positive real axis.
EigResult hermitian_eig(const Matrix& m, const ToleranceConfig& tol = {});

// Orthonormal basis of the span via SVD; numerical rank decided by
// sigma_i / sigma_max > tol_rank.
Subspace orthonormalize(const std::vector<Vector>& vectors,
                        const ToleranceConfig& tol = {});
Subspace orthonormalize(const Matrix& columns, const ToleranceConfig& tol = {});

Subspace null_space(const Matrix& m, const ToleranceConfig& tol = {});

// Range (column space) of m with relative rank cutoff.
Subspace range_space(const Matrix& m, const ToleranceConfig& tol = {});

// Hermitian idempotent onto the subspace.
Matrix projector(const Subspace& s);

Matrix adjoint(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);

// Tr(a* b), the Hilbert-Schmidt inner product.
Complex trace_inner(const Matrix& a, const Matrix& b);

// Intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& a, const Subspace& b,
                   const ToleranceConfig& tol = {});

// Orthogonal complement within the ambient space.
Subspace complement(const Subspace& s, const ToleranceConfig& tol = {});

// Orthogonal complement of `inner` within `outer` (inner must sit inside).
Subspace complement_in(const Subspace& inner, const Subspace& outer,
                       const ToleranceConfig& tol = {});

bool contains(const Subspace& s, const Vector& v, double tol_eq);
bool same_span(const Subspace& a, const Subspace& b, double tol_eq);

double operator_norm(const Matrix& m);

// Rotates the first component of magnitude > threshold to the positive real
// axis. Zero vectors are returned unchanged.
Vector gauge_fix(const Vector& v, double threshold = 1e-8);

Vector random_unit_vector(Eigen::Index dim, Rng& rng);
Matrix random_hermitian(Eigen::Index dim, Rng& rng);

// vec / unvec between n x n matrices and column vectors (column-major).
Vector vectorize(const Matrix& m);
Matrix unvectorize(const Vector& v, Eigen::Index rows, Eigen::Index cols);

}  // namespace ukb
