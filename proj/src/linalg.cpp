#include "ukb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace ukb {

void check_finite(const Matrix& m) {
  if (!m.allFinite()) {
    throw NotFinite("matrix has non-finite entries");
  }
}

Vector gauge_fix(const Vector& v, double threshold) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > threshold) {
      return v * (std::conj(v(i)) / mag);
    }
  }
  return v;
}

EigResult hermitian_eig(const Matrix& m, const ToleranceConfig& tol) {
  check_finite(m);
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("hermitian_eig: matrix not square");
  }
  const double scale = m.norm();
  if ((m - m.adjoint()).norm() > tol.tol_eq * std::max(scale, 1.0)) {
    throw NotHermitian("hermitian_eig: matrix not Hermitian");
  }
  const Eigen::Index n = m.rows();
  if (m.norm() == 0.0) {
    return EigResult{RealVector::Zero(n), Matrix::Identity(n, n)};
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  EigResult r;
  r.eigenvalues.resize(n);
  r.eigenvectors.resize(n, n);
  // Eigen returns ascending order; flip to descending and gauge each column.
  for (Eigen::Index k = 0; k < n; ++k) {
    r.eigenvalues(k) = es.eigenvalues()(n - 1 - k);
    r.eigenvectors.col(k) = gauge_fix(es.eigenvectors().col(n - 1 - k), 1e-12);
  }
  return r;
}

Subspace orthonormalize(const Matrix& columns, const ToleranceConfig& tol) {
  Subspace s;
  s.ambient_dim = columns.rows();
  if (columns.cols() == 0 || columns.norm() == 0.0) {
    s.basis.resize(columns.rows(), 0);
    return s;
  }
  check_finite(columns);
  Eigen::JacobiSVD<Matrix> svd(columns, Eigen::ComputeThinU);
  const double smax = svd.singularValues()(0);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tol.tol_rank * smax) {
      ++rank;
    }
  }
  s.basis = svd.matrixU().leftCols(rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    s.basis.col(k) = gauge_fix(s.basis.col(k), 1e-12);
  }
  return s;
}

Subspace orthonormalize(const std::vector<Vector>& vectors,
                        const ToleranceConfig& tol) {
  if (vectors.empty()) {
    return Subspace{0, Matrix(0, 0)};
  }
  const Eigen::Index dim = vectors.front().size();
  Matrix cols(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) {
      throw DimensionMismatch("orthonormalize: mixed ambient dimensions");
    }
    cols.col(static_cast<Eigen::Index>(i)) = vectors[i];
  }
  return orthonormalize(cols, tol);
}

Subspace null_space(const Matrix& m, const ToleranceConfig& tol) {
  check_finite(m);
  Subspace s;
  s.ambient_dim = m.cols();
  if (m.norm() == 0.0) {
    s.basis = Matrix::Identity(m.cols(), m.cols());
    return s;
  }
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const double smax = svd.singularValues()(0);
  if (smax <= 1e-12) {
    // numerical dust only; the matrix is zero for rank purposes
    Subspace z;
    z.ambient_dim = m.cols();
    z.basis = Matrix::Identity(m.cols(), m.cols());
    return z;
  }
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
    if (svd.singularValues()(i) > tol.tol_rank * smax) {
      ++rank;
    }
  }
  s.basis = svd.matrixV().rightCols(m.cols() - rank);
  for (Eigen::Index k = 0; k < s.basis.cols(); ++k) {
    s.basis.col(k) = gauge_fix(s.basis.col(k), 1e-12);
  }
  return s;
}

Subspace range_space(const Matrix& m, const ToleranceConfig& tol) {
  return orthonormalize(m, tol);
}

Matrix projector(const Subspace& s) {
  if (s.dim() == 0) {
    return Matrix::Zero(s.ambient_dim, s.ambient_dim);
  }
  return s.basis * s.basis.adjoint();
}

Matrix adjoint(const Matrix& m) { return m.adjoint(); }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: incompatible shapes");
  }
  return a * b;
}

Complex trace_inner(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("trace_inner: incompatible shapes");
  }
  return (a.adjoint() * b).trace();
}

Subspace intersect(const Subspace& a, const Subspace& b,
                   const ToleranceConfig& tol) {
  if (a.ambient_dim != b.ambient_dim) {
    throw DimensionMismatch("intersect: different ambient spaces");
  }
  const Eigen::Index n = a.ambient_dim;
  // v lies in both spans iff (I - Pa) v = 0 and (I - Pb) v = 0.
  Matrix stacked(2 * n, n);
  stacked.topRows(n) = Matrix::Identity(n, n) - projector(a);
  stacked.bottomRows(n) = Matrix::Identity(n, n) - projector(b);
  return null_space(stacked, tol);
}

Subspace complement(const Subspace& s, const ToleranceConfig& tol) {
  if (s.dim() == 0) {
    return Subspace{s.ambient_dim, Matrix::Identity(s.ambient_dim, s.ambient_dim)};
  }
  return null_space(s.basis.adjoint(), tol);
}

Subspace complement_in(const Subspace& inner, const Subspace& outer,
                       const ToleranceConfig& tol) {
  if (inner.ambient_dim != outer.ambient_dim) {
    throw DimensionMismatch("complement_in: different ambient spaces");
  }
  const Matrix residual =
      (Matrix::Identity(outer.ambient_dim, outer.ambient_dim) -
       projector(inner)) *
      outer.basis;
  // orthonormal inputs have scale 1, so all-dust residuals mean containment
  if (residual.norm() <= 1e-12 * std::max<double>(1.0, outer.dim())) {
    return Subspace{outer.ambient_dim, Matrix::Zero(outer.ambient_dim, 0)};
  }
  return orthonormalize(residual, tol);
}

bool contains(const Subspace& s, const Vector& v, double tol_eq) {
  if (v.size() != s.ambient_dim) {
    throw DimensionMismatch("contains: wrong ambient dimension");
  }
  const double vnorm = v.norm();
  if (vnorm == 0.0) {
    return true;
  }
  const Vector residual = v - projector(s) * v;
  return residual.norm() <= tol_eq * std::max(vnorm, 1.0);
}

bool same_span(const Subspace& a, const Subspace& b, double tol_eq) {
  if (a.ambient_dim != b.ambient_dim || a.dim() != b.dim()) {
    return false;
  }
  return (projector(a) - projector(b)).norm() <=
         tol_eq * std::max<double>(1.0, a.dim());
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) {
    return 0.0;
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Vector random_unit_vector(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  const double n = v.norm();
  if (n < 1e-300) {
    return random_unit_vector(dim, rng);
  }
  return v / n;
}

Matrix random_hermitian(Eigen::Index dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      m(i, j) = Complex(gauss(rng), gauss(rng));
    }
  }
  return (m + m.adjoint()) / 2.0;
}

Vector vectorize(const Matrix& m) {
  return Eigen::Map<const Vector>(m.data(), m.size());
}

Matrix unvectorize(const Vector& v, Eigen::Index rows, Eigen::Index cols) {
  if (v.size() != rows * cols) {
    throw DimensionMismatch("unvectorize: size mismatch");
  }
  return Eigen::Map<const Matrix>(v.data(), rows, cols);
}

}  // namespace ukb
