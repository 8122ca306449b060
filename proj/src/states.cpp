#include "ukb/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

namespace ukb {

namespace {

Matrix matrix_unit(Eigen::Index n, Eigen::Index r, Eigen::Index c) {
  Matrix m = Matrix::Zero(n, n);
  m(r, c) = 1.0;
  return m;
}

std::vector<Matrix> block_densities(const State& s) {
  std::vector<Matrix> out;
  for (const auto& blk : s.algebra->blocks) {
    Matrix d(blk.n, blk.n);
    for (Eigen::Index r = 0; r < blk.n; ++r) {
      for (Eigen::Index c = 0; c < blk.n; ++c) {
        // omega(u_rc) = Tr(D E_rc) = D(c, r)
        d(c, r) = s(s.algebra->embed_irrep(blk.index,
                                           matrix_unit(blk.n, r, c)));
      }
    }
    out.push_back(std::move(d));
  }
  return out;
}

bool density_rank_pure(const State& s, const ToleranceConfig& tol) {
  int nonzero_blocks = 0;
  bool rank_one = false;
  for (const auto& d : s.density_per_block) {
    if (d.norm() > tol.tol_eq) {
      ++nonzero_blocks;
      const EigResult eig = hermitian_eig((d + d.adjoint()) / 2.0, tol);
      Eigen::Index rank = 0;
      for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
        if (eig.eigenvalues(k) > tol.tol_rank * eig.eigenvalues(0)) {
          ++rank;
        }
      }
      rank_one = rank == 1;
    }
  }
  return nonzero_blocks == 1 && rank_one;
}

}  // namespace

Complex State::operator()(const Matrix& x) const {
  return eval_coefficients(algebra->coefficients(x));
}

Complex State::eval_coefficients(const Vector& coeffs) const {
  if (coeffs.size() != values.size()) {
    throw DimensionMismatch("state evaluation: coefficient size mismatch");
  }
  return (values.transpose() * coeffs).value();
}

State make_state(const AlgebraPtr& algebra, const Vector& values) {
  if (values.size() != algebra->dim()) {
    throw DimensionMismatch("make_state: one value per basis element required");
  }
  State s;
  s.algebra = algebra;
  s.values = values;

  const ToleranceConfig& tol = algebra->tol;
  const Eigen::Index d = algebra->dim();

  const Complex norm = s.eval_coefficients(algebra->coefficients(algebra->unit));
  if (std::abs(norm - Complex(1.0, 0.0)) > tol.tol_eq) {
    throw NotNormalized("make_state: omega(e) != 1");
  }

  Matrix gram(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      gram(j, k) = s.eval_coefficients(
          algebra->coefficients(algebra->basis[j].adjoint() *
                                algebra->basis[k]));
    }
  }
  const EigResult eig = hermitian_eig((gram + gram.adjoint()) / 2.0, tol);
  const double min_eig = eig.eigenvalues(d - 1);
  if (min_eig < -tol.tol_eq) {
    std::ostringstream msg;
    msg << "make_state: Gram matrix has negative eigenvalue " << min_eig;
    throw NotPositive(msg.str());
  }

  s.density_per_block = block_densities(s);
  s.is_pure = density_rank_pure(s, tol);
  return s;
}

State state_from_ray(const AlgebraPtr& algebra, const ProjectivePoint& point) {
  if (point.fiber < 0 ||
      point.fiber >= static_cast<int>(algebra->blocks.size())) {
    throw UnknownBaseIndex("state_from_ray: no such fiber");
  }
  const auto& blk = algebra->blocks[static_cast<std::size_t>(point.fiber)];
  if (point.ray.size() != blk.n) {
    throw DimensionMismatch("state_from_ray: ray has wrong fiber dimension");
  }
  const double n = point.ray.norm();
  if (std::abs(n - 1.0) > algebra->tol.tol_ortho * 100 && n > 0.0) {
    throw UkbError("state_from_ray: ray is not normalized");
  }
  Vector values(algebra->dim());
  for (Eigen::Index j = 0; j < algebra->dim(); ++j) {
    values(j) = (point.ray.adjoint() *
                 algebra->irrep(point.fiber, algebra->basis[j]) * point.ray)
                    .value();
  }
  return make_state(algebra, values);
}

GnsTriple gns(const State& s) {
  const AlgebraPtr& a = s.algebra;
  const ToleranceConfig& tol = a->tol;
  const Eigen::Index d = a->dim();

  Matrix gram(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index k = 0; k < d; ++k) {
      gram(j, k) =
          s.eval_coefficients(a->coefficients(a->basis[j].adjoint() *
                                              a->basis[k]));
    }
  }
  const EigResult eig = hermitian_eig((gram + gram.adjoint()) / 2.0, tol);
  Eigen::Index rank = 0;
  for (Eigen::Index k = 0; k < d; ++k) {
    if (eig.eigenvalues(k) > tol.tol_rank * std::max(eig.eigenvalues(0), 0.0)) {
      ++rank;
    }
  }

  GnsTriple g;
  g.hilbert_dim = rank;
  // Lambda(c) = diag(sqrt(lambda)) V* c on the kept eigenpairs.
  g.quotient_map.resize(rank, d);
  for (Eigen::Index l = 0; l < rank; ++l) {
    g.quotient_map.row(l) =
        std::sqrt(eig.eigenvalues(l)) * eig.eigenvectors.col(l).adjoint();
  }
  // Coefficient matrices of the orthonormal class representatives g_l.
  Matrix reps(d, rank);
  for (Eigen::Index l = 0; l < rank; ++l) {
    reps.col(l) = eig.eigenvectors.col(l) / std::sqrt(eig.eigenvalues(l));
  }
  g.rep.resize(static_cast<std::size_t>(d));
  for (Eigen::Index j = 0; j < d; ++j) {
    Matrix rj(rank, rank);
    for (Eigen::Index l = 0; l < rank; ++l) {
      Matrix gl = Matrix::Zero(a->ambient_dim, a->ambient_dim);
      for (Eigen::Index m = 0; m < d; ++m) {
        gl += reps(m, l) * a->basis[m];
      }
      rj.col(l) = g.quotient_map * a->coefficients(a->basis[j] * gl);
    }
    g.rep[static_cast<std::size_t>(j)] = std::move(rj);
  }
  g.cyclic_vector = g.quotient_map * a->coefficients(a->unit);
  return g;
}

Matrix GnsTriple::represent(const State& s, const Matrix& x) const {
  const Vector c = s.algebra->coefficients(x);
  Matrix r = Matrix::Zero(hilbert_dim, hilbert_dim);
  for (Eigen::Index j = 0; j < c.size(); ++j) {
    r += c(j) * rep[static_cast<std::size_t>(j)];
  }
  return r;
}

Vector GnsTriple::lambda(const State& s, const Matrix& x) const {
  return quotient_map * s.algebra->coefficients(x);
}

bool is_pure_via_gns(const State& s) {
  const GnsTriple g = gns(s);
  const Eigen::Index n = g.hilbert_dim;
  const Eigen::Index nn = n * n;
  const Matrix id = Matrix::Identity(n, n);
  Matrix system(static_cast<Eigen::Index>(g.rep.size()) * nn, nn);
  for (std::size_t j = 0; j < g.rep.size(); ++j) {
    system.block(static_cast<Eigen::Index>(j) * nn, 0, nn, nn) =
        Eigen::kroneckerProduct(g.rep[j].transpose(), id) -
        Eigen::kroneckerProduct(id, g.rep[j]);
  }
  return null_space(system, s.algebra->tol).dim() == 1;
}

int fiber_of(const State& s) {
  if (!s.is_pure) {
    throw NotPure("fiber_of: state is not pure");
  }
  for (const auto& blk : s.algebra->blocks) {
    if (s.density_per_block[static_cast<std::size_t>(blk.index)].norm() >
        s.algebra->tol.tol_eq) {
      return blk.index;
    }
  }
  throw NotPure("fiber_of: no nonzero block density");
}

ProjectivePoint canonical_ray(const State& s) {
  const int fiber = fiber_of(s);
  const Matrix& d = s.density_per_block[static_cast<std::size_t>(fiber)];
  const EigResult eig =
      hermitian_eig((d + d.adjoint()) / 2.0, s.algebra->tol);
  if (eig.eigenvalues.size() > 1 &&
      eig.eigenvalues(1) > s.algebra->tol.tol_rank * eig.eigenvalues(0)) {
    throw NotPure("canonical_ray: density top eigenvalue is degenerate");
  }
  ProjectivePoint p;
  p.fiber = fiber;
  p.ray = gauge_fix(eig.eigenvectors.col(0), s.algebra->tol.tol_eq);
  return p;
}

State random_pure_state_on_fiber(const AlgebraPtr& algebra, int fiber,
                                 Rng& rng) {
  const auto& blk = algebra->blocks.at(static_cast<std::size_t>(fiber));
  ProjectivePoint p;
  p.fiber = fiber;
  p.ray = gauge_fix(random_unit_vector(blk.n, rng), algebra->tol.tol_eq);
  return state_from_ray(algebra, p);
}

State random_pure_state(const AlgebraPtr& algebra, Rng& rng) {
  std::uniform_int_distribution<int> pick(
      0, static_cast<int>(algebra->blocks.size()) - 1);
  return random_pure_state_on_fiber(algebra, pick(rng), rng);
}

State random_mixed_state(const AlgebraPtr& algebra, Rng& rng) {
  // Random densities per block with a random weight split.
  std::uniform_real_distribution<double> uni(0.1, 1.0);
  std::vector<double> weights;
  double total = 0.0;
  for (std::size_t i = 0; i < algebra->blocks.size(); ++i) {
    weights.push_back(uni(rng));
    total += weights.back();
  }
  Vector values = Vector::Zero(algebra->dim());
  for (const auto& blk : algebra->blocks) {
    const Matrix h = random_hermitian(blk.n, rng);
    Matrix density = h * h.adjoint();
    density *= weights[static_cast<std::size_t>(blk.index)] /
               (total * density.trace().real());
    for (Eigen::Index j = 0; j < algebra->dim(); ++j) {
      values(j) +=
          (density * algebra->irrep(blk.index, algebra->basis[j])).trace();
    }
  }
  return make_state(algebra, values);
}

}  // namespace ukb
