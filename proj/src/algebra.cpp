#include "ukb/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

namespace ukb {

namespace {

// HS-orthonormal basis of the span of a list of N x N matrices.
std::vector<Matrix> matrix_span_basis(const std::vector<Matrix>& mats,
                                      Eigen::Index n,
                                      const ToleranceConfig& tol) {
  std::vector<Vector> vecs;
  vecs.reserve(mats.size());
  for (const auto& m : mats) {
    if (m.rows() != n || m.cols() != n) {
      throw DimensionMismatch("matrix span: wrong shape");
    }
    if (m.norm() > 0.0) {
      vecs.push_back(vectorize(m));
    }
  }
  const Subspace s = orthonormalize(vecs, tol);
  std::vector<Matrix> basis;
  basis.reserve(s.dim());
  for (Eigen::Index k = 0; k < s.dim(); ++k) {
    basis.push_back(unvectorize(s.basis.col(k), n, n));
  }
  return basis;
}

Vector span_coefficients(const std::vector<Matrix>& basis, const Matrix& x) {
  Vector c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    c(static_cast<Eigen::Index>(j)) = trace_inner(basis[j], x);
  }
  return c;
}

double span_residual(const std::vector<Matrix>& basis, const Matrix& x) {
  Matrix proj = Matrix::Zero(x.rows(), x.cols());
  const Vector c = span_coefficients(basis, x);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    proj += c(static_cast<Eigen::Index>(j)) * basis[j];
  }
  return (x - proj).norm();
}

bool in_span(const std::vector<Matrix>& basis, const Matrix& x, double tol_eq) {
  return span_residual(basis, x) <= tol_eq * std::max(x.norm(), 1.0);
}

// Support identity of a *-closed, product-closed span: the spectral
// projection of T = sum b b* onto its nonzero eigenvalues.
Matrix support_unit(const std::vector<Matrix>& basis, Eigen::Index n,
                    const ToleranceConfig& tol) {
  if (basis.empty()) {
    return Matrix::Zero(n, n);
  }
  Matrix t = Matrix::Zero(n, n);
  for (const auto& b : basis) {
    t += b * b.adjoint();
  }
  const EigResult eig = hermitian_eig(t, tol);
  const double top = eig.eigenvalues(0);
  Matrix e = Matrix::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    if (eig.eigenvalues(k) > tol.tol_rank * top) {
      e += eig.eigenvectors.col(k) * eig.eigenvectors.col(k).adjoint();
    }
  }
  return e;
}

// Self-adjoint spanning set of the center of the span.
std::vector<Matrix> center_selfadjoint_span(const std::vector<Matrix>& basis,
                                            Eigen::Index n,
                                            const ToleranceConfig& tol) {
  const Eigen::Index d = static_cast<Eigen::Index>(basis.size());
  const Eigen::Index nn = n * n;
  // z = sum c_j b_j central iff [z, b_k] = 0 for every k.
  Matrix system(d * nn, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index j = 0; j < d; ++j) {
      system.block(k * nn, j, nn, 1) =
          vectorize(basis[j] * basis[k] - basis[k] * basis[j]);
    }
  }
  const Subspace ns = null_space(system, tol);
  std::vector<Matrix> sa;
  for (Eigen::Index l = 0; l < ns.dim(); ++l) {
    Matrix z = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j < d; ++j) {
      z += ns.basis(j, l) * basis[j];
    }
    sa.push_back((z + z.adjoint()) / 2.0);
    sa.push_back((z - z.adjoint()) * Complex(0.0, -0.5));
  }
  return sa;
}

// Spectral projections of a self-adjoint matrix clustered by eigenvalue gaps.
std::vector<std::pair<double, Matrix>> eigenvalue_clusters(
    const Matrix& z, const ToleranceConfig& tol) {
  const EigResult eig = hermitian_eig(z, tol);
  const Eigen::Index n = z.rows();
  const double spread = eig.eigenvalues(0) - eig.eigenvalues(n - 1);
  const double scale =
      std::max(std::abs(eig.eigenvalues(0)), std::abs(eig.eigenvalues(n - 1)));
  // A spread at the level of numerical noise means a single cluster.
  const double gap =
      (spread <= 1e-9 * std::max(scale, 1e-300)) ? 2.0 * spread + 1.0
                                                 : 1e-6 * spread;
  std::vector<std::pair<double, Matrix>> clusters;
  Eigen::Index k = 0;
  while (k < n) {
    Eigen::Index end = k + 1;
    while (end < n &&
           eig.eigenvalues(end - 1) - eig.eigenvalues(end) < gap) {
      ++end;
    }
    Matrix p = Matrix::Zero(n, n);
    double mean = 0.0;
    for (Eigen::Index j = k; j < end; ++j) {
      p += eig.eigenvectors.col(j) * eig.eigenvectors.col(j).adjoint();
      mean += eig.eigenvalues(j);
    }
    clusters.emplace_back(mean / static_cast<double>(end - k), std::move(p));
    k = end;
  }
  return clusters;
}

// Commutant of the span restricted to the corner q M_N q, as a matrix basis.
std::vector<Matrix> corner_commutant(const std::vector<Matrix>& basis,
                                     const Matrix& q,
                                     const ToleranceConfig& tol) {
  const Eigen::Index n = q.rows();
  const Eigen::Index nn = n * n;
  const Matrix id = Matrix::Identity(n, n);
  Matrix system((static_cast<Eigen::Index>(basis.size()) + 1) * nn, nn);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Matrix b = q * basis[j] * q;
    // vec(xb - bx) = (b^T kron I - I kron b) vec(x)
    system.block(static_cast<Eigen::Index>(j) * nn, 0, nn, nn) =
        Eigen::kroneckerProduct(b.transpose(), id) -
        Eigen::kroneckerProduct(id, b);
  }
  // corner constraint x = q x q
  system.bottomRows(nn) =
      Eigen::kroneckerProduct(id, id) -
      Eigen::kroneckerProduct(q.transpose(), q);
  const Subspace ns = null_space(system, tol);
  std::vector<Matrix> comm;
  for (Eigen::Index l = 0; l < ns.dim(); ++l) {
    comm.push_back(unvectorize(ns.basis.col(l), n, n));
  }
  return comm;
}

// Solutions T of b T = T pi(b), an N x n_i matrix basis of the intertwiner
// space Hom_A(irrep copy, ambient).
std::vector<Matrix> intertwiner_space(const std::vector<Matrix>& corner_basis,
                                      const Matrix& q, const Matrix& w,
                                      const ToleranceConfig& tol) {
  const Eigen::Index n = q.rows();
  const Eigen::Index ni = w.cols();
  const Eigen::Index vars = n * ni;
  const Matrix id_ni = Matrix::Identity(ni, ni);
  const Matrix id_n = Matrix::Identity(n, n);
  std::vector<Matrix> constraints = corner_basis;
  constraints.push_back(q);  // forces T = q T via pi(q) = I
  Matrix system(static_cast<Eigen::Index>(constraints.size()) * vars, vars);
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    const Matrix& b = constraints[j];
    const Matrix pib = w.adjoint() * b * w;
    system.block(static_cast<Eigen::Index>(j) * vars, 0, vars, vars) =
        Eigen::kroneckerProduct(id_ni, b) -
        Eigen::kroneckerProduct(pib.transpose(), id_n);
  }
  const Subspace ns = null_space(system, tol);
  std::vector<Matrix> space;
  for (Eigen::Index l = 0; l < ns.dim(); ++l) {
    space.push_back(unvectorize(ns.basis.col(l), n, ni));
  }
  return space;
}

// Turns an intertwiner basis into isometries with mutually orthogonal
// ranges: T_a* T_b = delta_ab I after whitening by the Gram matrix.
std::vector<Matrix> orthonormal_intertwiners(const std::vector<Matrix>& ts,
                                             Eigen::Index ni,
                                             const ToleranceConfig& tol) {
  const Eigen::Index m = static_cast<Eigen::Index>(ts.size());
  Matrix gram(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      gram(a, b) = trace_inner(ts[a], ts[b]) / static_cast<double>(ni);
    }
  }
  const EigResult eig = hermitian_eig(gram, tol);
  Matrix inv_sqrt = Matrix::Zero(m, m);
  for (Eigen::Index k = 0; k < m; ++k) {
    if (eig.eigenvalues(k) <= 0.0) {
      throw DegenerateSample("intertwiner Gram matrix not positive");
    }
    inv_sqrt += eig.eigenvectors.col(k) * eig.eigenvectors.col(k).adjoint() /
                std::sqrt(eig.eigenvalues(k));
  }
  std::vector<Matrix> out;
  for (Eigen::Index b = 0; b < m; ++b) {
    Matrix t = Matrix::Zero(ts[0].rows(), ts[0].cols());
    for (Eigen::Index a = 0; a < m; ++a) {
      t += ts[a] * inv_sqrt(a, b);
    }
    out.push_back(std::move(t));
  }
  return out;
}

Eigen::Index support_min_index(const Matrix& q, double tol_eq) {
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    if (q.col(j).norm() > tol_eq) {
      return j;
    }
  }
  return q.cols();
}

// One attempt at the full block decomposition; throws DegenerateSample when
// the generic draw fails to separate blocks.
void decompose_once(FdCStarAlgebra& alg, Rng& rng) {
  const Eigen::Index n = alg.ambient_dim;
  const ToleranceConfig& tol = alg.tol;
  alg.blocks.clear();

  if (alg.dim() == 0) {
    alg.block_unitary = Matrix::Identity(n, n);
    return;
  }

  const std::vector<Matrix> center =
      center_selfadjoint_span(alg.basis, n, tol);
  // Complex dimension of the center = number of blocks.
  const Eigen::Index k =
      static_cast<Eigen::Index>(
          matrix_span_basis(center, n, tol).size());

  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix z = Matrix::Zero(n, n);
  for (const auto& h : center) {
    z += gauss(rng) * h;
  }

  std::vector<Matrix> central_projs;
  for (auto& [lambda, p] : eigenvalue_clusters(z, tol)) {
    const double support_overlap = (p * alg.unit - p).norm();
    if (support_overlap > tol.tol_eq * std::max(1.0, p.norm())) {
      continue;  // cluster that meets the kernel of the unit
    }
    if (!in_span(alg.basis, p, tol.tol_eq)) {
      throw DegenerateSample("central spectral projection left the algebra");
    }
    central_projs.push_back(p);
  }
  if (static_cast<Eigen::Index>(central_projs.size()) != k) {
    throw DegenerateSample("eigenvalue clusters do not match center dimension");
  }
  Matrix sum_q = Matrix::Zero(n, n);
  for (const auto& q : central_projs) {
    sum_q += q;
  }
  if ((sum_q - alg.unit).norm() > tol.tol_eq * std::max(1.0, alg.unit.norm())) {
    throw DegenerateSample("central projections do not sum to the unit");
  }

  std::sort(central_projs.begin(), central_projs.end(),
            [&](const Matrix& a, const Matrix& b) {
              return support_min_index(a, tol.tol_eq) <
                     support_min_index(b, tol.tol_eq);
            });

  alg.block_unitary = Matrix::Zero(n, n);
  Eigen::Index offset = 0;
  int index = 0;
  for (const auto& q : central_projs) {
    BlockDescriptor blk;
    blk.index = index++;
    blk.central_projection = q;
    blk.unitary_offset = offset;

    std::vector<Matrix> corner_mats;
    for (const auto& b : alg.basis) {
      corner_mats.push_back(q * b * q);
    }
    const std::vector<Matrix> corner_basis =
        matrix_span_basis(corner_mats, n, tol);
    const Eigen::Index corner_dim =
        static_cast<Eigen::Index>(corner_basis.size());
    const auto ni = static_cast<Eigen::Index>(
        std::llround(std::sqrt(static_cast<double>(corner_dim))));
    if (ni * ni != corner_dim) {
      throw DegenerateSample("corner dimension is not a perfect square");
    }
    const auto rank_q =
        static_cast<Eigen::Index>(std::llround(q.trace().real()));
    if (rank_q % ni != 0) {
      throw DegenerateSample("central projection rank incompatible with block");
    }
    blk.n = ni;
    blk.multiplicity = rank_q / ni;

    // Minimal projection of the commutant picks out one irrep copy.
    Matrix r;
    if (blk.multiplicity == 1) {
      r = q;
    } else {
      const std::vector<Matrix> comm = corner_commutant(alg.basis, q, tol);
      if (static_cast<Eigen::Index>(comm.size()) !=
          blk.multiplicity * blk.multiplicity) {
        throw DegenerateSample("corner commutant has unexpected dimension");
      }
      Matrix y = Matrix::Zero(n, n);
      for (const auto& c : comm) {
        y += gauss(rng) * ((c + c.adjoint()) / 2.0);
        y += gauss(rng) * ((c - c.adjoint()) * Complex(0.0, -0.5));
      }
      r = Matrix::Zero(n, n);
      bool found = false;
      for (auto& [lambda, p] : eigenvalue_clusters(y, tol)) {
        if (std::abs(lambda) < 1e-8) {
          continue;
        }
        const auto rank_p =
            static_cast<Eigen::Index>(std::llround(p.trace().real()));
        if (rank_p == ni) {
          r = p;
          found = true;
          break;
        }
      }
      if (!found) {
        throw DegenerateSample("no minimal commutant projection isolated");
      }
    }
    const Subspace copy = range_space(r, tol);
    if (copy.dim() != ni) {
      throw DegenerateSample("irrep copy has wrong dimension");
    }
    const Matrix w = copy.basis;

    std::vector<Matrix> ts = intertwiner_space(corner_basis, q, w, tol);
    if (static_cast<Eigen::Index>(ts.size()) != blk.multiplicity) {
      throw DegenerateSample("intertwiner space has unexpected dimension");
    }
    ts = orthonormal_intertwiners(ts, ni, tol);
    blk.irrep_isometry = ts[0];

    for (Eigen::Index rr = 0; rr < ni; ++rr) {
      for (Eigen::Index a = 0; a < blk.multiplicity; ++a) {
        alg.block_unitary.col(offset + rr * blk.multiplicity + a) =
            ts[static_cast<std::size_t>(a)].col(rr);
      }
    }
    offset += ni * blk.multiplicity;
    alg.blocks.push_back(std::move(blk));
  }

  // Pad with the kernel of the unit to complete the unitary.
  const Subspace kernel =
      null_space(alg.unit, tol);
  if (offset + kernel.dim() != n) {
    throw DegenerateSample("block column count does not fill the ambient space");
  }
  alg.block_unitary.rightCols(kernel.dim()) = kernel.basis;

  const Matrix uu =
      alg.block_unitary.adjoint() * alg.block_unitary - Matrix::Identity(n, n);
  if (uu.norm() > tol.tol_ortho * n) {
    throw DegenerateSample("block unitary failed the orthonormality check");
  }

  // Reconstruction check: every basis element must be block aligned.
  for (const auto& b : alg.basis) {
    Matrix expected = Matrix::Zero(n, n);
    for (const auto& blk : alg.blocks) {
      const Matrix pib = blk.irrep_isometry.adjoint() * b * blk.irrep_isometry;
      const Matrix block =
          Eigen::kroneckerProduct(
              pib, Matrix::Identity(blk.multiplicity, blk.multiplicity));
      expected.block(0, 0, n, n) +=
          alg.block_unitary.middleCols(blk.unitary_offset,
                                       blk.n * blk.multiplicity) *
          block *
          alg.block_unitary.middleCols(blk.unitary_offset,
                                       blk.n * blk.multiplicity)
              .adjoint();
    }
    if ((expected - b).norm() > tol.tol_eq * std::max(1.0, b.norm())) {
      throw DegenerateSample("block reconstruction mismatch");
    }
  }
}

void decompose(FdCStarAlgebra& alg) {
  Rng rng(alg.tol.rng_seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      decompose_once(alg, rng);
      return;
    } catch (const DegenerateSample&) {
      if (attempt == 7) {
        throw;
      }
    }
  }
}

}  // namespace

Vector FdCStarAlgebra::coefficients(const Matrix& x) const {
  if (!member(x)) {
    throw NotInAlgebra("element outside the algebra span");
  }
  return span_coefficients(basis, x);
}

bool FdCStarAlgebra::member(const Matrix& x) const {
  if (x.rows() != ambient_dim || x.cols() != ambient_dim) {
    return false;
  }
  return membership_residual(x) <= tol.tol_eq * std::max(x.norm(), 1.0);
}

double FdCStarAlgebra::membership_residual(const Matrix& x) const {
  return span_residual(basis, x);
}

Matrix FdCStarAlgebra::irrep(int block_index, const Matrix& x) const {
  const auto& blk = blocks.at(static_cast<std::size_t>(block_index));
  return blk.irrep_isometry.adjoint() * x * blk.irrep_isometry;
}

Matrix FdCStarAlgebra::embed_irrep(int block_index, const Matrix& m) const {
  const auto& blk = blocks.at(static_cast<std::size_t>(block_index));
  if (m.rows() != blk.n || m.cols() != blk.n) {
    throw DimensionMismatch("embed_irrep: wrong irrep dimension");
  }
  const Matrix u =
      block_unitary.middleCols(blk.unitary_offset, blk.n * blk.multiplicity);
  const Matrix block = Eigen::kroneckerProduct(
      m, Matrix::Identity(blk.multiplicity, blk.multiplicity));
  return u * block * u.adjoint();
}

AlgebraPtr generate_algebra(Eigen::Index ambient_dim,
                            const std::vector<Matrix>& generators,
                            const ToleranceConfig& tol,
                            Eigen::Index ambient_cap) {
  if (ambient_dim > ambient_cap) {
    throw AmbientTooLarge("ambient dimension exceeds the configured cap");
  }
  auto alg = std::make_shared<FdCStarAlgebra>();
  alg->ambient_dim = ambient_dim;
  alg->tol = tol;

  std::vector<Matrix> span;
  for (const auto& g : generators) {
    if (g.rows() != ambient_dim || g.cols() != ambient_dim) {
      throw DimensionMismatch("generator has wrong ambient dimension");
    }
    check_finite(g);
    span.push_back(g);
    span.push_back(g.adjoint());
  }
  std::vector<Matrix> basis = matrix_span_basis(span, ambient_dim, tol);
  // Iterate span <- span + span*span + span* until the dimension stabilizes.
  while (true) {
    std::vector<Matrix> extended = basis;
    for (const auto& a : basis) {
      extended.push_back(a.adjoint());
      for (const auto& b : basis) {
        extended.push_back(a * b);
      }
    }
    std::vector<Matrix> next = matrix_span_basis(extended, ambient_dim, tol);
    if (next.size() == basis.size()) {
      basis = std::move(next);
      break;
    }
    basis = std::move(next);
  }
  alg->basis = std::move(basis);
  alg->unit = support_unit(alg->basis, ambient_dim, tol);
  for (const auto& b : alg->basis) {
    if ((alg->unit * b - b).norm() > tol.tol_eq * std::max(1.0, b.norm()) ||
        (b * alg->unit - b).norm() > tol.tol_eq * std::max(1.0, b.norm())) {
      throw DegenerateSample("support unit does not act as identity");
    }
  }
  decompose(*alg);

  Eigen::Index dim_check = 0;
  for (const auto& blk : alg->blocks) {
    dim_check += blk.n * blk.n;
  }
  if (dim_check != alg->dim()) {
    throw DegenerateSample("sum of n_i^2 does not match the algebra dimension");
  }
  return alg;
}

Ideal ideal_from_blocks(const AlgebraPtr& a, const std::set<int>& block_set) {
  Matrix q = Matrix::Zero(a->ambient_dim, a->ambient_dim);
  for (int i : block_set) {
    q += a->blocks.at(static_cast<std::size_t>(i)).central_projection;
  }
  std::vector<Matrix> gens;
  for (const auto& b : a->basis) {
    gens.push_back(q * b * q);
  }
  Ideal ideal;
  ideal.parent = a;
  ideal.block_set = block_set;
  ideal.as_algebra = generate_algebra(a->ambient_dim, gens, a->tol);
  return ideal;
}

std::vector<Ideal> enumerate_ideals(const AlgebraPtr& a) {
  const Eigen::Index k = a->block_count();
  std::vector<Ideal> ideals;
  for (std::uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    std::set<int> subset;
    for (Eigen::Index i = 0; i < k; ++i) {
      if (mask & (1ULL << i)) {
        subset.insert(static_cast<int>(i));
      }
    }
    ideals.push_back(ideal_from_blocks(a, subset));
  }
  return ideals;
}

Quotient quotient(const AlgebraPtr& a, const Ideal& i) {
  Matrix qc = Matrix::Zero(a->ambient_dim, a->ambient_dim);
  for (const auto& blk : a->blocks) {
    if (!i.block_set.count(blk.index)) {
      qc += blk.central_projection;
    }
  }
  std::vector<Matrix> gens;
  for (const auto& b : a->basis) {
    gens.push_back(qc * b * qc);
  }
  Quotient q;
  q.quotient_projection = qc;
  q.algebra = generate_algebra(a->ambient_dim, gens, a->tol);
  return q;
}

std::set<int> hull(const AlgebraPtr& a, const std::vector<Matrix>& elements) {
  for (const auto& x : elements) {
    if (!a->member(x)) {
      throw NotInAlgebra("hull: element outside the algebra");
    }
  }
  std::set<int> out;
  for (const auto& blk : a->blocks) {
    bool vanishes = true;
    for (const auto& x : elements) {
      if (a->irrep(blk.index, x).norm() > a->tol.tol_eq) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) {
      out.insert(blk.index);
    }
  }
  return out;
}

HereditarySubalgebra hereditary_from_projection(const AlgebraPtr& a,
                                                const Matrix& p) {
  const double scale = std::max(1.0, p.norm());
  if ((p - p.adjoint()).norm() > a->tol.tol_eq * scale ||
      (p * p - p).norm() > a->tol.tol_eq * scale) {
    throw NotProjection("hereditary_from_projection: not a projection");
  }
  if (!a->member(p)) {
    throw NotInAlgebra("hereditary_from_projection: projection not in algebra");
  }
  HereditarySubalgebra h;
  h.parent = a;
  h.unit_p = p;
  std::vector<Matrix> gens;
  for (const auto& b : a->basis) {
    gens.push_back(p * b * p);
  }
  h.as_algebra = generate_algebra(a->ambient_dim, gens, a->tol);
  for (const auto& blk : a->blocks) {
    h.per_block_projection.push_back(a->irrep(blk.index, p));
    if (h.per_block_projection.back().norm() > a->tol.tol_eq) {
      h.spectrum.insert(blk.index);
    }
  }
  h.generated_ideal = ideal_from_blocks(a, h.spectrum).as_algebra;

  // Lemma check: the generated ideal equals the intersection of all
  // primitive ideals containing B, computed honestly as a span intersection.
  if (h.spectrum.size() < a->blocks.size()) {
    Subspace inter{a->ambient_dim * a->ambient_dim, Matrix()};
    bool first = true;
    for (const auto& blk : a->blocks) {
      if (h.spectrum.count(blk.index)) {
        continue;  // ker pi_i only for blocks in hull(B)
      }
      std::set<int> rest;
      for (const auto& other : a->blocks) {
        if (other.index != blk.index) {
          rest.insert(other.index);
        }
      }
      const Ideal ker = ideal_from_blocks(a, rest);
      std::vector<Vector> vecs;
      for (const auto& b : ker.as_algebra->basis) {
        vecs.push_back(vectorize(b));
      }
      const Subspace s = orthonormalize(vecs, a->tol);
      inter = first ? s : intersect(inter, s, a->tol);
      first = false;
    }
    std::vector<Vector> gvecs;
    for (const auto& b : h.generated_ideal->basis) {
      gvecs.push_back(vectorize(b));
    }
    const Subspace gspan = orthonormalize(gvecs, a->tol);
    if (!same_span(inter, gspan, 1e-7)) {
      throw UkbError("generated ideal disagrees with the hull intersection");
    }
  }
  return h;
}

HereditaryCheck is_hereditary(const AlgebraPtr& a, const AlgebraPtr& b,
                              int witness_attempts) {
  for (const auto& x : b->basis) {
    if (!a->member(x)) {
      throw NotSubalgebra("is_hereditary: not a subalgebra");
    }
  }
  const Matrix p = b->unit;
  std::vector<Matrix> corner;
  for (const auto& x : a->basis) {
    corner.push_back(p * x * p);
  }
  const std::vector<Matrix> corner_basis =
      matrix_span_basis(corner, a->ambient_dim, a->tol);

  HereditaryCheck result;
  result.hereditary = corner_basis.size() == b->basis.size();
  if (result.hereditary) {
    for (const auto& x : corner_basis) {
      if (!b->member(x)) {
        result.hereditary = false;
        break;
      }
    }
  }
  if (result.hereditary) {
    return result;
  }

  Rng rng(a->tol.rng_seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int attempt = 0; attempt < witness_attempts; ++attempt) {
    Matrix g = Matrix::Zero(a->ambient_dim, a->ambient_dim);
    for (const auto& x : a->basis) {
      g += Complex(gauss(rng), gauss(rng)) * x;
    }
    const Matrix z = g.adjoint() * g;  // positive element of A
    const double znorm = operator_norm(z);
    if (znorm < 1e-12) {
      continue;
    }
    const Matrix x = p * z * p / znorm;  // 0 <= x <= p
    if (!b->member(x)) {
      result.witness = HereditaryWitness{x, p};
      break;
    }
  }
  return result;
}

bool is_ideal_subalgebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  for (const auto& x : b->basis) {
    if (!a->member(x)) {
      return false;
    }
  }
  for (const auto& x : a->basis) {
    for (const auto& y : b->basis) {
      if (!b->member(x * y) || !b->member(y * x)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace ukb
