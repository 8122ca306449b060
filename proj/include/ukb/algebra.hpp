#pragma once

#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "ukb/linalg.hpp"
#include "ukb/types.hpp"

namespace ukb {

// One point of the spectrum: an irreducible block M_n appearing with
// multiplicity m inside the ambient M_N.
struct BlockDescriptor {
  int index = 0;              // spectrum label
  Eigen::Index n = 0;         // irreducible dimension
  Eigen::Index multiplicity = 0;
  Matrix central_projection;  // q_i, N x N
  Matrix irrep_isometry;      // N x n, selects one copy of the irrep space
  Eigen::Index unitary_offset = 0;  // first column of this block in block_unitary
};

// A *-closed subalgebra of M_N with its block decomposition. Immutable after
// construction; treat as a value behind shared_ptr.
class FdCStarAlgebra {
 public:
  Eigen::Index ambient_dim = 0;            // N
  std::vector<Matrix> basis;               // HS-orthonormal, spans the algebra
  Matrix unit;                             // identity of the algebra (<= I_N)
  std::vector<BlockDescriptor> blocks;
  Matrix block_unitary;                    // N x N, aligns to sum of M_n (x) I_m
  ToleranceConfig tol;

  Eigen::Index dim() const { return static_cast<Eigen::Index>(basis.size()); }
  Eigen::Index block_count() const {
    return static_cast<Eigen::Index>(blocks.size());
  }

  // Hilbert-Schmidt coefficients of x on the algebra basis; throws
  // NotInAlgebra when the projection residual exceeds tol_eq * |x|.
  Vector coefficients(const Matrix& x) const;
  bool member(const Matrix& x) const;
  double membership_residual(const Matrix& x) const;

  // pi_i(x) = W_i* x W_i in the irreducible picture of block i.
  Matrix irrep(int block_index, const Matrix& x) const;

  // The element of the algebra whose irrep is `m` on block i and 0 elsewhere.
  Matrix embed_irrep(int block_index, const Matrix& m) const;
};

using AlgebraPtr = std::shared_ptr<const FdCStarAlgebra>;

struct Ideal {
  AlgebraPtr parent;
  std::set<int> block_set;  // the spectrum subset  A^I
  AlgebraPtr as_algebra;
};

struct HereditarySubalgebra {
  AlgebraPtr parent;
  std::vector<Matrix> per_block_projection;  // p_i in block i's irrep picture
  AlgebraPtr as_algebra;                     // B = pAp
  Matrix unit_p;                             // p, N x N
  AlgebraPtr generated_ideal;                // ideal generated by B
  std::set<int> spectrum;                    // A^B = { i : p_i != 0 }
};

inline constexpr Eigen::Index kDefaultAmbientCap = 64;

// Smallest *-closed, multiplication-closed linear span containing the
// generators, with unit and block decomposition computed.
AlgebraPtr generate_algebra(Eigen::Index ambient_dim,
                            const std::vector<Matrix>& generators,
                            const ToleranceConfig& tol = {},
                            Eigen::Index ambient_cap = kDefaultAmbientCap);

// All 2^k closed ideals, one per subset of the spectrum, ordered by the
// subset's bitmask over ascending block indices.
std::vector<Ideal> enumerate_ideals(const AlgebraPtr& a);

Ideal ideal_from_blocks(const AlgebraPtr& a, const std::set<int>& block_set);

struct Quotient {
  AlgebraPtr algebra;
  // The block-deletion *-homomorphism h : A -> A/I, realized on the ambient
  // space by compression with the complementary central projection.
  Matrix quotient_projection;
  Matrix apply(const Matrix& x) const {
    return quotient_projection * x * quotient_projection;
  }
};

Quotient quotient(const AlgebraPtr& a, const Ideal& i);

// hull(s) = { i : pi_i(x) = 0 for all x in s }.
std::set<int> hull(const AlgebraPtr& a, const std::vector<Matrix>& elements);

HereditarySubalgebra hereditary_from_projection(const AlgebraPtr& a,
                                                const Matrix& p);

struct HereditaryWitness {
  Matrix x;  // 0 <= x <= y, x outside b
  Matrix y;  // y inside b
};

struct HereditaryCheck {
  bool hereditary = false;
  std::optional<HereditaryWitness> witness;
};

// True iff b = pAp for p the unit of b; on failure searches for a witness
// pair over random positive elements compressed under b's unit.
HereditaryCheck is_hereditary(const AlgebraPtr& a, const AlgebraPtr& b,
                              int witness_attempts = 32);

bool is_ideal_subalgebra(const AlgebraPtr& a, const AlgebraPtr& b);

}  // namespace ukb
