#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ukb/bundle.hpp"

namespace ukb {

// The geometry of a hereditary subalgebra B = pAp: its spectrum subset, the
// corner subspaces H_B,i = range pi_i(p), and the fiber correspondence
// between B's own bundle and the parent's.
struct HereditaryContext {
  AlgebraPtr parent;
  HereditarySubalgebra b;
  std::set<int> spectrum_b;                  // { i : p_i != 0 }
  std::map<int, Subspace> corner_subspace;   // H_B,i inside C^{n_i}
  std::map<int, int> b_block_of_parent;      // parent i -> B block j
  std::map<int, int> parent_block_of_b;      // B block j -> parent i
};

HereditaryContext make_hereditary_context(const AlgebraPtr& a,
                                          const Matrix& p);

// The unique pure extension of tau: rho(a) = tau(p a p).
State xi_extend(const HereditaryContext& ctx, const State& tau);

struct ThetaResult {
  double t = 0.0;    // rho(p), in (0, 1]
  State rho_prime;   // rho|_B / t, pure on B
};

ThetaResult theta(const HereditaryContext& ctx, const State& rho);

// Vector state at h = sqrt(t) x_{rho'} + sqrt(1-t) w for a proper corner.
State theta_preimage(const HereditaryContext& ctx, double t,
                     const State& rho_prime,
                     const std::optional<Vector>& w = std::nullopt);

// Closed form: 3 off the spectrum subset, kappa at t=0, sqrt2 arccos sqrt(t).
double distance_to_xi_image(const HereditaryContext& ctx, const State& rho);

// Direct minimization of the distance over sampled extensions, with local
// refinement; cross-validates the closed form.
double distance_to_xi_image_sampled(const HereditaryContext& ctx,
                                    const State& rho, int samples, Rng& rng);

enum class Region { OutsideSpectrum, OnImage, InsideDisk, BoundarySphere };

Region classify_state(const HereditaryContext& ctx, const State& rho);

struct SphereParam {
  Complex phase;                   // lambda in T
  ProjectivePoint orthogonal_point;  // [w] in P of C^{n_i} minus H_B,i
};

// Coordinates on the sphere S(Xi(mu); t): the gauge-fixed decomposition
// x_rho = cos(t/sqrt2) e^{i alpha} x_mu + sin(t/sqrt2) lambda w.
SphereParam upsilon(const HereditaryContext& ctx, const State& mu, double t,
                    const State& rho);
State upsilon_inverse(const HereditaryContext& ctx, const State& mu, double t,
                      const SphereParam& param);

struct HilbertFiber {
  std::vector<Matrix> left_ideal_basis;  // L = A p
  Subspace fiber;                        // Lambda_rho(L*) in the GNS space
};

HilbertFiber left_ideal_and_hilbert_fiber(const HereditaryContext& ctx,
                                          const State& rho);

// Xi(P(B)) as a subbundle: fibering over the spectrum subset, fiber images
// P_{H_B,i} closed, the bundle iso with P(B), and the ideal/equality clause.
CheckReport subbundle_check(const HereditaryContext& ctx, int samples,
                            Rng& rng);

}  // namespace ukb
