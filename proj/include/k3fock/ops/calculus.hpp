#pragma once

#include <vector>

#include "k3fock/taut/ring.hpp"

namespace k3fock::ops {

// Class-level calculus behind the commutators of h, h_αβ and h_αδ with
// Nakajima words and G-operators. Indices are 0-based; "•" is a fresh copy
// of S that gets integrated out.

/// ∫_• Φ_• over the first index: A*(S × S^l) -> A*(S^l).
taut::SurfaceClass integrate_first(const taut::SurfaceClass& phi);

/// Σ_{i in idx} ∫_• Φ_{..•..}(c_i - c_•), the index i of Φ moved to •.
taut::SurfaceClass bar(const taut::TautRing& ring, const taut::SurfaceClass& phi, const std::vector<int>& idx);

/// Σ_{i in idx} ∫_• Φ_{..•..}(α_i β_• - α_• β_i).
taut::SurfaceClass double_bar(const taut::TautRing& ring, const taut::SurfaceClass& phi,
                              const std::vector<int>& idx, const taut::SurfaceClass& alpha,
                              const taut::SurfaceClass& beta);

/// The first `count` indices.
std::vector<int> leading(int count);

/// Γ' = Σ (d_i - 1)Γ + bar over all indices; h̃(univ_ds(Γ)) = univ_ds(Γ').
taut::SurfaceClass h_tilde_shift(const taut::TautRing& ring, const std::vector<int>& ds,
                                 const taut::SurfaceClass& gamma);

/// Γ' = double bar over all indices; h_αβ(univ_ds(Γ)) = univ_ds(Γ').
taut::SurfaceClass h_alpha_beta_shift(const taut::TautRing& ring, const taut::SurfaceClass& gamma,
                                      const taut::SurfaceClass& alpha, const taut::SurfaceClass& beta);

/// x (arity 1) placed at index i of S^k.
taut::SurfaceClass place(const taut::SurfaceClass& x, int i, int k);

/// Δ_{idx} γ_p on S^{k+l} for γ over S × S^l: the first index of γ sits at
/// p, its other indices at k, k+1, ...
taut::SurfaceClass diagonal_times(const taut::TautRing& ring, int k, const std::vector<int>& idx,
                                  const taut::SurfaceClass& gamma, int p);

/// Σ_{(x,y)} Σ_{i<j} Δ_{[k]-{i,j}} (xγ)_{≠i,j} Δ_ij y_i, (x,y) in {(α,1),(1,α)}; k >= 3.
taut::SurfaceClass cycle_a(const taut::TautRing& ring, int k, const taut::SurfaceClass& gamma,
                           const taut::SurfaceClass& alpha);
/// Σ_{(x,y)} Σ_i Δ_{[k]-{i}} (xγ)_{≠i} y_i; k >= 2.
taut::SurfaceClass cycle_b(const taut::TautRing& ring, int k, const taut::SurfaceClass& gamma,
                           const taut::SurfaceClass& alpha);

/// Expansion of cycle_a in products of point classes, single diagonals and
/// the integrals ∫γ, ∫γα, ∫γc.
taut::SurfaceClass cycle_a_expanded(const taut::TautRing& ring, int k, const taut::SurfaceClass& gamma,
                                    const taut::SurfaceClass& alpha);
taut::SurfaceClass cycle_b_expanded(const taut::TautRing& ring, int k, const taut::SurfaceClass& gamma,
                                    const taut::SurfaceClass& alpha);

}  // namespace k3fock::ops
