#pragma once

#include <vector>

#include "k3fock/fock/partition.hpp"
#include "k3fock/ops/expr.hpp"

namespace k3fock::ops {

// Every constructor below takes a level bound n: the result is exact on
// A*(Hilb_m) for all m <= n. Infinite sums keep the normally ordered words
// whose annihilation letters sum to at most n; the others vanish there.
//
// Classes attached to words use 0-based indices internally; in the
// formulas below index i of Γ belongs to the i-th letter (1-based).

/// Generalized partition with signed parts, in normal order.
struct SignedPartition {
  fock::Word letters;   // positive parts descending, then negatives -1, -2, ...
  Rational inv_factorial;  // 1 / λ!, λ! = Π m_i!
  long s = 0;           // Σ λ_i²
};

/// All λ with |λ| = total, l(λ) = length and annihilation weight <= max_ann.
std::vector<SignedPartition> signed_partitions(int total, int length, int max_ann);

/// q_{w_1}...q_{w_t}(Γ), slot i of Γ attached to letter i.
OpExpr op_q(const fock::Word& w, const taut::SurfaceClass& gamma);

/// h = Σ_{k>0} (1/k) q_k q_{-k}(c_2 - c_1).
OpExpr op_h(const taut::TautRing& ring, int n);
/// h + n·Id, the shifted grading operator of level n (that level only).
OpExpr op_h_tilde(const taut::TautRing& ring, int n);
/// h_αβ = Σ_{k>0} (1/k) q_k q_{-k}(α_2 β_1 - α_1 β_2).
OpExpr op_h_alpha_beta(const taut::TautRing& ring, const taut::SurfaceClass& alpha,
                       const taut::SurfaceClass& beta, int n);
/// h_αδ = -1/2 Σ_{i+j+k=0} (1/k) :q_i q_j q_k(Δ_12 (α_1 + α_3)):.
OpExpr op_h_alpha_delta(const taut::TautRing& ring, const taut::SurfaceClass& alpha, int n);
/// h_αδ = Σ_{k≠0} (1/k) :L_k q_{-k}(α_1 + α_2):, the Virasoro form.
OpExpr op_h_alpha_delta_virasoro(const taut::TautRing& ring, const taut::SurfaceClass& alpha, int n);

/// e_α = -Σ_{k>0} q_k q_{-k}(Δ_12 α_1).
OpExpr op_e_alpha(const taut::TautRing& ring, const taut::SurfaceClass& alpha, int n);
/// e_δ = -1/6 Σ_{i+j+k=0} :q_i q_j q_k(Δ_123):.
OpExpr op_e_delta(const taut::TautRing& ring, int n);
/// f_α = -Σ_{k>0} (1/k²) q_k q_{-k}(α_1 + α_2).
OpExpr op_f_alpha(const taut::TautRing& ring, const taut::SurfaceClass& alpha, int n);
/// f_δ = -1/6 Σ_{i+j+k=0} :q_i q_j q_k(Δ_12/k² + Δ_13/j² + Δ_23/i²
///                                      + 2c_1/(jk) + 2c_2/(ik) + 2c_3/(ij)):.
OpExpr op_f_delta(const taut::TautRing& ring, int n);

// Slotted operators A*(Hilb) -> A*(Hilb × S), one open slot.

/// q_k with its index tied to the slot by the diagonal.
fock::Operator slot_q(const taut::TautRing& ring, int k);
/// L_k = 1/2 Σ_{i+j=k} :q_i q_j|_Δ:.
fock::Operator slot_L(const taut::TautRing& ring, int k, int n);
/// J_k^d = d!(-Σ_{|λ|=k, l=d+1} q_λ|_Δ / λ! + Σ_{|λ|=k, l=d-1} (s(λ)+k²-2)/λ! ρ*(c) q_λ|_Δ).
/// The second sum is empty when d = 1, so that J_k^1 = -L_k.
fock::Operator slot_J(const taut::TautRing& ring, int k, int d, int n);
/// G_d = J_0^{d-1}/(d-1)! - 2 ρ*(c) J_0^{d-3}/(d-3)!; zero for d <= 1.
fock::Operator slot_G(const taut::TautRing& ring, int d, int n);

OpExpr op_L(const taut::TautRing& ring, int k, const taut::SurfaceClass& gamma, int n);
OpExpr op_J(const taut::TautRing& ring, int k, int d, const taut::SurfaceClass& gamma, int n);
OpExpr op_G(const taut::TautRing& ring, int d, const taut::SurfaceClass& gamma, int n);

/// G_{d_1}...G_{d_t}(Γ): multiplication by univ_{d_1..d_t}(Γ).
OpExpr op_mult_universal(const taut::TautRing& ring, const std::vector<int>& ds,
                         const taut::SurfaceClass& gamma, int n);
/// The class 1_m = q_1(1)^m v / m!.
fock::FockVector fundamental_class(int m);
/// univ_{d_1..d_t}(Γ) on Hilb_m.
fock::FockVector universal_class(const taut::TautRing& ring, const std::vector<int>& ds,
                                 const taut::SurfaceClass& gamma, int m);

/// Multiplication by ch_k(Tan). For even k this is
///   2G_{k+2}(1) + 4G_k(c) + Σ_{i+j=k+2} (-1)^{j+1} G_i G_j(Δ) + 2Σ_{i+j=k} (-1)^{j+1} G_i(c) G_j(c);
/// for odd k the two linear terms are absent (ch + ch' has no odd part) and
/// the double sums cancel, so the operator is zero.
OpExpr op_mult_chern(const taut::TautRing& ring, int k, int n);

/// Σ_{λ ⊢ n} (-1)^{l(λ)} / z(λ) q_λ q_{-λ}(Δ), on level n only.
OpExpr op_diagonal_decomposition(const taut::TautRing& ring, int n);

/// P_i on level n; zero unless |i| <= n.
OpExpr op_projector(const taut::TautRing& ring, int i, int n);

}  // namespace k3fock::ops
