#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace k3fock {

/// Deliberately broken rules used by the fault-injection fixtures. Each one
/// corrupts a single rule of the engine so that the suite relying on it must
/// report a failure with a witness.
enum class Fault {
  kNone,
  kFlipDiagonalDivisorSign,  // Δ·α_1 = α_1 c_2 - α_2 c_1
  kAnnihilationSign,         // contraction coefficient +k instead of -k
  kDropAutomorphismFactor,   // z(λ) = Π λ_i (no |Aut λ|)
  kUntransposedProjector,    // use π_r instead of its transpose in P_i
  kDropLqwPointTerm,         // drop the ρ*(c) partition sum of J_n^d
  kDeltaSelfPairingSign,     // (δ,δ) = 2n - 2
  kBarPointSign,             // bar operator uses c_• - c_i
  kDoubleDiagonalZero,       // Δ_ij^2 = 0 instead of 24 c_i c_j
  kChernPointCoefficient,    // 4 G_k(c) replaced by 2 G_k(c)
  kTableShift,               // report s + 1 in decomposition tables
};

/// Currently active fault (kNone in production use).
Fault active_fault();

/// Activates a fault for the lifetime of the guard. Not reentrant; the
/// engine must not be running concurrently in another thread.
class FaultGuard {
 public:
  explicit FaultGuard(Fault f);
  ~FaultGuard();
  FaultGuard(const FaultGuard&) = delete;
  FaultGuard& operator=(const FaultGuard&) = delete;

 private:
  Fault previous_;
};

inline bool fault_active(Fault f) { return active_fault() == f; }

std::string_view fault_name(Fault f);
std::optional<Fault> parse_fault(std::string_view name);
std::vector<Fault> all_faults();

}  // namespace k3fock
