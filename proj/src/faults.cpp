#include "k3fock/faults.hpp"

#include <array>
#include <atomic>
#include <utility>

namespace k3fock {
namespace {

std::atomic<Fault> g_fault{Fault::kNone};

constexpr std::array<std::pair<Fault, std::string_view>, 11> kNames{{
    {Fault::kNone, "none"},
    {Fault::kFlipDiagonalDivisorSign, "flip-diagonal-divisor-sign"},
    {Fault::kAnnihilationSign, "annihilation-sign"},
    {Fault::kDropAutomorphismFactor, "drop-automorphism-factor"},
    {Fault::kUntransposedProjector, "untransposed-projector"},
    {Fault::kDropLqwPointTerm, "drop-lqw-point-term"},
    {Fault::kDeltaSelfPairingSign, "delta-self-pairing-sign"},
    {Fault::kBarPointSign, "bar-point-sign"},
    {Fault::kDoubleDiagonalZero, "double-diagonal-zero"},
    {Fault::kChernPointCoefficient, "chern-point-coefficient"},
    {Fault::kTableShift, "table-shift"},
}};

}  // namespace

Fault active_fault() { return g_fault.load(std::memory_order_relaxed); }

FaultGuard::FaultGuard(Fault f) : previous_(g_fault.exchange(f)) {}

FaultGuard::~FaultGuard() { g_fault.store(previous_); }

std::string_view fault_name(Fault f) {
  for (const auto& [fault, name] : kNames) {
    if (fault == f) return name;
  }
  return "unknown";
}

std::optional<Fault> parse_fault(std::string_view name) {
  for (const auto& [fault, n] : kNames) {
    if (n == name) return fault;
  }
  return std::nullopt;
}

std::vector<Fault> all_faults() {
  std::vector<Fault> out;
  for (const auto& [fault, name] : kNames) {
    if (fault != Fault::kNone) out.push_back(fault);
  }
  return out;
}

}  // namespace k3fock
