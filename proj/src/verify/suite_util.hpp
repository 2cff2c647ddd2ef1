#pragma once

// Helpers shared by the suite definitions.

#include <optional>
#include <string>
#include <vector>

#include "k3fock/fock/matrix.hpp"
#include "k3fock/ops/expr.hpp"
#include "k3fock/verify/checks.hpp"

namespace k3fock::verify::detail {

using MaybeWitness = std::optional<Witness>;

MaybeWitness compare(const fock::Matrix& lhs, const fock::Matrix& rhs, const std::string& instance);
MaybeWitness compare(const fock::FockVector& lhs, const fock::FockVector& rhs, const std::string& instance,
                     const std::string& where = "");
MaybeWitness compare(const taut::SurfaceClass& lhs, const taut::SurfaceClass& rhs, const std::string& instance);

fock::Matrix mat(const Context& ctx, const ops::OpExpr& op, int n);
/// a∘b - b∘a with both evaluated as matrices between the right levels.
fock::Matrix bracket(const Context& ctx, const ops::OpExpr& a, const ops::OpExpr& b, int n);

/// Divisor basis classes of the configured lattice, on S.
std::vector<taut::SurfaceClass> divisors(const taut::TautRing& ring);
/// Canonical monomials of S^k as classes.
std::vector<taut::SurfaceClass> basis_classes(const taut::TautRing& ring, int k);

std::string str(const taut::SurfaceClass& c);

/// id "<family>[key=value,...]" over the integer params. Bounds are read
/// from the params n (level), d, k and len when present.
Check make_check(const std::string& family, const std::string& anchor, nlohmann::ordered_json params,
                 std::function<MaybeWitness(const Context&)> run);

}  // namespace k3fock::verify::detail
