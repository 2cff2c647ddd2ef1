#include "suite_util.hpp"

namespace k3fock::verify::detail {

MaybeWitness compare(const fock::Matrix& lhs, const fock::Matrix& rhs, const std::string& instance) {
  const auto col = lhs.first_difference(rhs);
  if (!col) return std::nullopt;
  const auto& key = lhs.source->keys[*col];
  return Witness{instance, fock::to_string(key), lhs.columns[*col].to_string(), rhs.columns[*col].to_string()};
}

MaybeWitness compare(const fock::FockVector& lhs, const fock::FockVector& rhs, const std::string& instance,
                     const std::string& where) {
  if (lhs == rhs) return std::nullopt;
  return Witness{instance, where, lhs.to_string(), rhs.to_string()};
}

MaybeWitness compare(const taut::SurfaceClass& lhs, const taut::SurfaceClass& rhs, const std::string& instance) {
  if (lhs == rhs) return std::nullopt;
  const taut::SurfaceClass diff = lhs - rhs;
  std::string where = diff.is_zero() ? "" : "coefficient of " + taut::to_string(diff.sorted_terms().front().first);
  return Witness{instance, where, taut::to_string(lhs), taut::to_string(rhs)};
}

fock::Matrix mat(const Context& ctx, const ops::OpExpr& op, int n) { return ops::matrix_of(ctx.space, op, n); }

fock::Matrix bracket(const Context& ctx, const ops::OpExpr& a, const ops::OpExpr& b, int n) {
  return mat(ctx, compose(a, b), n) - mat(ctx, compose(b, a), n);
}

std::vector<taut::SurfaceClass> divisors(const taut::TautRing& ring) {
  std::vector<taut::SurfaceClass> out;
  for (int j = 0; j < ring.lattice().rank(); ++j) out.push_back(ring.divisor(1, 0, j));
  return out;
}

std::vector<taut::SurfaceClass> basis_classes(const taut::TautRing& ring, int k) {
  std::vector<taut::SurfaceClass> out;
  for (const auto& m : ring.canonical_basis(k)) out.push_back(taut::SurfaceClass::from_monomial(m));
  return out;
}

std::string str(const taut::SurfaceClass& c) { return taut::to_string(c); }

Check make_check(const std::string& family, const std::string& anchor, nlohmann::ordered_json params,
                 std::function<MaybeWitness(const Context&)> run) {
  if (params.is_null()) params = nlohmann::ordered_json::object();
  Check c;
  c.id = family;
  if (!params.empty()) {
    c.id += "[";
    bool first = true;
    for (auto it = params.begin(); it != params.end(); ++it) {
      c.id += (first ? "" : ",") + it.key() + "=" + it.value().dump();
      first = false;
    }
    c.id += "]";
  }
  c.anchor = anchor;
  c.level = params.value("n", 0);
  c.d = params.value("d", 0);
  c.k = params.value("k", 0);
  c.len = params.value("len", 0);
  c.params = std::move(params);
  c.run = std::move(run);
  return c;
}

}  // namespace k3fock::verify::detail
