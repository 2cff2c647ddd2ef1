#include "k3fock/verify/catalogue.hpp"

#include <set>
#include <sstream>

#include "k3fock/verify/checks.hpp"

namespace k3fock::verify {

namespace {

constexpr const char* kTruncated = "normally ordered words with annihilation weight <= n";

}  // namespace

const std::vector<CatalogueEntry>& operator_catalogue() {
  static const std::vector<CatalogueEntry> entries{
      {"op_q", "q_{w_1}...q_{w_t}(Γ)", "exact"},
      {"op_h", "h = Σ_{k>0} (1/k) q_k q_{-k}(c_2 - c_1)", kTruncated},
      {"op_h_tilde", "h̃ = h + n Id", "level n only"},
      {"op_h_alpha_beta", "h_αβ = Σ_{k>0} (1/k) q_k q_{-k}(α_2 β_1 - α_1 β_2)", kTruncated},
      {"op_h_alpha_delta", "h_αδ = -1/2 Σ_{i+j+k=0} (1/k) :q_i q_j q_k(Δ_12 (α_1 + α_3)):", kTruncated},
      {"op_h_alpha_delta_virasoro", "h_αδ = Σ_{k≠0} (1/k) :L_k q_{-k}(α_1 + α_2):", kTruncated},
      {"op_e_alpha", "e_α = -Σ_{k>0} q_k q_{-k}(Δ_12 α_1)", kTruncated},
      {"op_e_delta", "e_δ = -1/6 Σ_{i+j+k=0} :q_i q_j q_k(Δ_123):", kTruncated},
      {"op_f_alpha", "f_α = -Σ_{k>0} (1/k^2) q_k q_{-k}(α_1 + α_2)", kTruncated},
      {"op_f_delta",
       "f_δ = -1/6 Σ_{i+j+k=0} :q_i q_j q_k(Δ_12/k^2 + Δ_13/j^2 + Δ_23/i^2 + 2c_1/(jk) + 2c_2/(ik) + 2c_3/(ij)):",
       kTruncated},
      {"slot_L", "L_k = 1/2 Σ_{i+j=k} :q_i q_j|_Δ:", kTruncated},
      {"slot_J",
       "J_k^d = d!(-Σ_{|λ|=k, l(λ)=d+1} q_λ|_Δ / λ! + Σ_{|λ|=k, l(λ)=d-1} (s(λ)+k^2-2)/λ! ρ^*(c) q_λ|_Δ)",
       kTruncated},
      {"slot_G", "G_d = J_0^{d-1}/(d-1)! - 2 ρ^*(c) J_0^{d-3}/(d-3)!", kTruncated},
      {"op_mult_universal", "G_{d_1}...G_{d_t}(Γ) = mult_{univ_{d_1..d_t}(Γ)}", kTruncated},
      {"op_mult_chern",
       "mult_{ch_k(Tan)} = 2G_{k+2}(1) + 4G_k(c) + Σ_{i+j=k+2} (-1)^{j+1} G_i G_j(Δ) + 2Σ_{i+j=k} (-1)^{j+1} G_i(c) G_j(c)",
       kTruncated},
      {"op_diagonal_decomposition", "Σ_{λ⊢n} (-1)^{l(λ)} / z(λ) q_λ q_{-λ}(Δ)", "level n only"},
      {"op_projector", "P_i = Σ_{|λ|+|μ|+|ν|=n, l(ν)-l(λ)=i} (-1)^{l(λ)+l(μ)+l(ν)} / (z(λ)z(μ)z(ν)) q_{λ,μ,ν} q_{-λ,-μ,-ν}, "
       "letter pairs joined by c_ann, Δ - c_1 - c_2, c_cre for λ, μ, ν", "level n only"},
      {"op_act", "e∧f -> h, e∧α -> e_α, e∧δ -> e_δ, α∧f -> f_α, δ∧f -> f_δ, α∧β -> h_αβ, α∧δ -> h_αδ", kTruncated},
  };
  return entries;
}

std::string catalogue_text() {
  std::ostringstream os;
  os << "# operators: name | formula | truncation\n";
  for (const auto& e : operator_catalogue()) os << e.name << " | " << e.formula << " | " << e.bound << "\n";
  os << "\n# checks: family | anchor\n";
  std::set<std::string> seen;
  for (const auto& suite : suite_names()) {
    for (const auto& c : suite_checks(suite)) {
      const std::string fam = family_of(c.id);
      if (seen.insert(fam).second) os << fam << " | " << c.anchor << "\n";
    }
  }
  return os.str();
}

std::vector<std::string> catalogue_families(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  bool in_checks = false;
  while (std::getline(in, line)) {
    if (line.rfind("# checks", 0) == 0) {
      in_checks = true;
      continue;
    }
    if (line.rfind("#", 0) == 0) {
      in_checks = false;
      continue;
    }
    if (!in_checks || line.empty()) continue;
    out.push_back(line.substr(0, line.find(" | ")));
  }
  return out;
}

}  // namespace k3fock::verify
