#include "k3fock/verify/report.hpp"

#include <sstream>

namespace k3fock::verify {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kSkipped: return "skipped";
  }
  return "unknown";
}

bool Report::passed() const { return count(Status::kFail) == 0; }

int Report::count(Status s) const {
  int c = 0;
  for (const auto& r : results) c += r.status == s;
  return c;
}

nlohmann::ordered_json Report::to_json(bool timing) const {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["eq_anchor"] = r.anchor;
    j["params"] = r.params;
    j["status"] = status_name(r.status);
    if (r.witness) {
      j["witness"] = {{"instance", r.witness->instance},
                      {"basis_vector", r.witness->basis_vector},
                      {"lhs", r.witness->lhs},
                      {"rhs", r.witness->rhs}};
    }
    j["millis"] = timing ? r.millis : 0;
    out.push_back(std::move(j));
  }
  return out;
}

std::string Report::to_text(bool timing) const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << (r.status == Status::kPass ? "PASS" : r.status == Status::kFail ? "FAIL" : "SKIP") << "  " << r.id;
    if (timing) os << "  (" << r.millis << " ms)";
    os << "\n";
    if (r.witness) {
      os << "      anchor:   " << r.anchor << "\n";
      os << "      instance: " << r.witness->instance << "\n";
      os << "      at:       " << r.witness->basis_vector << "\n";
      os << "      lhs:      " << r.witness->lhs << "\n";
      os << "      rhs:      " << r.witness->rhs << "\n";
    }
  }
  os << count(Status::kPass) << " passed, " << count(Status::kFail) << " failed, " << count(Status::kSkipped)
     << " skipped\n";
  return os.str();
}

}  // namespace k3fock::verify
