#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace k3fock::verify {

enum class Status { kPass, kFail, kSkipped };

std::string_view status_name(Status s);

/// Where an identity broke: the instance, the basis vector (or class) it was
/// evaluated on and both sides, serialized.
struct Witness {
  std::string instance;
  std::string basis_vector;
  std::string lhs;
  std::string rhs;
};

struct CheckResult {
  std::string id;
  std::string anchor;
  nlohmann::ordered_json params;
  Status status = Status::kPass;
  std::optional<Witness> witness;  // present iff status == kFail
  long millis = 0;
};

struct Report {
  std::vector<CheckResult> results;  // sorted by id

  bool passed() const;
  int count(Status s) const;
  /// Array of {id, eq_anchor, params, status, witness?, millis}.
  nlohmann::ordered_json to_json(bool timing) const;
  std::string to_text(bool timing) const;
};

}  // namespace k3fock::verify
