#pragma once

#include <string>
#include <vector>

namespace k3fock::verify {

struct CatalogueEntry {
  std::string name;
  std::string formula;
  std::string bound;
};

/// Operator constructors with their formulas and truncation bounds.
const std::vector<CatalogueEntry>& operator_catalogue();

/// The catalogue file: constructors, then one line per check family with its
/// formula anchor.
std::string catalogue_text();

/// Check families listed in a catalogue file's check section.
std::vector<std::string> catalogue_families(const std::string& text);

}  // namespace k3fock::verify
