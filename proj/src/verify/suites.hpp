#pragma once

#include <string>
#include <vector>

#include "k3fock/verify/checks.hpp"

namespace k3fock::verify::detail {

// Each returns the checks of the named suite, or nothing for other names.
std::vector<Check> basic_suite(const std::string& suite);
std::vector<Check> lie_suite(const std::string& suite);
std::vector<Check> mult_suite(const std::string& suite);

}  // namespace k3fock::verify::detail
