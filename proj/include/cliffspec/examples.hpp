#pragma once

#include "cliffspec/pauli.hpp"

#include <string>
#include <vector>

namespace cliffspec {

/// Ids of the built-in matrix triples: ex4.1 .. ex4.5 and "lemniscate".
const std::vector<std::string>& builtin_example_ids();

bool is_builtin_example(const std::string& id);

/// Throws validation_error for unknown ids.
HermitianTriple builtin_example(const std::string& id);

} // namespace cliffspec
