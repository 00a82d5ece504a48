#pragma once

#include <stdexcept>
#include <string>

namespace grptopo {

/// Malformed group spec, file, or serialization input.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Precondition violation (wrong provenance, non-normal subgroup, ...).
struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Order cap / face cap / subgroup cap exceeded.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grptopo
