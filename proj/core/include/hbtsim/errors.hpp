#pragma once

#include <stdexcept>
#include <string>

namespace hbtsim {

// Bad run description: unknown keys, unparseable values, empty sweep ranges.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a hard resource bound (permanent order, Fock dimension).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Geometrically or algebraically ill-posed input: antipodal geodesic
// endpoints, zero-norm superpositions, vanishing mean counts.
struct DegenerateError : std::runtime_error {
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hbtsim
