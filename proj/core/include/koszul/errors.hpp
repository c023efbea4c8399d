#pragma once

#include <stdexcept>
#include <string>

namespace koszul {

// Thrown when an enumeration would exceed the documented desk-scale caps
// (brute-force circuit search, lcm lattice, generator-order backtracking).
struct SizeCapError : std::runtime_error {
  explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace koszul
