#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kanforge {

// Structural problems: bad arities, indices out of range, malformed input.
// Distinct from axiom violations, which are reported as values, not thrown.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A shape or map exceeds the truncation it would need.
struct DimensionError : StructuralError {
  using StructuralError::StructuralError;
};

// An enumerated set would exceed the configured element budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace budget {

// Default 10^6 elements per constructed set; KANFORGE_BUDGET overrides.
std::size_t limit();
void set_limit(std::size_t n);

// Throws BudgetError when `count` exceeds the limit. `what` names the
// offending construction so the abort message is deterministic.
void charge(std::size_t count, const std::string& what);

}  // namespace budget
}  // namespace kanforge
