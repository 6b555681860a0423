#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace relsig {

// Malformed input documents: bad JSON, wrong schema, out-of-range component
// indices, unparseable rational strings.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Semantic violations: non-semicoherent structures, broken vector
// preconditions, level-sum failures, mixed-up primal/dual values.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    empty_set_nonzero,   // phi(empty) != 0
    full_set_not_one,    // phi(C) != 1
    not_monotone,        // carries a witness pair (A, A + {i})
    precondition,        // vector-type boundary/sum condition failed
    level_sum,           // relative quality level sums != 1
    dimension_mismatch,  // component counts disagree
    role_mismatch,       // dual value passed where a primal one is required (or vice versa)
    bad_argument,        // e.g. reflection degree below the effective degree
  };

  ValidationError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ValidationError(Kind kind, const std::string& message, std::uint32_t witness_mask,
                  int witness_component)
      : std::runtime_error(message),
        kind_(kind),
        witness_mask_(witness_mask),
        witness_component_(witness_component) {}

  Kind kind() const { return kind_; }

  // Monotonicity witness: phi(witness_mask) = 1 but phi(witness_mask + {i}) = 0.
  std::uint32_t witness_mask() const { return witness_mask_; }
  int witness_component() const { return witness_component_; }

 private:
  Kind kind_;
  std::uint32_t witness_mask_ = 0;
  int witness_component_ = 0;
};

// Input exceeds a hard size cap (truth table width, oracle enumeration size).
class CapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace relsig
