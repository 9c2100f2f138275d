#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympsig {

/* Error taxonomy.
 *
 * invalid_input      malformed or out-of-contract arguments
 * not_lagrangian     a basis that fails the isotropy requirement
 * not_a_cocycle      piecewise data that violates the cocycle identity
 * precondition_error a structurally valid input outside an operation's
 *                    stated precondition (non-symplectic matrix,
 *                    non-closed monodromy)
 * resource_error     an explicit enumeration budget was exhausted
 * construction_bug   an internal invariant failed; never expected
 */

struct invalid_input : std::runtime_error {
  explicit invalid_input(const std::string& msg) : std::runtime_error(msg) {}
};

struct not_lagrangian : invalid_input {
  explicit not_lagrangian(const std::string& msg) : invalid_input(msg) {}
};

struct not_a_cocycle : invalid_input {
  explicit not_a_cocycle(const std::string& msg) : invalid_input(msg) {}
};

struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& msg)
      : std::runtime_error(msg) {}
};

struct resource_error : std::runtime_error {
  resource_error(const std::string& msg, std::size_t partial)
      : std::runtime_error(msg), partial_count(partial) {}
  std::size_t partial_count;
};

struct construction_bug : std::logic_error {
  explicit construction_bug(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace sympsig
