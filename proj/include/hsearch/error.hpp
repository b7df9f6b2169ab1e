#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace hsearch {

enum class ErrorKind {
  invalid_modulus,
  non_invertible,
  invalid_argument,
  inapplicable_prime,
  internal_consistency,
  index_out_of_range,
  resource_limit,
  config_mismatch,
  parse,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), kind_(kind), index_(index) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Offending element position for batch operations.
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

}  // namespace hsearch
