#pragma once

#include <stdexcept>
#include <string>

namespace lorenz {

/// Malformed textual input (word grammar, CLI ranges).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed value that violates an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace lorenz
