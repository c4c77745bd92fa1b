#pragma once

#include <stdexcept>
#include <string>

namespace wap {

/// Malformed user input: bad word text, unknown names, zero exponents.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A letter fell outside the alphabet a morphism or word was built for.
class DomainError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// An operation was called on an object that does not satisfy its contract,
/// e.g. a fixed point requested from a non-prolongeable morphism.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested result was not reached within the scanned prefix or work
/// budget. Never a refutation.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wap
