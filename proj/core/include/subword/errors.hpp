#pragma once

#include <stdexcept>
#include <string>

namespace subword {

// Base class for everything the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside the domain of the operation (e.g. N <= q for the
// bracket, a symbol not in the alphabet, a walk that repeats a vertex).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured enumeration/memory budget would be exceeded. Never silently
// truncates; the message names the budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A checked 64-bit count overflowed.
class CountOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace subword
